#include "exactla.hpp"

#include <algorithm>
#include <cstdlib>

namespace lgt {

SpVec sparsify(const DVec& v) {
    SpVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) out.emplace_back(i, v[i]);
    return out;
}

DVec densify(const SpVec& v, int dim) {
    DVec out(dim, Rat(0));
    for (auto& [i, x] : v) out[i] = x;
    return out;
}

bool is_zero(const DVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

void axpy(SpVec& y, const Rat& c, const SpVec& x) {
    if (c == 0 || x.empty()) return;
    SpVec out;
    out.reserve(y.size() + x.size());
    size_t a = 0, b = 0;
    while (a < y.size() || b < x.size()) {
        if (b == x.size() || (a < y.size() && y[a].first < x[b].first)) {
            out.push_back(y[a++]);
        } else if (a == y.size() || x[b].first < y[a].first) {
            out.emplace_back(x[b].first, c * x[b].second);
            ++b;
        } else {
            Rat v = y[a].second + c * x[b].second;
            if (v != 0) out.emplace_back(y[a].first, v);
            ++a;
            ++b;
        }
    }
    y = std::move(out);
}

void RatMatrix::add(int r, int c, const Rat& v) {
    if (v == 0) return;
    auto& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != rw.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) rw.erase(it);
    } else {
        rw.insert(it, {c, v});
    }
}

Rat RatMatrix::get(int r, int c) const {
    for (auto& [j, v] : row[r])
        if (j == c) return v;
    return Rat(0);
}

size_t RatMatrix::nnz() const {
    size_t n = 0;
    for (auto& r : row) n += r.size();
    return n;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (auto& [j, v] : row[i]) t.row[j].emplace_back(i, v);
    return t;  // rows already sorted because i increases
}

DVec RatMatrix::apply(const DVec& x) const {
    DVec y(rows, Rat(0));
    for (int i = 0; i < rows; ++i)
        for (auto& [j, v] : row[i])
            if (x[j] != 0) y[i] += v * x[j];
    return y;
}

DVec RatMatrix::apply_transpose(const DVec& x) const {
    DVec y(cols, Rat(0));
    for (int i = 0; i < rows; ++i)
        if (x[i] != 0)
            for (auto& [j, v] : row[i]) y[j] += v * x[i];
    return y;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
    RatMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i) {
        std::map<int, Rat> acc;
        for (auto& [k, v] : row[i])
            for (auto& [j, w] : other.row[k]) acc[j] += v * w;
        for (auto& [j, v] : acc)
            if (v != 0) out.row[i].emplace_back(j, v);
    }
    return out;
}

bool RatMatrix::integral() const {
    for (auto& r : row)
        for (auto& [j, v] : r)
            if (v.get_den() != 1) return false;
    return true;
}

bool Echelon::add(const SpVec& v) {
    SpVec r = residue(v);
    if (r.empty()) return false;
    Rat inv = 1 / r.front().second;
    for (auto& [i, x] : r) x *= inv;
    pivot_of_col_[r.front().first] = static_cast<int>(pivot_rows_.size());
    pivot_rows_.push_back(std::move(r));
    return true;
}

SpVec Echelon::residue(const SpVec& v) const {
    SpVec r = v;
    while (!r.empty()) {
        auto it = pivot_of_col_.find(r.front().first);
        if (it == pivot_of_col_.end()) return r;  // leading col is free
        axpy(r, -r.front().second, pivot_rows_[it->second]);
    }
    return r;
}

Subspace kernel(const RatMatrix& A) {
    // forward elimination into echelon, then back-substitution per free column
    Echelon ech(A.cols);
    for (auto& r : A.row)
        if (!r.empty()) ech.add(r);
    Subspace out;
    out.ambient_dim = A.cols;
    const auto& piv = ech.pivots();
    // iterate pivot cols descending for back substitution
    std::vector<std::pair<int, const SpVec*>> prows;
    for (auto& [c, idx] : piv) prows.emplace_back(c, &ech.pivot_rows()[idx]);
    for (int f = 0; f < A.cols; ++f) {
        if (piv.count(f)) continue;
        DVec x(A.cols, Rat(0));
        x[f] = 1;
        for (auto it = prows.rbegin(); it != prows.rend(); ++it) {
            auto [pc, rowp] = *it;
            Rat acc(0);
            for (auto& [c, v] : *rowp)
                if (c != pc && x[c] != 0) acc += v * x[c];
            x[pc] = -acc;  // leading coeff is 1
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

Subspace column_space(const RatMatrix& A) {
    Echelon ech(A.rows);
    RatMatrix t = A.transpose();
    Subspace out;
    out.ambient_dim = A.rows;
    for (auto& col : t.row)
        if (ech.add(col)) out.basis.push_back(densify(col, A.rows));
    return out;
}

Subspace span_of(const std::vector<DVec>& vecs, int ambient_dim) {
    Echelon ech(ambient_dim);
    Subspace out;
    out.ambient_dim = ambient_dim;
    for (auto& v : vecs)
        if (ech.add(sparsify(v))) out.basis.push_back(v);
    return out;
}

int rank(const RatMatrix& A) {
    Echelon ech(A.cols);
    for (auto& r : A.row)
        if (!r.empty()) ech.add(r);
    return ech.rank();
}

bool in_span(const DVec& v, const Subspace& s) {
    Echelon ech(s.ambient_dim);
    for (auto& b : s.basis) ech.add(sparsify(b));
    return ech.contains(v);
}

bool is_subspace_of(const Subspace& small, const Subspace& big) {
    Echelon ech(big.ambient_dim);
    for (auto& b : big.basis) ech.add(sparsify(b));
    for (auto& v : small.basis)
        if (!ech.contains(v)) return false;
    return true;
}

bool span_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    return is_subspace_of(a, b) && is_subspace_of(b, a);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    Subspace out;
    out.ambient_dim = a.ambient_dim;
    if (a.basis.empty() || b.basis.empty()) return out;
    // x = A u = B w: kernel of [A | -B] (columns = basis vectors)
    int na = a.dim(), nb = b.dim();
    RatMatrix M(a.ambient_dim, na + nb);
    for (int j = 0; j < na; ++j)
        for (int i = 0; i < a.ambient_dim; ++i) M.add(i, j, a.basis[j][i]);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < b.ambient_dim; ++i) M.add(i, na + j, -b.basis[j][i]);
    Subspace ker = kernel(M);
    std::vector<DVec> members;
    for (auto& k : ker.basis) {
        DVec v(a.ambient_dim, Rat(0));
        for (int j = 0; j < na; ++j)
            if (k[j] != 0)
                for (int i = 0; i < a.ambient_dim; ++i) v[i] += k[j] * a.basis[j][i];
        if (!is_zero(v)) members.push_back(std::move(v));
    }
    return span_of(members, a.ambient_dim);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace out;
    out.ambient_dim = a.ambient_dim;
    Echelon ech(a.ambient_dim);
    for (auto& v : a.basis)
        if (ech.add(sparsify(v))) out.basis.push_back(v);
    for (auto& v : b.basis)
        if (ech.add(sparsify(v))) out.basis.push_back(v);
    return out;
}

Subspace quotient_basis(const Subspace& big, const Subspace& small) {
    Echelon ech(big.ambient_dim);
    Echelon bigspan(big.ambient_dim);
    for (auto& v : big.basis) bigspan.add(sparsify(v));
    for (auto& v : small.basis) {
        if (!bigspan.contains(v)) throw std::invalid_argument("quotient_basis: small not contained in big");
        ech.add(sparsify(v));
    }
    Subspace out;
    out.ambient_dim = big.ambient_dim;
    for (auto& v : big.basis)
        if (ech.add(sparsify(v))) out.basis.push_back(v);
    return out;
}

std::optional<DVec> solve(const RatMatrix& A, const DVec& b) {
    // eliminate augmented rows [A | b]; augmented column never pivots
    Echelon ech(A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        SpVec r = A.row[i];
        if (b[i] != 0) r.emplace_back(A.cols, b[i]);
        if (r.empty()) continue;
        SpVec res = ech.residue(r);
        if (!res.empty() && res.front().first == A.cols) return std::nullopt;  // 0 = nonzero
        ech.add(r);
    }
    DVec x(A.cols, Rat(0));
    std::vector<std::pair<int, const SpVec*>> prows;
    for (auto& [c, idx] : ech.pivots()) prows.emplace_back(c, &ech.pivot_rows()[idx]);
    for (auto it = prows.rbegin(); it != prows.rend(); ++it) {
        auto [pc, rowp] = *it;
        if (pc == A.cols) return std::nullopt;
        Rat acc(0);
        for (auto& [c, v] : *rowp) {
            if (c == pc) continue;
            if (c == A.cols)
                acc -= v;  // move b to the rhs
            else if (x[c] != 0)
                acc += v * x[c];
        }
        x[pc] = -acc;
    }
    return x;
}

std::optional<DVec> coordinates_in(const DVec& v, const std::vector<DVec>& basis) {
    int dim = static_cast<int>(v.size());
    RatMatrix M(dim, static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < dim; ++i) M.add(i, j, basis[j][i]);
    return solve(M, v);
}

CoordinateSolver::CoordinateSolver(const std::vector<DVec>& vecs, int ambient)
    : ambient_(ambient), n_(static_cast<int>(vecs.size())), ech_(ambient + n_) {
    for (int i = 0; i < n_; ++i) {
        SpVec row = sparsify(vecs[i]);
        row.emplace_back(ambient_ + i, Rat(1));
        ech_.add(row);
    }
}

std::optional<DVec> CoordinateSolver::coords(const DVec& v) const {
    SpVec r = ech_.residue(sparsify(v));
    DVec c(n_, Rat(0));
    for (auto& [idx, val] : r) {
        if (idx < ambient_) return std::nullopt;  // v not in the span
        c[idx - ambient_] = -val;
    }
    return c;
}

namespace {

using IMat = std::vector<std::vector<Int>>;

IMat identity_int(int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// row ops mirrored into L, column ops mirrored into R
void swap_rows(IMat& a, IMat& l, int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(l[i], l[j]);
}
void swap_cols(IMat& a, IMat& r, int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : r) std::swap(row[i], row[j]);
}
void addmul_row(IMat& a, IMat& l, int dst, int src, const Int& c) {
    for (size_t k = 0; k < a[dst].size(); ++k) a[dst][k] += c * a[src][k];
    for (size_t k = 0; k < l[dst].size(); ++k) l[dst][k] += c * l[src][k];
}
void addmul_col(IMat& a, IMat& r, int dst, int src, const Int& c) {
    for (auto& row : a) row[dst] += c * row[src];
    for (auto& row : r) row[dst] += c * row[src];
}
void negate_row(IMat& a, IMat& l, int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : l[i]) x = -x;
}

}  // namespace

SNFResult smith_normal_form(const RatMatrix& A) {
    if (!A.integral()) throw std::invalid_argument("smith_normal_form: non-integer entry");
    int n = A.rows, m = A.cols;
    IMat a(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (auto& [j, v] : A.row[i]) a[i][j] = v.get_num();
    IMat L = identity_int(n), R = identity_int(m);
    int t = 0;
    int lim = std::min(n, m);
    while (t < lim) {
        // locate smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(a, L, t, pi);
        swap_cols(a, R, t, pj);
        bool clean = true;
        for (int i = t + 1; i < n; ++i)
            if (a[i][t] != 0) {
                Int q = a[i][t] / a[t][t];  // truncated division keeps remainders small
                addmul_row(a, L, i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < m; ++j)
            if (a[t][j] != 0) {
                Int q = a[t][j] / a[t][t];
                addmul_col(a, R, j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;
        // divisibility fix-up: pivot must divide every later entry
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < m && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    addmul_row(a, L, t, i, Int(1));
                    redo = true;
                }
        if (redo) continue;
        if (a[t][t] < 0) negate_row(a, L, t);
        ++t;
    }
    SNFResult out;
    out.diag.assign(lim, Int(0));
    for (int i = 0; i < lim; ++i) out.diag[i] = a[i][i];
    out.left = std::move(L);
    out.right = std::move(R);
    return out;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

}  // namespace lgt
