#include "lorentz.hpp"

#include <stdexcept>

namespace lgt {

namespace {

Rat cell_weight(const CubicalComplex& cx, int k, int id) {
    Cell c = cx.cells(k)[id];
    int sgn = 1;
    for (int i = 0; i < cx.dim(); ++i)
        if (cell_is_edge(c, i) && cx.factors()[i].kind == FactorKind::TIME) sgn = -sgn;
    return Rat(sgn);
}

// neighbors of a vertex under one unit step in a single factor
std::vector<Vertex> vertex_neighbors(const CubicalComplex& cx, const Vertex& v, int factor) {
    std::vector<Vertex> out;
    const Factor& f = cx.factors()[factor];
    for (int dv : {-1, 1}) {
        Vertex nb = v;
        if (f.kind == FactorKind::CYCLE) {
            nb[factor] = (v[factor] + dv + f.size) % f.size;
        } else {
            nb[factor] = v[factor] + dv;
            if (nb[factor] < 0 || nb[factor] >= f.size) continue;
        }
        out.push_back(nb);
    }
    return out;
}

bool vertex_exists(const CubicalComplex& cx, const Vertex& v) {
    Cell c = 0;
    for (int i = 0; i < cx.dim(); ++i) c = cell_set(c, i, false, v[i]);
    return cx.cell_id(0, c) >= 0;
}

}  // namespace

Operators::Operators(const CubicalComplex& cx) : cx_(&cx) {
    int m = cx.dim();
    weights_.resize(m + 1);
    delta_.resize(m + 1);
    box_.resize(m + 1);
    delta_done_.assign(m + 1, false);
    box_done_.assign(m + 1, false);
    for (int k = 0; k <= m; ++k) {
        weights_[k].resize(cx.num_cells(k));
        for (int i = 0; i < cx.num_cells(k); ++i) weights_[k][i] = cell_weight(cx, k, i);
    }
}

const RatMatrix& Operators::delta(int k) const {
    if (!delta_done_[k]) {
        if (k == 0) {
            delta_[k] = RatMatrix(0, cx_->num_cells(0));
        } else {
            // <d a, b>_k = <a, δ b>_{k-1}  =>  δ = W_{k-1}^{-1} d^T W_k
            const RatMatrix& D = cx_->d(k - 1);  // (n_k x n_{k-1})
            RatMatrix M(cx_->num_cells(k - 1), cx_->num_cells(k));
            for (int i = 0; i < D.rows; ++i)
                for (auto& [j, v] : D.row[i])
                    M.add(j, i, v * weights_[k][i] / weights_[k - 1][j]);
            delta_[k] = std::move(M);
        }
        delta_done_[k] = true;
    }
    return delta_[k];
}

const RatMatrix& Operators::box(int k) const {
    if (!box_done_[k]) {
        int n = cx_->num_cells(k);
        RatMatrix B(n, n);
        if (k < cx_->dim()) {
            RatMatrix A = delta(k + 1).mul(cx_->d(k));
            for (int i = 0; i < n; ++i)
                for (auto& [j, v] : A.row[i]) B.add(i, j, v);
        }
        if (k > 0) {
            RatMatrix A = cx_->d(k - 1).mul(delta(k));
            for (int i = 0; i < n; ++i)
                for (auto& [j, v] : A.row[i]) B.add(i, j, v);
        }
        box_[k] = std::move(B);
        box_done_[k] = true;
    }
    return box_[k];
}

Rat Operators::pairing(int k, const DVec& a, const DVec& b) const {
    if (a.size() != b.size() || static_cast<int>(a.size()) != cx_->num_cells(k))
        throw std::invalid_argument("DegreeMismatch: pairing sizes differ");
    Rat acc(0);
    for (int i = 0; i < cx_->num_cells(k); ++i)
        if (a[i] != 0 && b[i] != 0) acc += weights_[k][i] * a[i] * b[i];
    return acc;
}

Rat Operators::pairing(const Cochain& x, const Cochain& y,
                       const std::vector<DVec>* hinv) const {
    if (x.degree != y.degree || x.components() != y.components())
        throw std::invalid_argument("DegreeMismatch: cochain pairing");
    Rat acc(0);
    for (int a = 0; a < x.components(); ++a)
        for (int b = 0; b < y.components(); ++b) {
            Rat h = hinv ? (*hinv)[a][b] : Rat(a == b ? 1 : 0);
            if (h != 0) acc += h * pairing(x.degree, x.comp[a], y.comp[b]);
        }
    return acc;
}

Cochain Operators::delta(const Cochain& c) const {
    if (c.degree == 0) throw std::invalid_argument("DegreeZero: delta on 0-cochains");
    Cochain out(*cx_, c.degree - 1, c.components());
    for (int a = 0; a < c.components(); ++a) out.comp[a] = delta(c.degree).apply(c.comp[a]);
    return out;
}

Cochain Operators::box(const Cochain& c) const {
    Cochain out(*cx_, c.degree, c.components());
    for (int a = 0; a < c.components(); ++a) out.comp[a] = box(c.degree).apply(c.comp[a]);
    return out;
}

const Operators& Operators::parent_ops() const {
    if (!cx_->parent()) throw std::logic_error("parent_ops: complex has no parent");
    if (!parent_ops_) parent_ops_ = std::make_unique<Operators>(*cx_->parent());
    return *parent_ops_;
}

std::set<Vertex> causal_cone(const CubicalComplex& cx, const std::vector<Vertex>& seed,
                             int direction) {
    int tf = cx.time_factor();
    if (tf < 0) throw std::invalid_argument("causal_cone: no time factor");
    std::set<Vertex> reached(seed.begin(), seed.end());
    std::vector<Vertex> frontier(seed.begin(), seed.end());
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (auto& v : frontier) {
            int t = v[tf] + direction;
            if (t < 0 || t >= cx.factors()[tf].size) continue;
            // unit-speed: every spatial coordinate may move by at most one
            // per time step (Chebyshev ball), matching the product light cone
            Vertex straight = v;
            straight[tf] = t;
            std::vector<Vertex> cands{straight};
            for (int i = 0; i < cx.dim(); ++i) {
                if (i == tf) continue;
                std::vector<Vertex> grown;
                for (auto& base : cands)
                    for (auto& nb : vertex_neighbors(cx, base, i)) {
                        Vertex w = nb;
                        w[tf] = t;
                        grown.push_back(w);
                    }
                cands.insert(cands.end(), grown.begin(), grown.end());
            }
            for (auto& w : cands)
                if (vertex_exists(cx, w) && reached.insert(w).second) next.push_back(w);
        }
        frontier = std::move(next);
    }
    return reached;
}

std::set<Vertex> causal_hull(const CubicalComplex& cx, const Vertex& p) {
    auto fut = causal_cone(cx, {p}, +1);
    auto past = causal_cone(cx, {p}, -1);
    fut.insert(past.begin(), past.end());
    return fut;
}

bool is_causally_compatible(const SubcomplexEmbedding& e) {
    const CubicalComplex& S = *e.source;
    const CubicalComplex& T = *e.target;
    for (Cell c : S.cells(0)) {
        Vertex v{};
        for (int i = 0; i < S.dim(); ++i) v[i] = cell_index(c, i);
        Vertex tv = v;
        for (int i = 0; i < S.dim(); ++i) {
            int n = T.factors()[i].size;
            tv[i] = S.factors()[i].kind == FactorKind::CYCLE ? (v[i] + e.offsets[i]) % n
                                                             : v[i] + e.offsets[i];
        }
        for (int dir : {+1, -1}) {
            auto inner = causal_cone(S, {v}, dir);
            auto ambient = causal_cone(T, {tv}, dir);
            // restricted ambient cone must equal the inner cone's image
            std::set<Vertex> inner_img;
            for (auto& w : inner) {
                Vertex tw = w;
                for (int i = 0; i < S.dim(); ++i) {
                    int n = T.factors()[i].size;
                    tw[i] = S.factors()[i].kind == FactorKind::CYCLE
                                ? (w[i] + e.offsets[i]) % n
                                : w[i] + e.offsets[i];
                }
                inner_img.insert(tw);
            }
            for (auto& w : ambient) {
                // is w in the image of S?
                Vertex sw = w;
                bool in_image = true;
                for (int i = 0; i < S.dim(); ++i) {
                    int n = T.factors()[i].size;
                    int back = S.factors()[i].kind == FactorKind::CYCLE
                                   ? (w[i] - e.offsets[i] + n) % n
                                   : w[i] - e.offsets[i];
                    if (back < 0 || back >= S.factors()[i].size) { in_image = false; break; }
                    sw[i] = back;
                }
                if (in_image && !vertex_exists(S, sw)) in_image = false;
                if (in_image && !inner_img.count(w)) return false;
            }
        }
    }
    return true;
}

std::vector<int> cauchy_slab(const CubicalComplex& cx, int k, int t0, int t1) {
    int tf = cx.time_factor();
    std::vector<int> out;
    for (int i = 0; i < cx.num_cells(k); ++i) {
        bool in = true;
        for (auto& v : cx.vertices_of(k, cx.cells(k)[i]))
            if (tf >= 0 && (v[tf] < t0 || v[tf] > t1)) { in = false; break; }
        if (in) out.push_back(i);
    }
    return out;
}

bool spacelike_separated(const CubicalComplex& cx, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& b) {
    auto fut = causal_cone(cx, a, +1);
    auto past = causal_cone(cx, a, -1);
    for (auto& v : b)
        if (fut.count(v) || past.count(v)) return false;
    return true;
}

}  // namespace lgt
