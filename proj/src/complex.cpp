#include "complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgt {

namespace {

std::uint64_t pack_vertex(const Vertex& v, int dim) {
    std::uint64_t c = 0;
    for (int i = 0; i < dim; ++i) c = cell_set(c, i, false, v[i]);
    return c;
}

int factor_vertex_depth(const Factor& f, int idx) {
    if (f.kind == FactorKind::CYCLE) return DEPTH_INF;
    return std::min(idx, f.size - 1 - idx);
}

int factor_distance(const Factor& f, int a, int b) {
    int d = std::abs(a - b);
    if (f.kind == FactorKind::CYCLE) d = std::min(d, f.size - d);
    return d;
}

}  // namespace

CubicalComplex::CubicalComplex(std::vector<Factor> factors, int margin_width,
                               std::set<Vertex> removed)
    : factors_(std::move(factors)), margin_width_(margin_width), removed_(std::move(removed)) {
    if (factors_.empty() || factors_.size() > 4)
        throw std::invalid_argument("complex: 1..4 factors supported");
    for (auto& f : factors_)
        if (f.size < 3) throw std::invalid_argument("BadFactor: factor size < 3");
    if (margin_width_ < 1) throw std::invalid_argument("margin_width must be >= 1");
    build_cells();
}

void CubicalComplex::build_cells() {
    int m = dim();
    cells_.assign(m + 1, {});
    index_.assign(m + 1, {});
    boundary_.assign(m + 1, RatMatrix());
    d_.assign(m + 1, RatMatrix());
    boundary_done_.assign(m + 1, false);
    d_done_.assign(m + 1, false);
    // type combinations in lexicographic order (factor 0 most significant),
    // then cell tuples with the last factor varying fastest
    for (int combo = 0; combo < (1 << m); ++combo) {
        int k = 0;
        std::vector<int> pool_size(m);
        for (int i = 0; i < m; ++i) {
            bool edge = (combo >> (m - 1 - i)) & 1;
            if (edge) ++k;
            pool_size[i] = edge ? factors_[i].edge_count() : factors_[i].size;
        }
        std::vector<int> idx(m, 0);
        while (true) {
            Cell c = 0;
            for (int i = 0; i < m; ++i)
                c = cell_set(c, i, (combo >> (m - 1 - i)) & 1, idx[i]);
            bool keep = true;
            if (!removed_.empty()) {
                for (auto& v : vertices_of(k, c))
                    if (removed_.count(v)) { keep = false; break; }
            }
            if (keep) {
                index_[k][c] = static_cast<int>(cells_[k].size());
                cells_[k].push_back(c);
            }
            int i = m - 1;
            while (i >= 0 && ++idx[i] == pool_size[i]) idx[i--] = 0;
            if (i < 0) break;
        }
    }
}

int CubicalComplex::cell_id(int k, Cell c) const {
    auto it = index_[k].find(c);
    return it == index_[k].end() ? -1 : it->second;
}

std::vector<Vertex> CubicalComplex::vertices_of(int k, Cell c) const {
    std::vector<Vertex> out{Vertex{0, 0, 0, 0}};
    for (int i = 0; i < dim(); ++i) {
        int idx = cell_index(c, i);
        std::vector<int> pool{idx};
        if (cell_is_edge(c, i)) {
            int hi = factors_[i].kind == FactorKind::CYCLE ? (idx + 1) % factors_[i].size
                                                           : idx + 1;
            pool.push_back(hi);
        }
        std::vector<Vertex> next;
        next.reserve(out.size() * pool.size());
        for (auto& v : out)
            for (int p : pool) {
                Vertex w = v;
                w[i] = p;
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

const RatMatrix& CubicalComplex::boundary(int k) const {
    if (!boundary_done_[k]) {
        RatMatrix B(num_cells(k - 1), num_cells(k));
        if (k >= 1) {
            for (int j = 0; j < num_cells(k); ++j) {
                Cell c = cells_[k][j];
                int sign = 1;
                for (int i = 0; i < dim(); ++i) {
                    if (!cell_is_edge(c, i)) continue;
                    int idx = cell_index(c, i);
                    int hi = factors_[i].kind == FactorKind::CYCLE ? (idx + 1) % factors_[i].size
                                                                   : idx + 1;
                    Cell fhi = cell_set(c, i, false, hi);
                    Cell flo = cell_set(c, i, false, idx);
                    if (int id = cell_id(k - 1, fhi); id >= 0) B.add(id, j, Rat(sign));
                    if (int id = cell_id(k - 1, flo); id >= 0) B.add(id, j, Rat(-sign));
                    sign = -sign;
                }
            }
        }
        boundary_[k] = std::move(B);
        boundary_done_[k] = true;
    }
    return boundary_[k];
}

const RatMatrix& CubicalComplex::d(int k) const {
    if (!d_done_[k]) {
        d_[k] = k < dim() ? boundary(k + 1).transpose() : RatMatrix(0, num_cells(k));
        d_done_[k] = true;
    }
    return d_[k];
}

int CubicalComplex::euler_characteristic() const {
    int chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 ? -1 : 1) * num_cells(k);
    return chi;
}

void CubicalComplex::build_depths() const {
    vdepth_.clear();
    for (Cell c : cells_[0]) {
        Vertex v{};
        for (int i = 0; i < dim(); ++i) v[i] = cell_index(c, i);
        int d = DEPTH_INF;
        for (int i = 0; i < dim(); ++i)
            d = std::min(d, factor_vertex_depth(factors_[i], v[i]));
        vdepth_[pack_vertex(v, dim())] = d;
    }
    depths_done_ = true;
}

int CubicalComplex::vertex_depth(const Vertex& v) const {
    if (!depths_done_) build_depths();
    auto it = vdepth_.find(pack_vertex(v, dim()));
    if (it == vdepth_.end()) throw std::out_of_range("vertex_depth: no such vertex");
    return it->second;
}

int CubicalComplex::cell_max_depth(int k, int id) const {
    int best = -1;
    for (auto& v : vertices_of(k, cells_[k][id])) best = std::max(best, vertex_depth(v));
    return best;
}

int CubicalComplex::cell_max_temporal_depth(int k, int id) const {
    int best = -1;
    for (auto& v : vertices_of(k, cells_[k][id])) {
        int d = DEPTH_INF;
        for (int i = 0; i < dim(); ++i)
            if (factors_[i].kind == FactorKind::TIME)
                d = std::min(d, factor_vertex_depth(factors_[i], v[i]));
        best = std::max(best, d);
    }
    return best;
}

namespace {
// hole margin: the downward closure of the removed region -- a cell is in the
// hole margin iff it is a face of some cell of the uncarved product complex
// that is missing here, i.e. of a cell containing a removed vertex
bool hole_margin(const std::set<Vertex>& removed, const std::vector<Factor>& factors,
                 int dimn, int /*k*/, Cell c) {
    for (const Vertex& u : removed) {
        bool near = true;
        for (int i = 0; i < dimn && near; ++i) {
            int lo = cell_index(c, i), n = factors[i].size;
            if (cell_is_edge(c, i)) {
                int hi = factors[i].kind == FactorKind::CYCLE ? (lo + 1) % n : lo + 1;
                if (u[i] != lo && u[i] != hi) near = false;
            } else {
                int dd = std::abs(u[i] - lo);
                if (factors[i].kind == FactorKind::CYCLE) dd = std::min(dd, n - dd);
                if (dd > 1) near = false;
            }
        }
        if (near) return true;
    }
    return false;
}
}  // namespace

std::vector<int> CubicalComplex::support_cells(int k, SupportMode mode, int width) const {
    std::vector<int> out;
    for (int i = 0; i < num_cells(k); ++i) {
        bool in = true;
        switch (mode) {
            case SupportMode::FULL: break;
            case SupportMode::COMPACT:
                in = cell_max_depth(k, i) >= width &&
                     !hole_margin(removed_, factors_, dim(), k, cells_[k][i]);
                break;
            case SupportMode::TIMELIKE_COMPACT:
                in = cell_max_temporal_depth(k, i) >= width &&
                     !hole_margin(removed_, factors_, dim(), k, cells_[k][i]);
                break;
        }
        if (in) out.push_back(i);
    }
    return out;
}

Subspace CubicalComplex::relative_subspace(int k, SupportMode mode, int width) const {
    Subspace s;
    s.ambient_dim = num_cells(k);
    for (int i : support_cells(k, mode, width)) {
        DVec v(num_cells(k), Rat(0));
        v[i] = 1;
        s.basis.push_back(std::move(v));
    }
    return s;
}

int CubicalComplex::time_factor() const {
    for (int i = 0; i < dim(); ++i)
        if (factors_[i].kind == FactorKind::TIME) return i;
    return -1;
}

int CubicalComplex::time_level(int k, int id) const {
    int tf = time_factor();
    if (tf < 0) return 0;
    Cell c = cells_[k][id];
    return 2 * cell_index(c, tf) + (cell_is_edge(c, tf) ? 1 : 0);
}

int CubicalComplex::time_depth(int k, int id) const {
    int tf = time_factor();
    if (tf < 0) return DEPTH_INF;
    Cell c = cells_[k][id];
    int idx = cell_index(c, tf);
    int hi = cell_is_edge(c, tf) ? factors_[tf].size - 2 : factors_[tf].size - 1;
    return std::min(idx, hi - idx);
}

int CubicalComplex::time_shifted(int k, int id, int dt) const {
    int tf = time_factor();
    if (tf < 0) return -1;
    Cell c = cells_[k][id];
    int idx = cell_index(c, tf) + dt;
    int hi = cell_is_edge(c, tf) ? factors_[tf].size - 2 : factors_[tf].size - 1;
    if (idx < 0 || idx > hi) return -1;
    return cell_id(k, cell_set(c, tf, cell_is_edge(c, tf), idx));
}

void CubicalComplex::set_parent(const CubicalComplex* p) {
    parent_ = p;
    parent_map_.assign(dim() + 1, {});
    for (int k = 0; k <= dim(); ++k) {
        parent_map_[k].resize(num_cells(k));
        for (int i = 0; i < num_cells(k); ++i) {
            int id = p->cell_id(k, cells_[k][i]);
            if (id < 0) throw std::logic_error("set_parent: cell missing in parent");
            parent_map_[k][i] = id;
        }
    }
}

std::string CubicalComplex::describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        const char* name = factors_[i].kind == FactorKind::CYCLE  ? "CYCLE"
                           : factors_[i].kind == FactorKind::PATH ? "PATH"
                                                                  : "TIME";
        os << (i ? "x" : "") << name << "(" << factors_[i].size << ")";
    }
    os << " cells";
    for (int k = 0; k <= dim(); ++k) os << " " << num_cells(k);
    if (!removed_.empty()) os << " (cone complement, " << removed_.size() << " vertices removed)";
    return os.str();
}

bool Cochain::zero() const {
    for (auto& c : comp)
        if (!is_zero(c)) return false;
    return true;
}

Cochain d(const Cochain& c) {
    if (c.degree >= c.cx->dim()) throw std::invalid_argument("TopDegree: d on top cochains");
    Cochain out(*c.cx, c.degree + 1, c.components());
    for (int a = 0; a < c.components(); ++a) out.comp[a] = c.cx->d(c.degree).apply(c.comp[a]);
    return out;
}

DVec SubcomplexEmbedding::push(int k, const DVec& v) const {
    DVec out(target->num_cells(k), Rat(0));
    for (int i = 0; i < source->num_cells(k); ++i)
        if (v[i] != 0) out[cell_map[k][i]] = Rat(sign[k][i]) * v[i];
    return out;
}

DVec SubcomplexEmbedding::pull(int k, const DVec& v) const {
    DVec out(source->num_cells(k), Rat(0));
    for (int i = 0; i < source->num_cells(k); ++i)
        out[i] = Rat(sign[k][i]) * v[cell_map[k][i]];
    return out;
}

Cochain SubcomplexEmbedding::push(const Cochain& c) const {
    Cochain out(*target, c.degree, c.components());
    for (int a = 0; a < c.components(); ++a) out.comp[a] = push(c.degree, c.comp[a]);
    return out;
}

Cochain SubcomplexEmbedding::pull(int k, const Cochain& c) const {
    Cochain out(*source, k, c.components());
    for (int a = 0; a < c.components(); ++a) out.comp[a] = pull(k, c.comp[a]);
    return out;
}

SubcomplexEmbedding embed(const CubicalComplex& source, const CubicalComplex& target,
                          const std::vector<int>& offsets) {
    if (source.dim() != target.dim() || static_cast<int>(offsets.size()) != source.dim())
        throw std::invalid_argument("embed: factor count mismatch");
    for (int i = 0; i < source.dim(); ++i) {
        auto &fs = source.factors()[i], &ft = target.factors()[i];
        // PATH intervals may sit inside a CYCLE; otherwise kinds must match
        bool arc = fs.kind == FactorKind::PATH && ft.kind == FactorKind::CYCLE;
        if (fs.kind != ft.kind && !arc)
            throw std::invalid_argument("embed: factor kind mismatch");
        if (fs.kind == FactorKind::CYCLE) {
            if (fs.size != ft.size) throw std::invalid_argument("embed: cycle size mismatch");
        } else if (arc) {
            if (fs.size > ft.size) throw std::out_of_range("OutOfBounds: arc longer than cycle");
        } else if (offsets[i] < 0 || offsets[i] + fs.size > ft.size) {
            throw std::out_of_range("OutOfBounds: offset places source outside target");
        }
    }
    SubcomplexEmbedding e;
    e.source = &source;
    e.target = &target;
    e.offsets = offsets;
    e.cell_map.resize(source.dim() + 1);
    e.sign.resize(source.dim() + 1);
    for (int k = 0; k <= source.dim(); ++k) {
        e.cell_map[k].resize(source.num_cells(k));
        e.sign[k].assign(source.num_cells(k), 1);
        for (int i = 0; i < source.num_cells(k); ++i) {
            Cell c = source.cells(k)[i];
            Cell tc = c;
            for (int f = 0; f < source.dim(); ++f) {
                int idx = cell_index(c, f);
                int nidx = target.factors()[f].kind == FactorKind::CYCLE
                               ? (idx + offsets[f]) % target.factors()[f].size
                               : idx + offsets[f];
                tc = cell_set(tc, f, cell_is_edge(c, f), nidx);
            }
            int id = target.cell_id(k, tc);
            if (id < 0) throw std::out_of_range("OutOfBounds: image cell missing in target");
            e.cell_map[k][i] = id;
        }
    }
    return e;
}

std::unique_ptr<CubicalComplex> remove_cone(const CubicalComplex& block, const Vertex& p) {
    int tf = block.time_factor();
    if (tf < 0) throw std::invalid_argument("remove_cone: no time factor");
    if (block.vertex_depth(p) < 1) throw std::invalid_argument("remove_cone: p not interior");
    std::set<Vertex> removed;
    for (Cell c : block.cells(0)) {
        Vertex v{};
        for (int i = 0; i < block.dim(); ++i) v[i] = cell_index(c, i);
        int sdist = 0;
        for (int i = 0; i < block.dim(); ++i)
            if (i != tf) sdist = std::max(sdist, factor_distance(block.factors()[i], v[i], p[i]));
        if (sdist <= std::abs(v[tf] - p[tf])) removed.insert(v);
    }
    auto sub = std::make_unique<CubicalComplex>(block.factors(), block.margin_width(), removed);
    sub->set_parent(&block);
    return sub;
}

}  // namespace lgt
