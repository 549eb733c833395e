#include "phasespace.hpp"

#include <stdexcept>

namespace lgt {

namespace {

// {x supported on `cols` : (M x) vanishes on every row NOT in `ok_rows`},
// returned as full-length images M x (spanning basis)
std::vector<DVec> constrained_image(const RatMatrix& M, const std::vector<int>& cols,
                                    const std::vector<bool>& row_free) {
    RatMatrix C(0, static_cast<int>(cols.size()));
    std::vector<int> colpos(M.cols, -1);
    for (size_t j = 0; j < cols.size(); ++j) colpos[cols[j]] = static_cast<int>(j);
    for (int r = 0; r < M.rows; ++r) {
        if (row_free[r]) continue;
        SpVec row;
        for (auto& [c, v] : M.row[r])
            if (colpos[c] >= 0) row.emplace_back(colpos[c], v);
        if (!row.empty()) {
            C.row.push_back(std::move(row));
            ++C.rows;
        }
    }
    Subspace ker = kernel(C);
    std::vector<DVec> out;
    for (auto& x : ker.basis) {
        DVec full(M.cols, Rat(0));
        for (size_t j = 0; j < cols.size(); ++j) full[cols[j]] = x[j];
        DVec img = M.apply(full);
        if (!is_zero(img)) out.push_back(std::move(img));
    }
    return out;
}

std::vector<bool> free_row_mask(int n, const std::vector<int>& interior) {
    std::vector<bool> mask(n, false);
    for (int i : interior) mask[i] = true;
    return mask;
}

}  // namespace

Rat evaluate(const Operators& ops, const Observable& o, const Cochain& A) {
    Rat acc = o.c;
    for (int a = 0; a < o.alpha.components(); ++a)
        acc += ops.pairing(1, o.alpha.comp[a], A.comp[a]);
    return acc;
}

int flat_dim(const SpacetimeObject& obj) {
    return 1 + obj.group.components() * obj.n1();
}

DVec flatten(const SpacetimeObject& obj, const Observable& o) {
    DVec v(flat_dim(obj), Rat(0));
    v[0] = o.c;
    int n1 = obj.n1();
    for (int a = 0; a < obj.group.components(); ++a)
        for (int i = 0; i < n1; ++i) v[1 + a * n1 + i] = o.alpha.comp[a][i];
    return v;
}

Observable unflatten(const SpacetimeObject& obj, const DVec& v) {
    Observable o;
    o.c = v[0];
    o.alpha = Cochain(*obj.cx, 1, obj.group.components());
    int n1 = obj.n1();
    for (int a = 0; a < obj.group.components(); ++a)
        for (int i = 0; i < n1; ++i) o.alpha.comp[a][i] = v[1 + a * n1 + i];
    return o;
}

namespace {

DVec embed_component(const SpacetimeObject& obj, int comp, const DVec& alpha) {
    DVec v(flat_dim(obj), Rat(0));
    int n1 = obj.n1();
    for (int i = 0; i < n1; ++i) v[1 + comp * n1 + i] = alpha[i];
    return v;
}

DVec constant_direction(const SpacetimeObject& obj) {
    DVec v(flat_dim(obj), Rat(0));
    v[0] = 1;
    return v;
}

// linear parts of the T prescription: δ[Ω²_C(w)] ∩ Ω¹_C(w)
std::vector<DVec> torus_linear_parts(const SpacetimeObject& obj) {
    const CubicalComplex& cx = *obj.cx;
    int w = obj.width();
    auto int2 = cx.support_cells(2, SupportMode::COMPACT, w);
    auto mask1 = free_row_mask(cx.num_cells(1), cx.support_cells(1, SupportMode::COMPACT, w));
    return constrained_image(obj.ops->delta(2), int2, mask1);
}

// linear parts of the R prescription: Ω¹_C(w) ∩ ker δ
std::vector<DVec> real_linear_parts(const SpacetimeObject& obj) {
    const CubicalComplex& cx = *obj.cx;
    int w = obj.width();
    auto int1 = cx.support_cells(1, SupportMode::COMPACT, w);
    std::vector<int> colpos(cx.num_cells(1), -1);
    for (size_t j = 0; j < int1.size(); ++j) colpos[int1[j]] = static_cast<int>(j);
    const RatMatrix& dl = obj.ops->delta(1);
    RatMatrix C(0, static_cast<int>(int1.size()));
    for (int r = 0; r < dl.rows; ++r) {
        SpVec row;
        for (auto& [c, v] : dl.row[r])
            if (colpos[c] >= 0) row.emplace_back(colpos[c], v);
        if (!row.empty()) {
            C.row.push_back(std::move(row));
            ++C.rows;
        }
    }
    Subspace ker = kernel(C);
    std::vector<DVec> out;
    for (auto& x : ker.basis) {
        DVec full(cx.num_cells(1), Rat(0));
        for (size_t j = 0; j < int1.size(); ++j) full[int1[j]] = x[j];
        out.push_back(std::move(full));
    }
    return out;
}

Subspace assemble(const SpacetimeObject& obj,
                  const std::vector<std::vector<DVec>>& per_component) {
    Subspace s;
    s.ambient_dim = flat_dim(obj);
    s.basis.push_back(constant_direction(obj));
    for (int a = 0; a < obj.group.components(); ++a)
        for (auto& v : per_component[a]) s.basis.push_back(embed_component(obj, a, v));
    return span_of(s.basis, s.ambient_dim);
}

}  // namespace

Subspace einv_direct(const SpacetimeObject& obj) {
    const CubicalComplex& cx = *obj.cx;
    int w = obj.width();
    auto int1 = cx.support_cells(1, SupportMode::COMPACT, w);
    const DVec& W1 = obj.ops->weights(1);
    // orthogonality rows over the interior coordinates
    RatMatrix exact_rows(cx.num_cells(0), static_cast<int>(int1.size()));
    const RatMatrix& d0 = cx.d(0);
    for (size_t j = 0; j < int1.size(); ++j)
        for (auto& [vtx, v] : d0.row[int1[j]])
            exact_rows.add(vtx, static_cast<int>(j), W1[int1[j]] * v);
    Subspace closed;  // computed once, only if some component is toroidal
    bool need_closed = obj.group.k > 0;
    if (need_closed) closed = kernel(cx.d(1));
    std::vector<std::vector<DVec>> parts(obj.group.components());
    for (int a = 0; a < obj.group.components(); ++a) {
        RatMatrix C = exact_rows;
        if (obj.group.is_torus_component(a)) {
            for (auto& beta : closed.basis) {
                SpVec row;
                for (size_t j = 0; j < int1.size(); ++j) {
                    Rat v = W1[int1[j]] * beta[int1[j]];
                    if (v != 0) row.emplace_back(static_cast<int>(j), v);
                }
                C.row.push_back(std::move(row));
                ++C.rows;
            }
        }
        Subspace ker = kernel(C);
        for (auto& x : ker.basis) {
            DVec full(cx.num_cells(1), Rat(0));
            for (size_t j = 0; j < int1.size(); ++j) full[int1[j]] = x[j];
            parts[a].push_back(std::move(full));
        }
    }
    return assemble(obj, parts);
}

Subspace einv_theorem(const SpacetimeObject& obj) {
    std::vector<std::vector<DVec>> parts(obj.group.components());
    std::vector<DVec> torus, real;
    bool have_t = false, have_r = false;
    for (int a = 0; a < obj.group.components(); ++a) {
        if (obj.group.is_torus_component(a)) {
            if (!have_t) { torus = torus_linear_parts(obj); have_t = true; }
            parts[a] = torus;
        } else {
            if (!have_r) { real = real_linear_parts(obj); have_r = true; }
            parts[a] = real;
        }
    }
    return assemble(obj, parts);
}

Subspace einv_min(const SpacetimeObject& obj) {
    std::vector<std::vector<DVec>> parts(obj.group.components(), torus_linear_parts(obj));
    return assemble(obj, parts);
}

Subspace einv_max(const SpacetimeObject& obj) {
    std::vector<std::vector<DVec>> parts(obj.group.components(), real_linear_parts(obj));
    return assemble(obj, parts);
}

namespace {

// STANDARD: {δdη : η ∈ Ω¹_C(w)} ∩ Ω¹_C(w), per component, zero constant part
// CHARGE_ZERO: {F*(η) : η ∈ Ω²_C(w), dη = 0, δη ∈ Ω¹_C(w)}
Subspace quotient_space(const SpacetimeObject& obj, Variant variant) {
    const CubicalComplex& cx = *obj.cx;
    const Operators& ops = *obj.ops;
    int w = obj.width();
    auto mask1 = free_row_mask(cx.num_cells(1), cx.support_cells(1, SupportMode::COMPACT, w));
    Subspace out;
    out.ambient_dim = flat_dim(obj);
    if (variant == Variant::STANDARD) {
        auto int1 = cx.support_cells(1, SupportMode::COMPACT, w);
        RatMatrix dd = ops.delta(2).mul(cx.d(1));
        auto vecs = constrained_image(dd, int1, mask1);
        for (int a = 0; a < obj.group.components(); ++a)
            for (auto& v : vecs) out.basis.push_back(embed_component(obj, a, v));
    } else {
        auto int2 = cx.support_cells(2, SupportMode::COMPACT, w);
        std::vector<int> colpos(cx.num_cells(2), -1);
        for (size_t j = 0; j < int2.size(); ++j) colpos[int2[j]] = static_cast<int>(j);
        // closed + margin-free-δ constraints on coefficients over int2
        RatMatrix C(0, static_cast<int>(int2.size()));
        if (cx.dim() > 2) {
            const RatMatrix& d2 = cx.d(2);
            for (int r = 0; r < d2.rows; ++r) {
                SpVec row;
                for (auto& [c, v] : d2.row[r])
                    if (colpos[c] >= 0) row.emplace_back(colpos[c], v);
                if (!row.empty()) { C.row.push_back(std::move(row)); ++C.rows; }
            }
        }
        const RatMatrix& dl2 = ops.delta(2);
        for (int r = 0; r < dl2.rows; ++r) {
            if (mask1[r]) continue;
            SpVec row;
            for (auto& [c, v] : dl2.row[r])
                if (colpos[c] >= 0) row.emplace_back(colpos[c], v);
            if (!row.empty()) { C.row.push_back(std::move(row)); ++C.rows; }
        }
        Subspace ker = kernel(C);
        for (auto& x : ker.basis) {
            DVec eta(cx.num_cells(2), Rat(0));
            for (size_t j = 0; j < int2.size(); ++j) eta[int2[j]] = x[j];
            DVec lin = dl2.apply(eta);
            for (int a = 0; a < obj.group.components(); ++a) {
                DVec v = embed_component(obj, a, lin);
                v[0] = ops.pairing(2, eta, obj.F0.comp[a]);  // constant part of F*(η)
                if (!is_zero(v)) out.basis.push_back(std::move(v));
            }
        }
    }
    return span_of(out.basis, out.ambient_dim);
}

}  // namespace

PhaseSpace phase_space(const SpacetimeObject& obj, Variant variant) {
    PhaseSpace ps;
    ps.obj = &obj;
    ps.variant = variant;
    ps.einv = einv_theorem(obj);
    ps.quotient = quotient_space(obj, variant);
    Subspace reps = quotient_basis(ps.einv, ps.quotient);  // throws unless Q ⊆ E^inv
    ps.coset_reps = reps.basis;
    int n = static_cast<int>(ps.coset_reps.size());
    ps.gram = RatMatrix(n, n);
    auto hinv = obj.group.h_inverse();
    std::vector<Cochain> props;
    props.reserve(n);
    for (auto& v : ps.coset_reps)
        props.push_back(propagator(*obj.ops, unflatten(obj, v).alpha));
    for (int i = 0; i < n; ++i) {
        Observable oi = unflatten(obj, ps.coset_reps[i]);
        for (int j = 0; j < n; ++j)
            ps.gram.add(i, j, obj.ops->pairing(oi.alpha, props[j], &hinv));
    }
    return ps;
}

Rat tau(const SpacetimeObject& obj, const Observable& a, const Observable& b) {
    auto hinv = obj.group.h_inverse();
    return obj.ops->pairing(a.alpha, propagator(*obj.ops, b.alpha), &hinv);
}

Subspace radical(const PhaseSpace& ps) {
    Subspace ker = kernel(ps.gram);  // coordinates in coset_reps
    std::vector<DVec> vecs = ps.quotient.basis;
    for (auto& x : ker.basis) {
        DVec v(flat_dim(*ps.obj), Rat(0));
        for (size_t j = 0; j < ps.coset_reps.size(); ++j)
            if (x[j] != 0)
                for (int i = 0; i < static_cast<int>(v.size()); ++i)
                    v[i] += x[j] * ps.coset_reps[j][i];
        vecs.push_back(std::move(v));
    }
    return span_of(vecs, flat_dim(*ps.obj));
}

Subspace radical_theorem(const PhaseSpace& ps) {
    const SpacetimeObject& obj = *ps.obj;
    const CubicalComplex& cx = *obj.cx;
    const Operators& ops = *obj.ops;
    int w = obj.width();
    auto int2 = cx.support_cells(2, SupportMode::COMPACT, w);
    std::vector<int> colpos(cx.num_cells(2), -1);
    for (size_t j = 0; j < int2.size(); ++j) colpos[int2[j]] = static_cast<int>(j);

    // T components: δ[closed Ω²_C(w)]
    std::vector<DVec> torus_cand;
    if (obj.group.k > 0) {
        RatMatrix C(0, static_cast<int>(int2.size()));
        if (cx.dim() > 2) {
            const RatMatrix& d2 = cx.d(2);
            for (int r = 0; r < d2.rows; ++r) {
                SpVec row;
                for (auto& [c, v] : d2.row[r])
                    if (colpos[c] >= 0) row.emplace_back(colpos[c], v);
                if (!row.empty()) { C.row.push_back(std::move(row)); ++C.rows; }
            }
        }
        Subspace ker = kernel(C);
        for (auto& x : ker.basis) {
            DVec eta(cx.num_cells(2), Rat(0));
            for (size_t j = 0; j < int2.size(); ++j) eta[int2[j]] = x[j];
            DVec v = ops.delta(2).apply(eta);
            if (!is_zero(v)) torus_cand.push_back(std::move(v));
        }
    }
    // R components: δ[ Ω²_C(w) ∩ d Ω¹_tc(w) ]
    std::vector<DVec> real_cand;
    if (obj.group.l > 0) {
        auto tc1 = cx.support_cells(1, SupportMode::TIMELIKE_COMPACT, w);
        auto mask2 = free_row_mask(cx.num_cells(2), int2);
        auto dtc = constrained_image(cx.d(1), tc1, mask2);
        for (auto& eta : dtc) {
            DVec v = ops.delta(2).apply(eta);
            if (!is_zero(v)) real_cand.push_back(std::move(v));
        }
    }
    // h carries the per-component prescriptions to the radical's linear parts
    std::vector<DVec> cand;
    int n1 = obj.n1();
    for (int a = 0; a < obj.group.components(); ++a) {
        auto& src = obj.group.is_torus_component(a) ? torus_cand : real_cand;
        for (auto& s : src) {
            DVec v(flat_dim(obj), Rat(0));
            for (int b = 0; b < obj.group.components(); ++b) {
                const Rat& hba = obj.group.h[b][a];
                if (hba != 0)
                    for (int i = 0; i < n1; ++i) v[1 + b * n1 + i] += hba * s[i];
            }
            cand.push_back(std::move(v));
        }
    }
    Subspace thm = intersect(span_of(cand, flat_dim(obj)), ps.einv);
    std::vector<DVec> vecs = thm.basis;
    vecs.push_back(constant_direction(obj));
    for (auto& q : ps.quotient.basis) vecs.push_back(q);
    return span_of(vecs, flat_dim(obj));
}

DVec star_map(const Operators& ops, int k, const DVec& v) {
    const CubicalComplex& cx = ops.complex();
    int m = cx.dim();
    DVec out(cx.num_cells(m - k), Rat(0));
    for (int i = 0; i < cx.num_cells(k); ++i) {
        if (v[i] == 0) continue;
        Cell c = cx.cells(k)[i];
        Cell dual = c;
        for (int f = 0; f < m; ++f)
            dual = cell_set(dual, f, !cell_is_edge(c, f), cell_index(c, f));
        int id = cx.cell_id(m - k, dual);
        if (id < 0) throw std::domain_error("star_map: dual cell missing");
        out[id] = v[i] * ops.weights(k)[i];
    }
    return out;
}

namespace {

Observable curvature_adjoint(const SpacetimeObject& obj, const DVec& zeta2) {
    Observable o;
    o.c = obj.ops->pairing(2, zeta2, obj.F0.comp[0]);
    o.alpha = Cochain(*obj.cx, 1, 1);
    o.alpha.comp[0] = obj.ops->delta(2).apply(zeta2);
    return o;
}

}  // namespace

Observable charge_mag(const SpacetimeObject& obj, const DVec& sigma2) {
    if (obj.group.components() != 1)
        throw std::invalid_argument("charges implemented for one-component groups");
    DualityWitness kw = poincare_K(*obj.ops, 2, sigma2, obj.width());
    return curvature_adjoint(obj, kw.zeta.comp[0]);
}

Observable charge_el(const SpacetimeObject& obj, const DVec& sigma_m2) {
    if (obj.group.components() != 1)
        throw std::invalid_argument("charges implemented for one-component groups");
    int m = obj.cx->dim();
    DualityWitness kw = poincare_K(*obj.ops, m - 2, sigma_m2, obj.width());
    return curvature_adjoint(obj, star_map(*obj.ops, m - 2, kw.zeta.comp[0]));
}

}  // namespace lgt
