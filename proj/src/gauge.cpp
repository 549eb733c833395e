#include "gauge.hpp"

#include <stdexcept>

namespace lgt {

std::vector<DVec> GroupSignature::h_inverse() const {
    int n = components();
    // small dense Gauss-Jordan
    std::vector<DVec> a(h), inv(n, DVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("h not invertible");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        Rat d = a[c][c];
        for (int j = 0; j < n; ++j) { a[c][j] /= d; inv[c][j] /= d; }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < n; ++j) { a[i][j] -= f * a[c][j]; inv[i][j] -= f * inv[c][j]; }
        }
    }
    return inv;
}

GroupSignature make_group(int k, int l) {
    if (k + l < 1) throw std::invalid_argument("group must have at least one factor");
    GroupSignature g;
    g.k = k;
    g.l = l;
    g.h.assign(k + l, DVec(k + l, Rat(0)));
    for (int i = 0; i < k + l; ++i) g.h[i][i] = 1;
    return g;
}

namespace {

// ids of the two CYCLE spatial factors, or empty
std::vector<int> cycle_plane(const CubicalComplex& cx) {
    std::vector<int> out;
    for (int i = 0; i < cx.dim(); ++i)
        if (cx.factors()[i].kind == FactorKind::CYCLE) out.push_back(i);
    return out;
}

}  // namespace

SpacetimeObject make_object(std::string id, std::shared_ptr<const CubicalComplex> cx,
                            GroupSignature group, const std::vector<Rat>& flux,
                            std::shared_ptr<const CubicalComplex> block) {
    SpacetimeObject obj;
    obj.id = std::move(id);
    obj.block = std::move(block);
    obj.cx = std::move(cx);
    obj.group = group;
    obj.ops = std::make_unique<Operators>(*obj.cx);
    obj.F0 = Cochain(*obj.cx, 2, group.components());
    bool any = false;
    for (auto& f : flux)
        if (f != 0) any = true;
    if (any) {
        auto plane = cycle_plane(*obj.cx);
        if (plane.size() != 2)
            throw std::invalid_argument("flux requires exactly two CYCLE spatial factors");
        int n1 = obj.cx->factors()[plane[0]].size, n2 = obj.cx->factors()[plane[1]].size;
        for (size_t a = 0; a < flux.size() && a < static_cast<size_t>(group.components()); ++a) {
            if (flux[a] == 0) continue;
            if (!group.is_torus_component(static_cast<int>(a)) && flux[a].get_den() == 1 &&
                flux[a] != 0) {
                // R components carry no quantization; still allowed as background
            }
            Rat val = flux[a] / Rat(n1 * n2);
            for (int i = 0; i < obj.cx->num_cells(2); ++i) {
                Cell c = obj.cx->cells(2)[i];
                if (cell_is_edge(c, plane[0]) && cell_is_edge(c, plane[1]))
                    obj.F0.comp[a][i] = val;
            }
        }
    }
    // invariants: closed, coclosed, integral T periods
    for (int a = 0; a < group.components(); ++a) {
        if (obj.cx->dim() > 2 && !is_zero(obj.cx->d(2).apply(obj.F0.comp[a])))
            throw std::invalid_argument("F0 not closed");
        if (!is_zero(obj.ops->delta(2).apply(obj.F0.comp[a])))
            throw std::invalid_argument("F0 not coclosed");
    }
    if (any) {
        HomologyGroup h2 = homology(*obj.cx, 2, Coefficients::RAT);
        for (auto& rep : h2.cycle_reps)
            for (int a = 0; a < group.k; ++a) {
                Rat p = deRham_J(*obj.ops, 2, obj.F0.comp[a], rep);
                if (p.get_den() != 1)
                    throw std::invalid_argument("F0 periods not integral on a T component");
            }
    }
    return obj;
}

Connection reference_connection(const SpacetimeObject& obj) {
    Connection c;
    c.obj = &obj;
    c.A = Cochain(*obj.cx, 1, obj.group.components());
    return c;
}

Cochain curvature(const Connection& c) {
    Cochain F = d(c.A);
    for (int a = 0; a < F.components(); ++a)
        for (size_t i = 0; i < F.comp[a].size(); ++i) F.comp[a][i] += c.obj->F0.comp[a][i];
    return F;
}

Cochain maxwell(const Connection& c) {
    return c.obj->ops->delta(curvature(c));
}

GaugeDirections gauge_directions(const SpacetimeObject& obj) {
    const CubicalComplex& cx = *obj.cx;
    GaugeDirections g;
    g.exact = column_space(cx.d(0));
    // one unit-period generator per CYCLE factor: the uniform cochain 1/N on
    // that factor's edges (closed; holonomy 1 in 2pi units)
    for (int f = 0; f < cx.dim(); ++f) {
        if (cx.factors()[f].kind != FactorKind::CYCLE) continue;
        DVec v(cx.num_cells(1), Rat(0));
        for (int i = 0; i < cx.num_cells(1); ++i)
            if (cell_is_edge(cx.cells(1)[i], f)) v[i] = Rat(1) / cx.factors()[f].size;
        g.integral_closed.push_back(std::move(v));
    }
    return g;
}

Connection apply_gauge(const Connection& c, int component, const DVec& dir) {
    Connection out = c;
    for (size_t i = 0; i < dir.size(); ++i) out.A.comp[component][i] += dir[i];
    return out;
}

ObstructionGroup gauge_group_obstruction(const SpacetimeObject& obj) {
    ObstructionGroup out;
    if (obj.group.k == 0) return out;  // A_R = 0
    // H¹(M,Z): free rank = rank H₁ (universal coefficients), torsion = the
    // invariant factors > 1 of d0 (they land inside ker d1 automatically)
    HomologyGroup h1 = homology(*obj.cx, 1, Coefficients::RAT);
    out.free_rank = obj.group.k * h1.free_rank;
    if (obj.cx->num_cells(1) <= 2500) {  // dense SNF guard; product complexes are torsion-free
        SNFResult snf = smith_normal_form(obj.cx->d(0));
        for (int a = 0; a < obj.group.k; ++a)
            for (auto& d : snf.diag)
                if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

}  // namespace lgt
