#include "green.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgt {

namespace {

DVec march(const Operators& ops, int k, int dir, const DVec& s) {
    const CubicalComplex& cx = ops.complex();
    const RatMatrix& B = ops.box(k);
    int n = cx.num_cells(k);
    std::vector<int> lev(n);
    for (int i = 0; i < n; ++i) lev[i] = cx.time_level(k, i);
    std::vector<int> rows;
    for (int i = 0; i < n; ++i) {
        if (cx.time_depth(k, i) >= 1) {
            rows.push_back(i);
        } else if (s[i] != 0) {
            throw std::domain_error("MarginViolation: source touches the temporal margin");
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [&](int a, int b) { return lev[a] * dir < lev[b] * dir; });
    DVec u(n, Rat(0));
    for (int i : rows) {
        int j = cx.time_shifted(k, i, dir);
        Rat coef(0), acc = s[i];
        for (auto& [c, v] : B.row[i]) {
            if (c == j) {
                coef = v;
            } else if ((lev[c] - lev[i]) * dir > 0) {
                throw std::logic_error("green: unexpected forward coupling in box stencil");
            } else if (u[c] != 0) {
                acc -= v * u[c];
            }
        }
        if (coef == 0) throw std::logic_error("green: missing marching coefficient");
        u[j] = acc / coef;
    }
    return u;
}

}  // namespace

Cochain green(const Operators& ops, GreenDirection dir, const Cochain& src) {
    const CubicalComplex& cx = ops.complex();
    int d = dir == GreenDirection::RETARDED ? +1 : -1;
    if (cx.parent() != nullptr) {
        // zero-extend to the parent block, solve there, restrict back
        const CubicalComplex& par = *cx.parent();
        const auto& map = cx.parent_cell_map()[src.degree];
        const Operators& pops = ops.parent_ops();
        Cochain psrc(par, src.degree, src.components());
        for (int a = 0; a < src.components(); ++a)
            for (int i = 0; i < cx.num_cells(src.degree); ++i)
                psrc.comp[a][map[i]] = src.comp[a][i];
        Cochain pout = green(pops, dir, psrc);
        Cochain out(cx, src.degree, src.components());
        for (int a = 0; a < src.components(); ++a)
            for (int i = 0; i < cx.num_cells(src.degree); ++i)
                out.comp[a][i] = pout.comp[a][map[i]];
        return out;
    }
    Cochain out(cx, src.degree, src.components());
    for (int a = 0; a < src.components(); ++a) out.comp[a] = march(ops, src.degree, d, src.comp[a]);
    return out;
}

Cochain propagator(const Operators& ops, const Cochain& src) {
    Cochain p = green(ops, GreenDirection::RETARDED, src);
    Cochain m = green(ops, GreenDirection::ADVANCED, src);
    for (int a = 0; a < p.components(); ++a)
        for (size_t i = 0; i < p.comp[a].size(); ++i) p.comp[a][i] -= m.comp[a][i];
    return p;
}

std::vector<int> green_identity_rows(const CubicalComplex& cx, int k) {
    std::vector<int> out;
    for (int i = 0; i < cx.num_cells(k); ++i)
        if (cx.time_depth(k, i) >= 1) out.push_back(i);
    return out;
}

}  // namespace lgt
