#include "homology.hpp"

#include <stdexcept>

namespace lgt {

HomologyGroup homology(const CubicalComplex& cx, int k, Coefficients coeff,
                       HomologyMode mode) {
    if (k < 0 || k > cx.dim()) throw std::invalid_argument("homology: bad degree");
    int width = cx.margin_width();
    RatMatrix bk, bk1;  // ∂_k and ∂_{k+1}
    int nk;
    if (mode == HomologyMode::ABSOLUTE) {
        nk = cx.num_cells(k);
        bk = k >= 1 ? cx.boundary(k) : RatMatrix(0, nk);
        bk1 = k < cx.dim() ? cx.boundary(k + 1) : RatMatrix(nk, 0);
    } else {
        auto cols_k = cx.support_cells(k, SupportMode::COMPACT, width);
        nk = static_cast<int>(cols_k.size());
        auto restrict = [&](int deg) -> RatMatrix {
            auto rows = cx.support_cells(deg - 1, SupportMode::COMPACT, width);
            auto cols = cx.support_cells(deg, SupportMode::COMPACT, width);
            std::vector<int> rowpos(cx.num_cells(deg - 1), -1);
            std::vector<int> colpos(cx.num_cells(deg), -1);
            for (size_t i = 0; i < rows.size(); ++i) rowpos[rows[i]] = static_cast<int>(i);
            for (size_t j = 0; j < cols.size(); ++j) colpos[cols[j]] = static_cast<int>(j);
            const RatMatrix& B = cx.boundary(deg);
            RatMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (int i = 0; i < B.rows; ++i) {
                if (rowpos[i] < 0) continue;
                for (auto& [j, v] : B.row[i])
                    if (colpos[j] >= 0) out.add(rowpos[i], colpos[j], v);
            }
            return out;
        };
        bk = k >= 1 ? restrict(k) : RatMatrix(0, nk);
        bk1 = k < cx.dim() ? restrict(k + 1) : RatMatrix(nk, 0);
    }
    HomologyGroup out;
    out.degree = k;
    Subspace cycles = kernel(bk);
    Subspace boundaries = column_space(bk1);
    out.free_rank = cycles.dim() - boundaries.dim();
    Subspace reps = quotient_basis(sum(cycles, boundaries), boundaries);
    out.cycle_reps = reps.basis;
    if (coeff == Coefficients::INT) {
        SNFResult snf = smith_normal_form(bk1);
        for (auto& d : snf.diag)
            if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

Rat deRham_J(const Operators& ops, int k, const DVec& eta, const DVec& sigma) {
    const CubicalComplex& cx = ops.complex();
    if (k < cx.dim() && !is_zero(cx.d(k).apply(eta)))
        throw std::invalid_argument("NotClosed: eta is not closed");
    if (k >= 1 && !is_zero(cx.boundary(k).apply(sigma)))
        throw std::invalid_argument("NotClosed: sigma is not a cycle");
    Rat acc(0);
    for (int i = 0; i < cx.num_cells(k); ++i)
        if (sigma[i] != 0 && eta[i] != 0) acc += sigma[i] * eta[i];
    return acc;
}

DualityWitness poincare_K(const Operators& ops, int k, const DVec& sigma, int width) {
    const CubicalComplex& cx = ops.complex();
    if (k >= 1 && !is_zero(cx.boundary(k).apply(sigma)))
        throw std::invalid_argument("NotACycle: sigma is not a cycle");
    auto support = cx.support_cells(k, SupportMode::COMPACT, width);
    std::vector<int> pos(cx.num_cells(k), -1);
    for (size_t j = 0; j < support.size(); ++j) pos[support[j]] = static_cast<int>(j);
    // closed k-cochain basis
    Subspace closed = k < cx.dim() ? kernel(cx.d(k))
                                   : Subspace{cx.num_cells(k), {}};
    if (k == cx.dim()) {
        closed.basis.reserve(cx.num_cells(k));
        for (int i = 0; i < cx.num_cells(k); ++i) {
            DVec v(cx.num_cells(k), Rat(0));
            v[i] = 1;
            closed.basis.push_back(std::move(v));
        }
    }
    const DVec& W = ops.weights(k);
    RatMatrix M(0, static_cast<int>(support.size()));
    DVec rhs;
    for (auto& eta : closed.basis) {
        SpVec row;
        for (size_t j = 0; j < support.size(); ++j) {
            Rat v = W[support[j]] * eta[support[j]];
            if (v != 0) row.emplace_back(static_cast<int>(j), v);
        }
        M.row.push_back(std::move(row));
        ++M.rows;
        rhs.push_back(deRham_J(ops, k, eta, sigma));
    }
    const RatMatrix& dl = ops.delta(k);
    for (int r = 0; r < dl.rows; ++r) {
        SpVec row;
        for (auto& [c, v] : dl.row[r])
            if (pos[c] >= 0) row.emplace_back(pos[c], v);
        if (!row.empty()) {
            M.row.push_back(std::move(row));
            ++M.rows;
            rhs.push_back(Rat(0));
        }
    }
    auto x = solve(M, rhs);
    if (!x) throw std::runtime_error("NoSolution: Poincare duality system inconsistent");
    DualityWitness w;
    w.sigma = sigma;
    w.zeta = Cochain(cx, k, 1);
    for (size_t j = 0; j < support.size(); ++j) w.zeta.comp[0][support[j]] = (*x)[j];
    return w;
}

}  // namespace lgt
