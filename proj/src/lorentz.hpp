// Lorentzian cell weights, the indefinite Hodge pairing, codifferential δ,
// Hodge-d'Alembert operator □ and combinatorial causal structure.
#pragma once

#include <memory>
#include <set>
#include <vector>

#include "complex.hpp"
#include "exactla.hpp"

namespace lgt {

// Cached operator tables for one complex. Weight of a cell is
// (-1)^(number of TIME-edge factors); unit spacings throughout, so the
// combinatorial cone below is also the metric cone.
class Operators {
  public:
    explicit Operators(const CubicalComplex& cx);

    const CubicalComplex& complex() const { return *cx_; }
    const DVec& weights(int k) const { return weights_[k]; }

    // δ_k : Ω^k -> Ω^{k-1}, the pairing-adjoint of d (weight-conjugated transpose)
    const RatMatrix& delta(int k) const;
    // □_k = δd + dδ
    const RatMatrix& box(int k) const;

    Rat pairing(int k, const DVec& a, const DVec& b) const;
    // component-contracted pairing Σ_ab hinv[a][b] <x_a, y_b>
    Rat pairing(const Cochain& x, const Cochain& y,
                const std::vector<DVec>* hinv = nullptr) const;

    Cochain delta(const Cochain& c) const;
    Cochain box(const Cochain& c) const;

    // operator tables of the parent block (cone complements solve there)
    const Operators& parent_ops() const;

  private:
    const CubicalComplex* cx_;
    std::vector<DVec> weights_;
    mutable std::vector<RatMatrix> delta_, box_;
    mutable std::vector<bool> delta_done_, box_done_;
    mutable std::unique_ptr<Operators> parent_ops_;
};

// vertex-level causal reachability: one time step moves at most one spatial
// coordinate by one lattice unit (the □ stencil's propagation speed)
std::set<Vertex> causal_cone(const CubicalComplex& cx, const std::vector<Vertex>& seed,
                             int direction /* +1 future, -1 past */);
std::set<Vertex> causal_hull(const CubicalComplex& cx, const Vertex& p);  // J+ ∪ J-

// cones computed inside the subcomplex agree with restricted ambient cones
bool is_causally_compatible(const SubcomplexEmbedding& e);

// ids of k-cells whose time vertices all lie in [t0, t1]
std::vector<int> cauchy_slab(const CubicalComplex& cx, int k, int t0, int t1);

// all vertices of the image of `a` are spacelike to all vertices of `b`
bool spacelike_separated(const CubicalComplex& cx, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& b);

}  // namespace lgt
