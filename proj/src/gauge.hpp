// Structure group T^k x R^l, spacetime objects (complex + weights + metric h
// + background curvature F0), connections, curvature/Maxwell operators,
// gauge directions and the obstruction group A_G.
#pragma once

#include <memory>
#include <string>

#include "homology.hpp"

namespace lgt {

struct GroupSignature {
    int k = 0;  // T factors
    int l = 0;  // R factors
    std::vector<DVec> h;  // symmetric nondegenerate (k+l)x(k+l)

    int components() const { return k + l; }
    bool is_torus_component(int a) const { return a < k; }
    std::vector<DVec> h_inverse() const;
};

GroupSignature make_group(int k, int l);  // h = identity

struct SpacetimeObject {
    std::string id;
    std::shared_ptr<const CubicalComplex> block;  // parent block for cone complements
    std::shared_ptr<const CubicalComplex> cx;
    GroupSignature group;
    std::unique_ptr<Operators> ops;
    Cochain F0;  // closed, coclosed, integral periods on T components (2pi units)

    int width() const { return cx->margin_width(); }
    int n1() const { return cx->num_cells(1); }
};

// F0 = flux[a]-fold uniform cocycle on the unique all-CYCLE spatial 2-plane
// (zero when flux is empty/zero); validates dF0 = 0, δF0 = 0, integrality
SpacetimeObject make_object(std::string id, std::shared_ptr<const CubicalComplex> cx,
                            GroupSignature group, const std::vector<Rat>& flux,
                            std::shared_ptr<const CubicalComplex> block = nullptr);

struct Connection {
    const SpacetimeObject* obj = nullptr;
    Cochain A;  // 1-cochain displacement from the reference
};

Connection reference_connection(const SpacetimeObject& obj);
Cochain curvature(const Connection& c);   // F0 + dA
Cochain maxwell(const Connection& c);     // δ(F0 + dA)

struct GaugeDirections {
    Subspace exact;                         // d[Ω^0], per component, flattened per comp? no:
                                            // single-component ambient n1; same for every comp
    std::vector<DVec> integral_closed;      // closed generators with unit (2pi) periods
};

GaugeDirections gauge_directions(const SpacetimeObject& obj);
// A += Σ coeff_exact · d(χ) handled by caller; this applies integral generators
Connection apply_gauge(const Connection& c, int component, const DVec& closed_direction);

struct ObstructionGroup {
    int free_rank = 0;
    std::vector<Int> torsion;
};

// A_G ≅ H¹(M, Z)^{⊕k}
ObstructionGroup gauge_group_obstruction(const SpacetimeObject& obj);

}  // namespace lgt
