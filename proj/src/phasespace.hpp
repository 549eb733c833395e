// Observables, the gauge-invariant space E^inv, quotients E / E^0 with the
// presymplectic Gram matrix, radicals, and the charge observables.
#pragma once

#include "gauge.hpp"

namespace lgt {

// affine observable relative to the reference connection: O(A) = c + <alpha, A>
struct Observable {
    Rat c;
    Cochain alpha;  // degree 1, COMPACT, one entry per g* component
};

Rat evaluate(const Operators& ops, const Observable& o, const Cochain& A);

// flattened coordinates [c | comp_0 cells | comp_1 cells | ...]
int flat_dim(const SpacetimeObject& obj);
DVec flatten(const SpacetimeObject& obj, const Observable& o);
Observable unflatten(const SpacetimeObject& obj, const DVec& v);

// Eq. gaugeinv: linear parts orthogonal to every gauge direction
Subspace einv_direct(const SpacetimeObject& obj);
// Thm. gaugeinvspace: δ[Ω²_C] on T components, compact coclosed on R components
Subspace einv_theorem(const SpacetimeObject& obj);
// sandwich bounds: E^min (δΩ²_C everywhere) and E^max (compact coclosed everywhere)
Subspace einv_min(const SpacetimeObject& obj);
Subspace einv_max(const SpacetimeObject& obj);

enum class Variant { STANDARD, CHARGE_ZERO };

struct PhaseSpace {
    const SpacetimeObject* obj = nullptr;
    Variant variant = Variant::STANDARD;
    Subspace einv;                  // flattened, includes the constant direction
    Subspace quotient;              // MW*-image (STANDARD) or F*-image (CHARGE_ZERO)
    std::vector<DVec> coset_reps;   // basis of einv/quotient
    RatMatrix gram;                 // τ on coset_reps (skew)
};

PhaseSpace phase_space(const SpacetimeObject& obj, Variant variant);

Rat tau(const SpacetimeObject& obj, const Observable& a, const Observable& b);

// brute force: kernel of the Gram, returned as a flattened span including
// the quotient (so theorem comparisons are span equalities)
Subspace radical(const PhaseSpace& ps);
// Thm. radicalexplicit prescription (plus constant direction and quotient)
Subspace radical_theorem(const PhaseSpace& ps);

Observable charge_mag(const SpacetimeObject& obj, const DVec& sigma2);
Observable charge_el(const SpacetimeObject& obj, const DVec& sigma_m2);

// diagonal index-matching Hodge star between degrees k and m-k (all-CYCLE
// spatial complexes); value is weighted by the source cell's Lorentz sign
DVec star_map(const Operators& ops, int k, const DVec& v);

}  // namespace lgt
