// Homology over Z and Q (absolute and relative to the margin), the de Rham
// evaluation J and the Poincare-duality solver K behind the charge
// observables.
#pragma once

#include "green.hpp"
#include "lorentz.hpp"

namespace lgt {

enum class Coefficients { INT, RAT };
enum class HomologyMode { ABSOLUTE, REL_MARGIN };

struct HomologyGroup {
    int degree = 0;
    int free_rank = 0;
    std::vector<Int> torsion;       // invariant factors > 1
    std::vector<DVec> cycle_reps;   // free-part representatives (chain vectors)
};

HomologyGroup homology(const CubicalComplex& cx, int k, Coefficients coeff,
                       HomologyMode mode = HomologyMode::ABSOLUTE);

// Σ_cells chain coefficient × cochain value; demands d(eta)=0 and ∂(sigma)=0
Rat deRham_J(const Operators& ops, int k, const DVec& eta, const DVec& sigma);

struct DualityWitness {
    DVec sigma;     // input cycle
    Cochain zeta;   // COMPACT coclosed k-cochain with <zeta,eta>_W = J(eta)(sigma)
};

// solve the defining pairing conditions of K([sigma]) as an exact linear
// system over COMPACT(width) k-cochains; throws on inconsistency
DualityWitness poincare_K(const Operators& ops, int k, const DVec& sigma, int width);

}  // namespace lgt
