// Exact retarded/advanced Green operators for □ via causal slab marching,
// and the causal propagator G = G+ - G-.
#pragma once

#include "lorentz.hpp"

namespace lgt {

enum class GreenDirection { RETARDED, ADVANCED };

// Solve □u = src exactly by marching time slabs in the causal direction.
// src must vanish on the temporal margin (time depth 0) in the solve
// direction; the window-edge cells keep the zero-data convention. On
// subcomplexes with a parent, solves run on the parent (zero-extend,
// solve, restrict).
Cochain green(const Operators& ops, GreenDirection dir, const Cochain& src);

Cochain propagator(const Operators& ops, const Cochain& src);

// usable identity rows: □(green(src)) = src holds on cells of time depth >= 1
std::vector<int> green_identity_rows(const CubicalComplex& cx, int k);

}  // namespace lgt
