#pragma once

#include <optional>
#include <string>

#include "tilescope/lattice.hpp"
#include "tilescope/polytope.hpp"

namespace tilescope::svg {

/// 2D polytope outline with vertex labels; belt edges are colored in cyclic
/// order. 3D input is drawn as an orthographic projection onto the xy-plane.
std::string render_polytope(const Polytope& p);

/// Patch of the tiling P + L around the fundamental domain. Translates are
/// filled with low opacity so overlap depth reads as multiplicity.
std::string render_tiling(const Polytope& p, const Lattice& lattice);

}  // namespace tilescope::svg
