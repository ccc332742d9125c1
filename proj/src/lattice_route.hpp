// Spectral route for the per-mode velocity kernel: invert the Fourier symbol
// on a large cubic lattice. The two leading terms of the symbol (a complex
// Yukawa resolvent and its first drift correction) are subtracted in closed
// form and added back in real space, so the lattice only carries a remainder
// whose symbol decays like |xi|^-4 — this removes both the Gibbs truncation
// error and the worst periodization images. Route-independent from the
// convolution evaluation: only the symbol is used here.
#pragma once

#include <vector>

#include "mode_table.hpp"

namespace tpns {

/// Evaluate the mode-k velocity kernel at the given points by lattice symbol
/// inversion. Points must lie on the evaluation lattice (spacing
/// 2*box_half/n, offset -box_half), well inside the box. k != 0; lambda != 0.
std::vector<CMat3> mode_velocity_kernel_spectral(
    int k, const std::vector<Vec3>& points, double lambda, double period,
    int n = 256, double box_half = 32.0);

} // namespace tpns
