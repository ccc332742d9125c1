// Deterministic fixed-order quadrature node sets: spheres (Gauss-Legendre in
// the polar cosine times uniform azimuth), radial shells, and tensor-product
// boxes for ball-supported integrands.
#pragma once

#include <vector>

#include "oseen.hpp"

namespace tpns {

/// Nodes and weights of a quadrature rule in R^3.
struct NodeSet {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
};

/// Surface rule on the origin-centered sphere of radius R: Gauss-Legendre in
/// cos(theta) (polar axis x1) times uniform azimuth; weights include R^2.
NodeSet sphere_nodes(double R, int ntheta = 24, int nphi = 48);

/// Volume rule on the shell R1 <= |x| <= R2: per-interval Gauss-Legendre in
/// radius (nr points) tensored with sphere rules; weights include r^2 via the
/// sphere factor times the radial weight.
NodeSet shell_nodes(double R1, double R2, int nr = 10, int ntheta = 24,
                    int nphi = 48);

/// Tensor Gauss-Legendre rule over the cube circumscribing the ball
/// |y - center| <= radius, restricted to the open ball. Weights are plain
/// GL products; the caller multiplies any density.
NodeSet ball_nodes(const Vec3& center, double radius, int order);

} // namespace tpns
