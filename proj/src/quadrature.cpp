// Quadrature node set construction.
#include "quadrature.hpp"

#include <cmath>

#include "errors.hpp"
#include "special.hpp"

namespace tpns {

NodeSet sphere_nodes(double R, int ntheta, int nphi) {
    if (!(R > 0.0)) throw ConfigError("sphere_nodes: radius must be positive");
    std::vector<double> ct, wt;
    gl_nodes(ntheta, -1.0, 1.0, ct, wt);
    NodeSet out;
    out.nodes.reserve((size_t)ntheta * nphi);
    out.weights.reserve((size_t)ntheta * nphi);
    double wphi = 2.0 * M_PI / nphi;
    for (int a = 0; a < ntheta; ++a) {
        double c = ct[a];
        double st = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int b = 0; b < nphi; ++b) {
            double p = 2.0 * M_PI * b / nphi;
            out.nodes.push_back(
                {R * c, R * st * std::cos(p), R * st * std::sin(p)});
            out.weights.push_back(wt[a] * wphi * R * R);
        }
    }
    return out;
}

NodeSet shell_nodes(double R1, double R2, int nr, int ntheta, int nphi) {
    if (!(R2 > R1) || !(R1 > 0.0))
        throw ConfigError("shell_nodes: need 0 < R1 < R2");
    std::vector<double> rn, rw;
    gl_nodes(nr, R1, R2, rn, rw);
    NodeSet out;
    for (int q = 0; q < nr; ++q) {
        NodeSet sp = sphere_nodes(rn[q], ntheta, nphi);
        for (size_t a = 0; a < sp.nodes.size(); ++a) {
            out.nodes.push_back(sp.nodes[a]);
            out.weights.push_back(sp.weights[a] * rw[q]);
        }
    }
    return out;
}

NodeSet ball_nodes(const Vec3& center, double radius, int order) {
    if (!(radius > 0.0)) throw ConfigError("ball_nodes: radius must be positive");
    std::vector<double> xn, xw;
    gl_nodes(order, -radius, radius, xn, xw);
    NodeSet out;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c) {
                double r2 = xn[a] * xn[a] + xn[b] * xn[b] + xn[c] * xn[c];
                if (r2 >= radius * radius) continue;
                out.nodes.push_back({center[0] + xn[a], center[1] + xn[b],
                                     center[2] + xn[c]});
                out.weights.push_back(xw[a] * xw[b] * xw[c]);
            }
    return out;
}

} // namespace tpns
