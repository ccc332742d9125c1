// Space-time field container: complex samples or coefficients over the
// lattice, with interleaved components and an explicit representation tag.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace tpns {

using cd = std::complex<double>;

/// Which basis the stored numbers live in.
enum class Repr { physical, spectral };

/// Dense complex field over the space-time lattice with `comps` interleaved
/// components, layout (time slow; x1, x2, x3 lexicographic; component fast).
struct Field {
    Repr repr = Repr::physical;
    int comps = 1;
    int n = 0;  ///< spatial samples per axis
    int nt = 0; ///< time samples
    std::vector<cd> data;

    Field() = default;
    Field(const Grid& g, int components, Repr representation)
        : repr(representation), comps(components), n(g.n), nt(g.nt),
          data((size_t)g.points() * components, cd(0.0, 0.0)) {}

    size_t idx(int s, int i1, int i2, int i3, int c) const {
        return ((((size_t)s * n + i1) * n + i2) * n + i3) * (size_t)comps + c;
    }
    cd& at(int s, int i1, int i2, int i3, int c) {
        return data[idx(s, i1, i2, i3, c)];
    }
    const cd& at(int s, int i1, int i2, int i3, int c) const {
        return data[idx(s, i1, i2, i3, c)];
    }

    /// Throws when the field does not match the grid/representation a caller
    /// requires.
    void require(const Grid& g, Repr want, const char* who) const {
        if (n != g.n || nt != g.nt)
            throw ConfigError(std::string(who) + ": field/grid size mismatch");
        if (repr != want)
            throw ConfigError(std::string(who) + (want == Repr::spectral
                                  ? ": spectral representation required"
                                  : ": physical representation required"));
    }
};

} // namespace tpns
