// FFT engine: space-time transforms between physical samples and spectral
// coefficients, temporal-only inverses, per-slice 3D transforms and
// zero-padded spectral interpolation onto refined grids.
//
// Conventions: the forward transform averages (coefficient (0,0) equals the
// time-space mean); the inverse is unscaled. Spatial axes carry the parity
// phase (-1)^{|m1|+|m2|+|m3|} so coefficients refer to the centered box
// [-L, L)^3; the time axis carries no phase (t_s = s T / nt).
#pragma once

#include <vector>

#include "field.hpp"
#include "grid.hpp"

namespace tpns {

/// Stateless FFT front end bound to one Grid. All plans use FFTW_ESTIMATE
/// (deterministic) and are created under a global planner lock.
class Fft {
public:
    explicit Fft(const Grid& g) : g_(g) {}

    /// Physical samples -> spectral coefficients, in place.
    void forward(Field& f) const;

    /// Spectral coefficients -> physical samples, in place.
    void inverse(Field& f) const;

    /// Temporal-only inverse DFT, in place: after this, slice s of the data
    /// holds the spatial spectral coefficients of the field at time t_s.
    /// The representation tag is left at Repr::spectral; callers own the
    /// interpretation.
    void inverse_time_only(Field& f) const;

    /// 3D forward transform of one physical slice (n^3 complex values, one
    /// component), returning phased, mean-normalized spatial coefficients.
    std::vector<cd> forward3d(const std::vector<cd>& phys) const;

    /// 3D inverse of one spectral slice onto the same grid.
    std::vector<cd> inverse3d(const std::vector<cd>& spec) const;

    /// Zero-pad one spectral slice by an integer factor and inverse-transform
    /// to physical samples on the refined grid ((factor*n)^3 real values).
    std::vector<double> pad3d(const std::vector<cd>& spec, int factor) const;

private:
    Grid g_;
};

/// Unnormalized in-place backward DFT (e^{+i} kernel) of an n^3 cube.
/// Standalone: used by lattice evaluations that are not tied to a Grid.
void fft3d_backward_inplace(std::vector<cd>& buf, int n);

} // namespace tpns
