// FFT engine implementation on FFTW3 (complex double, in-place, ESTIMATE).
#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <mutex>

#include "errors.hpp"

namespace tpns {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanGuard {
    fftw_plan plan = nullptr;
    ~PlanGuard() {
        if (plan) {
            std::lock_guard<std::mutex> lk(planner_mutex());
            fftw_destroy_plan(plan);
        }
    }
};

fftw_complex* as_fftw(cd* p) { return reinterpret_cast<fftw_complex*>(p); }

// Full 4D space-time transform over all components, in place.
void exec4d(Field& f, int sign) {
    int dims[4] = {f.nt, f.n, f.n, f.n};
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_many_dft(4, dims, f.comps, as_fftw(f.data.data()),
                                     nullptr, f.comps, 1,
                                     as_fftw(f.data.data()), nullptr, f.comps,
                                     1, sign, FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: 4d plan creation failed");
    fftw_execute(pg.plan);
}

void apply_spatial_phase(const Grid& g, Field& f) {
    const int n = f.n;
    for (int s = 0; s < f.nt; ++s)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                double p12 = g.phase_map[i1] * g.phase_map[i2];
                for (int i3 = 0; i3 < n; ++i3) {
                    double p = p12 * g.phase_map[i3];
                    size_t base = f.idx(s, i1, i2, i3, 0);
                    for (int c = 0; c < f.comps; ++c) f.data[base + c] *= p;
                }
            }
}

} // namespace

void Fft::forward(Field& f) const {
    f.require(g_, Repr::physical, "fft.forward");
    exec4d(f, FFTW_FORWARD);
    const double scale = 1.0 / ((double)g_.nt * g_.n * g_.n * (double)g_.n);
    for (cd& v : f.data) v *= scale;
    apply_spatial_phase(g_, f);
    f.repr = Repr::spectral;
}

void Fft::inverse(Field& f) const {
    f.require(g_, Repr::spectral, "fft.inverse");
    apply_spatial_phase(g_, f);
    exec4d(f, FFTW_BACKWARD);
    f.repr = Repr::physical;
}

void Fft::inverse_time_only(Field& f) const {
    f.require(g_, Repr::spectral, "fft.inverse_time_only");
    int dims[1] = {f.nt};
    const int howmany_stride = f.n * f.n * f.n * f.comps;
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_many_dft(
            1, dims, howmany_stride, as_fftw(f.data.data()), nullptr,
            howmany_stride, 1, as_fftw(f.data.data()), nullptr, howmany_stride,
            1, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: time plan creation failed");
    fftw_execute(pg.plan);
}

std::vector<cd> Fft::forward3d(const std::vector<cd>& phys) const {
    const int n = g_.n;
    if (phys.size() != (size_t)n * n * n)
        throw ConfigError("fft.forward3d: slice size mismatch");
    std::vector<cd> out = phys;
    int dims[3] = {n, n, n};
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_dft(3, dims, as_fftw(out.data()),
                                as_fftw(out.data()), FFTW_FORWARD,
                                FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: 3d plan creation failed");
    fftw_execute(pg.plan);
    const double scale = 1.0 / ((double)n * n * n);
    size_t q = 0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            double p12 = g_.phase_map[i1] * g_.phase_map[i2];
            for (int i3 = 0; i3 < n; ++i3, ++q)
                out[q] *= scale * p12 * g_.phase_map[i3];
        }
    return out;
}

std::vector<cd> Fft::inverse3d(const std::vector<cd>& spec) const {
    const int n = g_.n;
    if (spec.size() != (size_t)n * n * n)
        throw ConfigError("fft.inverse3d: slice size mismatch");
    std::vector<cd> out = spec;
    size_t q = 0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            double p12 = g_.phase_map[i1] * g_.phase_map[i2];
            for (int i3 = 0; i3 < n; ++i3, ++q)
                out[q] *= p12 * g_.phase_map[i3];
        }
    int dims[3] = {n, n, n};
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_dft(3, dims, as_fftw(out.data()),
                                as_fftw(out.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: 3d plan creation failed");
    fftw_execute(pg.plan);
    return out;
}

void fft3d_backward_inplace(std::vector<cd>& buf, int n) {
    if (buf.size() != (size_t)n * n * n)
        throw ConfigError("fft3d_backward_inplace: size mismatch");
    int dims[3] = {n, n, n};
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_dft(3, dims, as_fftw(buf.data()),
                                as_fftw(buf.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: 3d plan creation failed");
    fftw_execute(pg.plan);
}

std::vector<double> Fft::pad3d(const std::vector<cd>& spec, int factor) const {
    const int n = g_.n;
    if (spec.size() != (size_t)n * n * n)
        throw ConfigError("fft.pad3d: slice size mismatch");
    if (factor < 1) throw ConfigError("fft.pad3d: factor must be >= 1");
    const int N = factor * n;
    std::vector<cd> buf((size_t)N * N * N, cd(0.0, 0.0));

    // Destination index of signed frequency m on the refined grid, and the
    // parity phase (unchanged: same integer m).
    std::vector<int> dst(n);
    for (int i = 0; i < n; ++i) {
        int m = g_.m_map[i];
        dst[i] = (m % N + N) % N;
    }
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            double p12 = g_.phase_map[i1] * g_.phase_map[i2];
            for (int i3 = 0; i3 < n; ++i3) {
                size_t src = ((size_t)i1 * n + i2) * n + i3;
                size_t d = ((size_t)dst[i1] * N + dst[i2]) * N + dst[i3];
                buf[d] = spec[src] * (p12 * g_.phase_map[i3]);
            }
        }

    int dims[3] = {N, N, N};
    PlanGuard pg;
    {
        std::lock_guard<std::mutex> lk(planner_mutex());
        pg.plan = fftw_plan_dft(3, dims, as_fftw(buf.data()),
                                as_fftw(buf.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    if (!pg.plan) throw NumericError("fft: pad plan creation failed");
    fftw_execute(pg.plan);

    std::vector<double> out((size_t)N * N * N);
    for (size_t q = 0; q < out.size(); ++q) out[q] = buf[q].real();
    return out;
}

} // namespace tpns
