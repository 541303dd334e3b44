#include "fracot/fracops.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracot/errors.hpp"

namespace fracot {

FractionalKernel::FractionalKernel(double alpha, double dt, int nt, std::vector<double> gen)
    : alpha_(alpha), dt_(dt), nt_(nt), gen_(std::move(gen)), diff_(nt, 0.0) {
    diff_[0] = gen_[0];
    for (int d = 1; d < nt_; ++d) diff_[d] = gen_[d] - gen_[d - 1];
}

double FractionalKernel::b(int n, int k) const {
    if (k < 1 || n < k || n > nt_) {
        throw std::out_of_range("b_{n,k} requires 1 <= k <= n <= nt, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
    }
    return gen_[n - k];
}

FractionalKernel build_kernel(double alpha, double dt, int nt) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw ConfigError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
    }
    if (!(dt > 0.0) || nt < 1) {
        throw ConfigError("kernel needs dt > 0 and nt >= 1");
    }
    std::vector<double> gen(nt, 0.0);
    if (alpha == 1.0) {
        gen[0] = 1.0 / dt; // backward Euler limit
    } else {
        const double scale = std::pow(dt, -alpha) / std::tgamma(2.0 - alpha);
        for (int d = 0; d < nt; ++d) {
            gen[d] = (std::pow(d + 1.0, 1.0 - alpha) - std::pow(double(d), 1.0 - alpha)) * scale;
        }
    }
    return FractionalKernel(alpha, dt, nt, std::move(gen));
}

void caputo_forward_levels(const FractionalKernel& k, const double* p,
                           std::size_t sites, double* out) {
    const int nt = k.nt();
    // Difference blocks d_k = p_k - p_{k-1}; the operator is the triangular
    // Toeplitz convolution out_n = sum_{k<=n} gen[n-k] d_k.
    std::vector<double> d(std::size_t(nt) * sites);
    for (int lev = 1; lev <= nt; ++lev) {
        const double* cur = p + std::size_t(lev) * sites;
        const double* prev = p + std::size_t(lev - 1) * sites;
        double* dst = d.data() + std::size_t(lev - 1) * sites;
        for (std::size_t s = 0; s < sites; ++s) dst[s] = cur[s] - prev[s];
    }
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= nt; ++n) {
        double* dst = out + std::size_t(n - 1) * sites;
        for (std::size_t s = 0; s < sites; ++s) dst[s] = 0.0;
        for (int kk = 1; kk <= n; ++kk) {
            const double w = k.gen(n - kk);
            if (w == 0.0) continue;
            const double* src = d.data() + std::size_t(kk - 1) * sites;
            for (std::size_t s = 0; s < sites; ++s) dst[s] += w * src[s];
        }
    }
}

void caputo_backward_levels(const FractionalKernel& k, const double* phi,
                            std::size_t sites, double* out) {
    const int nt = k.nt();
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= nt; ++n) {
        double* dst = out + std::size_t(n - 1) * sites;
        const double* own = phi + std::size_t(n - 1) * sites;
        const double g0 = k.gen(0);
        for (std::size_t s = 0; s < sites; ++s) dst[s] = g0 * own[s];
        for (int kk = n + 1; kk <= nt; ++kk) {
            const double w = k.gen_diff(kk - n); // b_{kk,n} - b_{kk,n+1}
            if (w == 0.0) continue;
            const double* src = phi + std::size_t(kk - 1) * sites;
            for (std::size_t s = 0; s < sites; ++s) dst[s] += w * src[s];
        }
    }
}

void caputo_forward_adjoint_levels(const FractionalKernel& k, const double* phi,
                                   std::size_t sites, double* out) {
    const int nt = k.nt();
    // Level 0 accumulates the initial-condition column of the forward
    // operator: -sum_n b_{n,1} phi_n.
    for (std::size_t s = 0; s < sites; ++s) out[s] = 0.0;
    for (int n = 1; n <= nt; ++n) {
        const double w = -k.gen(n - 1);
        const double* src = phi + std::size_t(n - 1) * sites;
        for (std::size_t s = 0; s < sites; ++s) out[s] += w * src[s];
    }
    caputo_backward_levels(k, phi, sites, out + sites);
}

std::vector<double> caputo_forward(const FractionalKernel& k, std::span<const double> timeline) {
    if (timeline.size() != std::size_t(k.nt()) + 1) {
        throw std::invalid_argument("caputo_forward expects nt+1 samples, got " +
                                    std::to_string(timeline.size()));
    }
    std::vector<double> out(k.nt());
    caputo_forward_levels(k, timeline.data(), 1, out.data());
    return out;
}

std::vector<double> caputo_backward(const FractionalKernel& k, std::span<const double> timeline) {
    if (timeline.size() != std::size_t(k.nt())) {
        throw std::invalid_argument("caputo_backward expects nt samples, got " +
                                    std::to_string(timeline.size()));
    }
    std::vector<double> out(k.nt());
    caputo_backward_levels(k, timeline.data(), 1, out.data());
    return out;
}

std::vector<double> rl_tail_weights(const FractionalKernel& k) {
    std::vector<double> w(k.nt());
    for (int n = 1; n <= k.nt(); ++n) w[n - 1] = k.dt() * k.gen(n - 1);
    return w;
}

} // namespace fracot
