#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracot {

/// L1 quadrature weights for the Caputo derivative of order alpha on a
/// uniform time grid with nt steps of size dt.
///
/// The weight table b_{n,k} (1 <= k <= n <= nt) depends only on n - k, so a
/// single generator row of length nt is stored:
///
///   gen[d] = b_{n, n-d} = ((d+1)^{1-alpha} - d^{1-alpha}) / (Gamma(2-alpha) * dt^alpha)
///
/// alpha = 1 is carried as a first-class degenerate kernel (gen = 1/dt, 0,
/// 0, ...) so integer-order runs share the fractional code path; it is the
/// alpha -> 1 limit of the L1 weights (backward Euler).
class FractionalKernel {
public:
    FractionalKernel() = default;
    FractionalKernel(double alpha, double dt, int nt, std::vector<double> gen);

    double alpha() const { return alpha_; }
    double dt() const { return dt_; }
    int nt() const { return nt_; }

    /// b_{n,k} in the paper's 1-based indexing, valid for 1 <= k <= n <= nt.
    double b(int n, int k) const;
    /// Generator value gen[d] = b_{n, n-d}; d in 0..nt-1.
    double gen(int d) const { return gen_[d]; }
    /// gen[d] - gen[d-1] (negative for d >= 1); the coefficient of the
    /// history terms in the backward operator.
    double gen_diff(int d) const { return diff_[d]; }

private:
    double alpha_ = 0;
    double dt_ = 0;
    int nt_ = 0;
    std::vector<double> gen_;
    std::vector<double> diff_;
};

/// Builds the L1 weight kernel. Requires 0 < alpha <= 1, dt > 0, nt >= 1.
FractionalKernel build_kernel(double alpha, double dt, int nt);

// Blocked forms: each "level" is a contiguous block of `sites` values and
// consecutive levels are laid out back to back (the FieldSet layout). All
// sites are processed at once so the triangular time convolution runs over
// contiguous memory.

/// Forward Caputo operator. `p` holds nt+1 levels, `out` receives nt levels:
///   out_n = b_{n,n} p_n + sum_{k=1}^{n-1} (b_{n,k} - b_{n,k+1}) p_k - b_{n,1} p_0.
void caputo_forward_levels(const FractionalKernel& k, const double* p,
                           std::size_t sites, double* out);

/// Backward (discrete adjoint / Riemann-Liouville) operator. `phi` holds nt
/// levels, `out` receives nt levels:
///   out_n = b_{n,n} phi_n + sum_{k=n+1}^{nt} (b_{k,n} - b_{k,n+1}) phi_k.
void caputo_backward_levels(const FractionalKernel& k, const double* phi,
                            std::size_t sites, double* out);

/// Exact transpose of caputo_forward_levels as a map from nt+1 levels to nt
/// levels. `phi` holds nt levels, `out` receives nt+1 levels:
///   out_0 = -sum_n b_{n,1} phi_n,   out_k = backward operator at k (k >= 1).
void caputo_forward_adjoint_levels(const FractionalKernel& k, const double* phi,
                                   std::size_t sites, double* out);

/// Single-timeline conveniences (sites = 1).
std::vector<double> caputo_forward(const FractionalKernel& k, std::span<const double> timeline);
std::vector<double> caputo_backward(const FractionalKernel& k, std::span<const double> timeline);

/// Quadrature weights (dt * b_{n,1})_{n=1..nt} of the backward
/// Riemann-Liouville tail integral that multiplies the initial density in
/// the discrete Lagrangian.
std::vector<double> rl_tail_weights(const FractionalKernel& k);

} // namespace fracot
