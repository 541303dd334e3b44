#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracot/fracops.hpp"
#include "fracot/grid.hpp"

namespace fracot {

enum class Regularizer { None, Quadratic };

/// Interaction cost F(rho) = lambda_R * R(rho) + lambda_Q * rho * Q(x).
/// The quadratic regularizer is R(rho) = rho^2 / 2. An empty preference
/// field means Q = 0; with lambda_R = lambda_Q = 0 the planning problem
/// reduces to plain optimal transport.
struct InteractionSpec {
    double lambda_R = 0.0;
    double lambda_Q = 0.0;
    Regularizer reg = Regularizer::None;
    std::vector<double> preference; // cell-centered Q samples; empty = zero

    double q_at(std::size_t cell) const { return preference.empty() ? 0.0 : preference[cell]; }

    double value(double rho, std::size_t cell) const {
        double v = lambda_Q * rho * q_at(cell);
        if (reg == Regularizer::Quadratic) v += lambda_R * 0.5 * rho * rho;
        return v;
    }
    double derivative(double rho, std::size_t cell) const {
        double d = lambda_Q * q_at(cell);
        if (reg == Regularizer::Quadratic) d += lambda_R * rho;
        return d;
    }

    static InteractionSpec none() { return {}; }
};

/// Discrete L2 norm: sqrt(cell_volume * sum v^2).
double discrete_l2(std::span<const double> v, double cell_volume);

/// Two-face kinetic contribution of cell (i,j) at level n (1..nt):
/// mx_{i+1/2}^2/(P_{i,j}+P_{i+1,j}) + my_{j+1/2}^2/(P_{i,j}+P_{i,j+1}).
/// Terms whose flux lies on the domain boundary are zero. Throws GuardError
/// when an evaluated denominator is not positive.
double kinetic_term(const FieldSet& f, const GridSpec& g, int i, int j, int n);

/// Four-face sum of (flux)^2 / (P-sum)^2 entering the discrete
/// Hamilton-Jacobi relation; boundary-face terms are zero.
double h_term(const FieldSet& f, const GridSpec& g, int i, int j, int n);

/// Discrete generalized Lagrangian:
/// cell_volume * sum_{n,i,j} [kinetic + F(P) + Phi * (transport residual)].
double lagrangian(const FieldSet& f, const InteractionSpec& inter,
                  const FractionalKernel& kernel, const GridSpec& g);

/// Raw first-order-condition fields (before norming). The Hamilton-Jacobi
/// block is the scaled Lagrangian gradient in P and covers every level
/// 1..nt; stationarity only holds on the free levels 1..nt-1 because the
/// endpoints are pinned data.
struct KktResidualFields {
    std::vector<double> transport;      // phi-sized: dtalpha P + div M
    std::vector<double> hamilton_jacobi; // phi-sized: bdtalpha Phi + dF - H
    std::vector<double> flux_x;          // mx-sized: 2 Mx / P-sum - gradx Phi
    std::vector<double> flux_y;          // my-sized
};
KktResidualFields kkt_residual_fields(const FieldSet& f, const InteractionSpec& inter,
                                      const FractionalKernel& kernel, const GridSpec& g);

/// Discrete L2 norms of the four blocks; the Hamilton-Jacobi norm is taken
/// over the free density levels only.
struct KktResiduals {
    double transport = 0.0;
    double hamilton_jacobi = 0.0;
    double flux_x = 0.0;
    double flux_y = 0.0;
};
KktResiduals kkt_residuals(const FieldSet& f, const InteractionSpec& inter,
                           const FractionalKernel& kernel, const GridSpec& g);

/// Cell-sum quadrature of one density level: sum P * dx * dy.
double total_mass(std::span<const double> p_level, const GridSpec& g);

} // namespace fracot
