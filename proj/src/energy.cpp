#include "fracot/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracot/errors.hpp"
#include "fracot/spaceops.hpp"

namespace fracot {

namespace {

double guarded_quotient(double num, double denom, int i, int j, int n) {
    if (!(denom > 0.0)) {
        throw GuardError("density sum " + std::to_string(denom) + " not positive at cell (" +
                         std::to_string(i) + "," + std::to_string(j) + "), level " +
                         std::to_string(n));
    }
    return num / denom;
}

} // namespace

double discrete_l2(std::span<const double> v, double cell_volume) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(cell_volume * s);
}

double kinetic_term(const FieldSet& f, const GridSpec& g, int i, int j, int n) {
    double val = 0.0;
    if (i < g.nx - 1) {
        const double m = f.mx[g.mx_index(i, j, n)];
        const double psum = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i + 1, j, n)];
        val += guarded_quotient(m * m, psum, i, j, n);
    }
    if (j < g.ny - 1) {
        const double m = f.my[g.my_index(i, j, n)];
        const double psum = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i, j + 1, n)];
        val += guarded_quotient(m * m, psum, i, j, n);
    }
    return val;
}

double h_term(const FieldSet& f, const GridSpec& g, int i, int j, int n) {
    double val = 0.0;
    if (i < g.nx - 1) {
        const double m = f.mx[g.mx_index(i, j, n)];
        const double ps = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i + 1, j, n)];
        val += guarded_quotient(m * m, ps * ps, i, j, n);
    }
    if (i > 0) {
        const double m = f.mx[g.mx_index(i - 1, j, n)];
        const double ps = f.p[g.p_index(i - 1, j, n)] + f.p[g.p_index(i, j, n)];
        val += guarded_quotient(m * m, ps * ps, i, j, n);
    }
    if (j < g.ny - 1) {
        const double m = f.my[g.my_index(i, j, n)];
        const double ps = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i, j + 1, n)];
        val += guarded_quotient(m * m, ps * ps, i, j, n);
    }
    if (j > 0) {
        const double m = f.my[g.my_index(i, j - 1, n)];
        const double ps = f.p[g.p_index(i, j - 1, n)] + f.p[g.p_index(i, j, n)];
        val += guarded_quotient(m * m, ps * ps, i, j, n);
    }
    return val;
}

double lagrangian(const FieldSet& f, const InteractionSpec& inter,
                  const FractionalKernel& kernel, const GridSpec& g) {
    ConstraintOperator op(g, kernel);
    const std::vector<double> residual = op.apply_K(f);
    double sum = 0.0;
    for (int n = 1; n <= g.nt; ++n) {
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t cell = std::size_t(j) * g.nx + i;
                const std::size_t idx = g.phi_index(i, j, n);
                sum += kinetic_term(f, g, i, j, n);
                sum += inter.value(f.p[g.p_index(i, j, n)], cell);
                sum += f.phi[idx] * residual[idx];
            }
        }
    }
    return g.cell_volume() * sum;
}

KktResidualFields kkt_residual_fields(const FieldSet& f, const InteractionSpec& inter,
                                      const FractionalKernel& kernel, const GridSpec& g) {
    KktResidualFields out;
    ConstraintOperator op(g, kernel);
    out.transport = op.apply_K(f);

    out.hamilton_jacobi.resize(g.phi_size());
    caputo_backward_levels(kernel, f.phi.data(), g.cells(), out.hamilton_jacobi.data());
    for (int n = 1; n <= g.nt; ++n) {
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t cell = std::size_t(j) * g.nx + i;
                const std::size_t idx = g.phi_index(i, j, n);
                out.hamilton_jacobi[idx] +=
                    inter.derivative(f.p[g.p_index(i, j, n)], cell) - h_term(f, g, i, j, n);
            }
        }
    }

    out.flux_x.resize(g.mx_size());
    out.flux_y.resize(g.my_size());
    std::vector<double> gx(g.mx_level_size()), gy(g.my_level_size());
    for (int n = 1; n <= g.nt; ++n) {
        gradient_adjoint_level(g, f.phi.data() + std::size_t(n - 1) * g.cells(), gx.data(),
                               gy.data());
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx - 1; ++i) {
                const std::size_t idx = g.mx_index(i, j, n);
                const double psum = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i + 1, j, n)];
                out.flux_x[idx] = guarded_quotient(2.0 * f.mx[idx], psum, i, j, n) -
                                  gx[std::size_t(j) * (g.nx - 1) + i];
            }
        }
        for (int j = 0; j < g.ny - 1; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t idx = g.my_index(i, j, n);
                const double psum = f.p[g.p_index(i, j, n)] + f.p[g.p_index(i, j + 1, n)];
                out.flux_y[idx] = guarded_quotient(2.0 * f.my[idx], psum, i, j, n) -
                                  gy[std::size_t(j) * g.nx + i];
            }
        }
    }
    return out;
}

KktResiduals kkt_residuals(const FieldSet& f, const InteractionSpec& inter,
                           const FractionalKernel& kernel, const GridSpec& g) {
    const KktResidualFields fields = kkt_residual_fields(f, inter, kernel, g);
    const double dV = g.cell_volume();
    KktResiduals r;
    r.transport = discrete_l2(fields.transport, dV);
    // Stationarity in P holds on levels 1..nt-1 only (endpoints are data).
    const std::size_t free_len = std::size_t(g.cells()) * (g.nt - 1);
    r.hamilton_jacobi =
        discrete_l2({fields.hamilton_jacobi.data(), free_len}, dV);
    r.flux_x = discrete_l2(fields.flux_x, dV);
    r.flux_y = discrete_l2(fields.flux_y, dV);
    return r;
}

double total_mass(std::span<const double> p_level, const GridSpec& g) {
    double s = 0.0;
    for (double v : p_level) s += v;
    return s * g.dx * g.dy;
}

} // namespace fracot
