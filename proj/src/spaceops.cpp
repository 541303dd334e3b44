#include "fracot/spaceops.hpp"

#include <stdexcept>
#include <string>

#include "fracot/errors.hpp"

namespace fracot {

void divergence_level(const GridSpec& g, const double* mx, const double* my, double* out) {
    const int nx = g.nx, ny = g.ny;
    const double inv_dx = 1.0 / g.dx;
    const double inv_dy = 1.0 / g.dy;
    for (int j = 0; j < ny; ++j) {
        const double* row = mx + std::size_t(j) * (nx - 1);
        double* dst = out + std::size_t(j) * nx;
        for (int i = 0; i < nx; ++i) {
            const double right = (i < nx - 1) ? row[i] : 0.0;
            const double left = (i > 0) ? row[i - 1] : 0.0;
            dst[i] = (right - left) * inv_dx;
        }
    }
    if (ny > 1) {
        for (int j = 0; j < ny; ++j) {
            const double* up = (j < ny - 1) ? my + std::size_t(j) * nx : nullptr;
            const double* down = (j > 0) ? my + std::size_t(j - 1) * nx : nullptr;
            double* dst = out + std::size_t(j) * nx;
            for (int i = 0; i < nx; ++i) {
                const double t = up ? up[i] : 0.0;
                const double b = down ? down[i] : 0.0;
                dst[i] += (t - b) * inv_dy;
            }
        }
    }
}

void gradient_adjoint_level(const GridSpec& g, const double* phi, double* gx, double* gy) {
    const int nx = g.nx, ny = g.ny;
    const double inv_dx = 1.0 / g.dx;
    const double inv_dy = 1.0 / g.dy;
    for (int j = 0; j < ny; ++j) {
        const double* row = phi + std::size_t(j) * nx;
        double* dst = gx + std::size_t(j) * (nx - 1);
        for (int i = 0; i < nx - 1; ++i) dst[i] = (row[i + 1] - row[i]) * inv_dx;
    }
    for (int j = 0; j + 1 < ny; ++j) {
        const double* row = phi + std::size_t(j) * nx;
        const double* next = phi + std::size_t(j + 1) * nx;
        double* dst = gy + std::size_t(j) * nx;
        for (int i = 0; i < nx; ++i) dst[i] = (next[i] - row[i]) * inv_dy;
    }
}

std::vector<double> divergence(const GridSpec& g, std::span<const double> mx,
                               std::span<const double> my) {
    if (mx.size() != g.mx_level_size() || my.size() != g.my_level_size()) {
        throw std::invalid_argument("divergence: flux level sizes do not match grid");
    }
    std::vector<double> out(g.cells());
    divergence_level(g, mx.data(), my.data(), out.data());
    return out;
}

std::pair<std::vector<double>, std::vector<double>> gradient_adjoint(const GridSpec& g,
                                                                     std::span<const double> phi) {
    if (phi.size() != std::size_t(g.cells())) {
        throw std::invalid_argument("gradient_adjoint: phi level size does not match grid");
    }
    std::vector<double> gx(g.mx_level_size()), gy(g.my_level_size());
    gradient_adjoint_level(g, phi.data(), gx.data(), gy.data());
    return {std::move(gx), std::move(gy)};
}

ConstraintOperator::ConstraintOperator(const GridSpec& grid, const FractionalKernel& kernel)
    : grid_(grid), kernel_(kernel) {
    if (kernel.nt() != grid.nt) {
        throw ConfigError("kernel step count does not match grid");
    }
}

void ConstraintOperator::apply_K(std::span<const double> p, std::span<const double> mx,
                                 std::span<const double> my, std::span<double> out) const {
    if (p.size() != grid_.p_size() || mx.size() != grid_.mx_size() ||
        my.size() != grid_.my_size() || out.size() != grid_.phi_size()) {
        throw std::invalid_argument("apply_K: block sizes do not match grid");
    }
    const std::size_t sites = grid_.cells();
    caputo_forward_levels(kernel_, p.data(), sites, out.data());
    std::vector<double> div(sites);
    for (int n = 1; n <= grid_.nt; ++n) {
        divergence_level(grid_, mx.data() + std::size_t(n - 1) * grid_.mx_level_size(),
                         my.data() + std::size_t(n - 1) * grid_.my_level_size(), div.data());
        double* dst = out.data() + std::size_t(n - 1) * sites;
        for (std::size_t s = 0; s < sites; ++s) dst[s] += div[s];
    }
}

std::vector<double> ConstraintOperator::apply_K(const FieldSet& f) const {
    std::vector<double> out(grid_.phi_size());
    apply_K(f.p, f.mx, f.my, out);
    return out;
}

void ConstraintOperator::apply_Kt(std::span<const double> phi, std::span<double> out_p,
                                  std::span<double> out_mx, std::span<double> out_my) const {
    if (phi.size() != grid_.phi_size() || out_p.size() != grid_.p_size() ||
        out_mx.size() != grid_.mx_size() || out_my.size() != grid_.my_size()) {
        throw std::invalid_argument("apply_Kt: block sizes do not match grid");
    }
    const std::size_t sites = grid_.cells();
    caputo_forward_adjoint_levels(kernel_, phi.data(), sites, out_p.data());
    // (C^x)^T phi = -grad_x phi per level, and the y analogue.
    for (int n = 1; n <= grid_.nt; ++n) {
        gradient_adjoint_level(grid_, phi.data() + std::size_t(n - 1) * sites,
                               out_mx.data() + std::size_t(n - 1) * grid_.mx_level_size(),
                               out_my.data() + std::size_t(n - 1) * grid_.my_level_size());
    }
    for (auto& v : out_mx) v = -v;
    for (auto& v : out_my) v = -v;
}

ConstraintOperator::Workspace ConstraintOperator::make_workspace() const {
    return Workspace{std::vector<double>(grid_.p_size()), std::vector<double>(grid_.mx_size()),
                     std::vector<double>(grid_.my_size())};
}

void ConstraintOperator::apply_KKt(std::span<const double> phi, std::span<double> out,
                                   Workspace& ws) const {
    apply_Kt(phi, ws.p, ws.mx, ws.my);
    apply_K(ws.p, ws.mx, ws.my, out);
}

std::vector<double> ConstraintOperator::apply_KKt(std::span<const double> phi) const {
    Workspace ws = make_workspace();
    std::vector<double> out(grid_.phi_size());
    apply_KKt(phi, out, ws);
    return out;
}

} // namespace fracot
