#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracot {

/// Physical extents of the space-time box.
struct Extents {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 1.0;
    double t_final = 1.0;
};

enum class FieldKind { Density, FluxX, FluxY, Multiplier };

struct GridIndex {
    int i = 0; ///< x index (0-based cell or interior-face index)
    int j = 0; ///< y index (0-based cell or interior-face index)
    int n = 0; ///< time level (density: 0..nt, others: 1..nt)
};

/// Rectangular staggered space-time grid.
///
/// Densities and multipliers live on cell centers, fluxes on interior
/// faces; boundary faces carry no unknowns (no-flux condition) and are
/// synthesized as zero by every stencil that touches them. One-dimensional
/// problems use ny = 1, which makes the y-flux block empty.
///
/// Flat layouts are time-major; within a time level the x index runs
/// fastest, then y.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    int nt = 0;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0, t_final = 0;
    double dx = 0, dy = 0, dt = 0;

    int cells() const { return nx * ny; }

    double x_center(int i) const { return x_lo + (i + 0.5) * dx; }
    double y_center(int j) const { return y_lo + (j + 0.5) * dy; }
    /// Face coordinate; f = 0 is the x_lo boundary, f = nx the x_hi one.
    double x_face(int f) const { return x_lo + f * dx; }
    double y_face(int g) const { return y_lo + g * dy; }
    double time(int n) const { return n * dt; }

    double cell_volume() const { return dx * dy * dt; }

    std::size_t p_size() const { return std::size_t(cells()) * (nt + 1); }
    std::size_t mx_size() const { return std::size_t(nx - 1) * ny * nt; }
    std::size_t my_size() const { return std::size_t(nx) * (ny - 1) * nt; }
    std::size_t phi_size() const { return std::size_t(cells()) * nt; }
    /// Total primal unknown count (density + both flux blocks).
    std::size_t unknown_count() const { return p_size() + mx_size() + my_size(); }

    std::size_t mx_level_size() const { return std::size_t(nx - 1) * ny; }
    std::size_t my_level_size() const { return std::size_t(nx) * (ny - 1); }

    /// Cell-centered field at time level n (0..nt).
    std::size_t p_index(int i, int j, int n) const {
        return std::size_t(n) * cells() + std::size_t(j) * nx + i;
    }
    /// Interior x-face i+1/2 (0-based face f between cells f and f+1), level n in 1..nt.
    std::size_t mx_index(int f, int j, int n) const {
        return std::size_t(n - 1) * mx_level_size() + std::size_t(j) * (nx - 1) + f;
    }
    /// Interior y-face (0-based face g between cells (i,g) and (i,g+1)), level n in 1..nt.
    std::size_t my_index(int i, int g, int n) const {
        return std::size_t(n - 1) * my_level_size() + std::size_t(g) * nx + i;
    }
    /// Multiplier at cell (i,j), level n in 1..nt.
    std::size_t phi_index(int i, int j, int n) const {
        return std::size_t(n - 1) * cells() + std::size_t(j) * nx + i;
    }

    /// Flat offset within the given field's own block vector.
    /// Throws std::out_of_range when (i, j, n) is outside the field's ranges.
    std::size_t flatten(FieldKind kind, int i, int j, int n) const;
    /// Inverse of flatten.
    GridIndex unflatten(FieldKind kind, std::size_t offset) const;
    std::size_t field_size(FieldKind kind) const;
};

/// Validates counts and extents and fills in the derived spacings.
GridSpec build_grid(int nx, int ny, int nt, const Extents& extents);

/// The discrete unknowns in the block layout shared by all operators:
/// density P on cell centers for levels 0..nt, fluxes Mx/My on interior
/// faces for levels 1..nt, multiplier Phi on cell centers for levels 1..nt.
struct FieldSet {
    int nx = 0, ny = 0, nt = 0;
    std::vector<double> p;
    std::vector<double> mx;
    std::vector<double> my;
    std::vector<double> phi;

    FieldSet() = default;
    explicit FieldSet(const GridSpec& g)
        : nx(g.nx), ny(g.ny), nt(g.nt),
          p(g.p_size(), 0.0), mx(g.mx_size(), 0.0),
          my(g.my_size(), 0.0), phi(g.phi_size(), 0.0) {}

    std::span<double> p_level(int n) {
        return {p.data() + std::size_t(n) * nx * ny, std::size_t(nx) * ny};
    }
    std::span<const double> p_level(int n) const {
        return {p.data() + std::size_t(n) * nx * ny, std::size_t(nx) * ny};
    }
    std::span<double> mx_level(int n) {
        const std::size_t s = std::size_t(nx - 1) * ny;
        return {mx.data() + std::size_t(n - 1) * s, s};
    }
    std::span<const double> mx_level(int n) const {
        const std::size_t s = std::size_t(nx - 1) * ny;
        return {mx.data() + std::size_t(n - 1) * s, s};
    }
    std::span<double> my_level(int n) {
        const std::size_t s = std::size_t(nx) * (ny - 1);
        return {my.data() + std::size_t(n - 1) * s, s};
    }
    std::span<const double> my_level(int n) const {
        const std::size_t s = std::size_t(nx) * (ny - 1);
        return {my.data() + std::size_t(n - 1) * s, s};
    }
    std::span<double> phi_level(int n) {
        return {phi.data() + std::size_t(n - 1) * nx * ny, std::size_t(nx) * ny};
    }
    std::span<const double> phi_level(int n) const {
        return {phi.data() + std::size_t(n - 1) * nx * ny, std::size_t(nx) * ny};
    }
};

} // namespace fracot
