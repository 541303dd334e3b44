#include "fracot/grid.hpp"

#include <stdexcept>
#include <string>

#include "fracot/errors.hpp"

namespace fracot {

GridSpec build_grid(int nx, int ny, int nt, const Extents& e) {
    if (nx < 1 || ny < 1 || nt < 1) {
        throw ConfigError("grid counts must be positive, got nx=" + std::to_string(nx) +
                          " ny=" + std::to_string(ny) + " nt=" + std::to_string(nt));
    }
    if (!(e.x_hi > e.x_lo) || !(e.y_hi > e.y_lo) || !(e.t_final > 0.0)) {
        throw ConfigError("grid extents must be well-ordered with t_final > 0");
    }
    GridSpec g;
    g.nx = nx;
    g.ny = ny;
    g.nt = nt;
    g.x_lo = e.x_lo;
    g.x_hi = e.x_hi;
    g.y_lo = e.y_lo;
    g.y_hi = e.y_hi;
    g.t_final = e.t_final;
    g.dx = (e.x_hi - e.x_lo) / nx;
    g.dy = (e.y_hi - e.y_lo) / ny;
    g.dt = e.t_final / nt;
    return g;
}

namespace {

[[noreturn]] void out_of_range(FieldKind kind, int i, int j, int n) {
    const char* names[] = {"density", "flux_x", "flux_y", "multiplier"};
    throw std::out_of_range(std::string("index (") + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(n) +
                            ") outside " + names[static_cast<int>(kind)] + " field");
}

} // namespace

std::size_t GridSpec::field_size(FieldKind kind) const {
    switch (kind) {
        case FieldKind::Density: return p_size();
        case FieldKind::FluxX: return mx_size();
        case FieldKind::FluxY: return my_size();
        case FieldKind::Multiplier: return phi_size();
    }
    return 0;
}

std::size_t GridSpec::flatten(FieldKind kind, int i, int j, int n) const {
    switch (kind) {
        case FieldKind::Density:
            if (i < 0 || i >= nx || j < 0 || j >= ny || n < 0 || n > nt) out_of_range(kind, i, j, n);
            return p_index(i, j, n);
        case FieldKind::FluxX:
            if (i < 0 || i >= nx - 1 || j < 0 || j >= ny || n < 1 || n > nt) out_of_range(kind, i, j, n);
            return mx_index(i, j, n);
        case FieldKind::FluxY:
            if (i < 0 || i >= nx || j < 0 || j >= ny - 1 || n < 1 || n > nt) out_of_range(kind, i, j, n);
            return my_index(i, j, n);
        case FieldKind::Multiplier:
            if (i < 0 || i >= nx || j < 0 || j >= ny || n < 1 || n > nt) out_of_range(kind, i, j, n);
            return phi_index(i, j, n);
    }
    out_of_range(kind, i, j, n);
}

GridIndex GridSpec::unflatten(FieldKind kind, std::size_t offset) const {
    if (offset >= field_size(kind)) {
        throw std::out_of_range("flat offset " + std::to_string(offset) + " outside field");
    }
    const int row = (kind == FieldKind::FluxX) ? nx - 1 : nx;
    const int cols = (kind == FieldKind::FluxY) ? ny - 1 : ny;
    const std::size_t block = std::size_t(row) * cols;
    GridIndex idx;
    idx.n = static_cast<int>(offset / block);
    const std::size_t rem = offset % block;
    idx.j = static_cast<int>(rem / row);
    idx.i = static_cast<int>(rem % row);
    if (kind != FieldKind::Density) idx.n += 1; // those fields start at level 1
    return idx;
}

} // namespace fracot
