#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fracot/fracops.hpp"
#include "fracot/grid.hpp"

namespace fracot {

/// Staggered divergence at one time level: out_{i,j} = (mx_{i+1/2} - mx_{i-1/2})/dx
/// + (my_{j+1/2} - my_{j-1/2})/dy with zero boundary faces.
/// `mx` has (nx-1)*ny entries, `my` has nx*(ny-1), `out` nx*ny.
void divergence_level(const GridSpec& g, const double* mx, const double* my, double* out);

/// Adjoint gradient at one time level: interior-face differences
/// gx_{i+1/2,j} = (phi_{i+1,j} - phi_{i,j})/dx and the y analogue.
void gradient_adjoint_level(const GridSpec& g, const double* phi, double* gx, double* gy);

/// Convenience wrappers with size checks (single time level).
std::vector<double> divergence(const GridSpec& g, std::span<const double> mx,
                               std::span<const double> my);
std::pair<std::vector<double>, std::vector<double>> gradient_adjoint(const GridSpec& g,
                                                                     std::span<const double> phi);

/// The discrete fractional-transport constraint operator
///
///   K (P, Mx, My) = dtalpha P + dx Mx + dy My   (one value per cell per level)
///
/// applied matrix-free through its Kronecker block structure: the L1
/// time-convolution block acts sitewise, the spatial difference blocks act
/// levelwise. A dense assembly of the same matrix exists in the test suite
/// as an independent oracle.
class ConstraintOperator {
public:
    ConstraintOperator(const GridSpec& grid, const FractionalKernel& kernel);

    const GridSpec& grid() const { return grid_; }
    const FractionalKernel& kernel() const { return kernel_; }

    std::size_t row_count() const { return grid_.phi_size(); }
    std::size_t col_count() const { return grid_.unknown_count(); }

    /// r = K U. `p` has p_size() entries, `mx` mx_size(), `my` my_size(),
    /// `out` phi_size().
    void apply_K(std::span<const double> p, std::span<const double> mx,
                 std::span<const double> my, std::span<double> out) const;
    std::vector<double> apply_K(const FieldSet& f) const;

    /// U = K^T phi, split into the three blocks.
    void apply_Kt(std::span<const double> phi, std::span<double> out_p,
                  std::span<double> out_mx, std::span<double> out_my) const;

    /// Scratch buffers for the normal-operator composition.
    struct Workspace {
        std::vector<double> p, mx, my;
    };
    Workspace make_workspace() const;

    /// out = K K^T phi (symmetric positive definite on the multiplier space).
    void apply_KKt(std::span<const double> phi, std::span<double> out, Workspace& ws) const;
    std::vector<double> apply_KKt(std::span<const double> phi) const;

private:
    GridSpec grid_;
    FractionalKernel kernel_;
};

} // namespace fracot
