#pragma once

#include <functional>
#include <vector>

#include "fracot/energy.hpp"
#include "fracot/grid.hpp"
#include "fracot/pgm.hpp"

namespace fracot {

/// A fully specified planning instance: endpoint densities are floored,
/// mass-balanced cell samples; the preference field (if any) lives in the
/// interaction term.
struct ProblemSpec {
    GridSpec grid;
    double alpha = 1.0;
    std::vector<double> rho0;
    std::vector<double> rho1;
    InteractionSpec interaction;
    double density_floor = 1e-8;
};

/// rho(x) = x + 1/2 sampled at cell centers; 1-D on [0,1] only.
std::vector<double> affine_density(const GridSpec& g);

/// Gaussian sampled at cell centers, floored, rescaled to unit total mass.
/// In 1-D (ny = 1) mean_y is ignored.
std::vector<double> gaussian_density(const GridSpec& g, double mean_x, double mean_y,
                                     double stddev, double floor = 1e-8);

/// Grayscale image mapped to density: value/maxval (white = high unless
/// `invert`), floored, rescaled to unit total mass. Image row 0 (top) maps
/// to the highest y row of the grid. Dimensions must equal (nx, ny).
std::vector<double> image_density(const PgmImage& img, const GridSpec& g, bool invert = false,
                                  double floor = 1e-8);

/// 0/1 preference field: 1 on cells whose center satisfies the predicate.
std::vector<double> obstacle_field(const GridSpec& g,
                                   const std::function<bool(double, double)>& region);

/// Exact density/flux of the integer-order transport between
/// rho0 = x + 1/2 and rho1 = 1 on [0,1] x [0,1]; the t = 0 branch is exact.
struct ExactPoint {
    double rho = 0.0;
    double m = 0.0;
};
ExactPoint exact_integer_ot(double x, double t);

/// Rescales rho1 so both total masses match exactly; rho0 is kept as
/// authored. Throws ConfigError when either mass is not positive.
void balance_masses(const std::vector<double>& rho0, std::vector<double>& rho1,
                    const GridSpec& g);

/// Floors both endpoint densities, balances masses, validates alpha, and
/// assembles the problem.
ProblemSpec make_problem(const GridSpec& g, double alpha, std::vector<double> rho0,
                         std::vector<double> rho1, InteractionSpec interaction = {},
                         double density_floor = 1e-8);

} // namespace fracot
