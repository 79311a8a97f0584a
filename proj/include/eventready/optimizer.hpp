#ifndef EVENTREADY_OPTIMIZER_HPP
#define EVENTREADY_OPTIMIZER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eventready/inequalities.hpp"

namespace eventready {

struct ThresholdResult {
    std::optional<double> eta_min;        // absent when nothing violates
    std::array<Angle, 4> angles{};        // t1, t2, t1', t2'
    bool converged = false;
    int iterations = 0;
};

struct MinimizeOptions {
    int grid_points = 24;           // coarse seed grid per axis
    int refine_seeds = 8;           // best seeds carried into simplex refinement
    std::uint64_t seed_shuffle = 0; // != 0 permutes seed order (results must not change)
};

/// Global minimum of min_efficiency over the four polarizer angles at fixed
/// visibility and splitter asymmetry rho = R/T = R/(1-R).
ThresholdResult minimize_threshold(double v, double rho, const MinimizeOptions& options = {});

/// One point of the efficiency surface.  rho follows the R/(1-R) convention;
/// for a lossless splitter it coincides with R/T.
struct SweepRow {
    double v = 1.0;
    double rho = 1.0;
    double reflectivity = 0.5;
    std::optional<double> eta_min;
    std::array<Angle, 4> angles{};
};

/// Row-major sweep (v outer, rho inner).  Grid points are evaluated
/// concurrently; row order is fixed by the grids regardless of scheduling.
std::vector<SweepRow> sweep_surface(std::span<const double> v_grid,
                                    std::span<const double> rho_grid,
                                    const MinimizeOptions& options = {});

/// Worker count for sweeps: the EVENTREADY_THREADS environment variable when
/// set, otherwise the hardware concurrency.
unsigned sweep_thread_count();

}  // namespace eventready

#endif
