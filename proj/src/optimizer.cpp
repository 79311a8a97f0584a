#include "eventready/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "eventready/nelder_mead.hpp"

namespace eventready {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

double threshold_objective(double rho, double v, const std::array<double, 4>& angles) {
    const auto eta = min_efficiency_rho(angles, rho, v);
    return eta ? *eta : kInfinity;
}

}  // namespace

ThresholdResult minimize_threshold(double v, double rho, const MinimizeOptions& options) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("minimize_threshold: visibility must lie in [0, 1]");
    if (!(rho > 0.0))
        throw std::invalid_argument("minimize_threshold: rho must be positive");
    if (options.grid_points < 2 || options.refine_seeds < 1)
        throw std::invalid_argument("minimize_threshold: degenerate search options");

    auto objective = [&](const std::array<double, 4>& a) {
        return threshold_objective(rho, v, a);
    };

    // Coarse grid seeding.  Trig per axis is shared across the n^4 pass.
    const int n = options.grid_points;
    std::vector<double> axis(n);
    for (int i = 0; i < n; ++i) axis[i] = i * kPi / n;
    std::vector<double> p_table(static_cast<std::size_t>(n) * n), sp1(n), sp2(n);
    for (int i = 0; i < n; ++i) {
        sp1[i] = singles_p1(rho, axis[i]);
        sp2[i] = singles_p2(rho, axis[i]);
        for (int j = 0; j < n; ++j)
            p_table[static_cast<std::size_t>(i) * n + j] = pair_p(rho, v, axis[i], axis[j]);
    }
    auto p_at = [&](int i, int j) { return p_table[static_cast<std::size_t>(i) * n + j]; };

    struct Seed {
        double value;
        std::array<double, 4> angles;
    };
    std::vector<Seed> best_seeds;
    const std::size_t keep = static_cast<std::size_t>(options.refine_seeds);
    auto offer = [&](double value, std::array<double, 4> a) {
        if (best_seeds.size() < keep) {
            best_seeds.push_back({value, a});
            std::push_heap(best_seeds.begin(), best_seeds.end(),
                           [](const Seed& x, const Seed& y) { return x.value < y.value; });
            return;
        }
        if (value >= best_seeds.front().value) return;
        std::pop_heap(best_seeds.begin(), best_seeds.end(),
                      [](const Seed& x, const Seed& y) { return x.value < y.value; });
        best_seeds.back() = {value, a};
        std::push_heap(best_seeds.begin(), best_seeds.end(),
                       [](const Seed& x, const Seed& y) { return x.value < y.value; });
    };

    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i1p = 0; i1p < n; ++i1p) {
                const double num = sp1[i1p] + sp2[i2];
                const double partial = p_at(i1, i2) + p_at(i1p, i2);
                for (int i2p = 0; i2p < n; ++i2p) {
                    const double denom = partial - p_at(i1, i2p) + p_at(i1p, i2p);
                    if (!(denom > 0.0)) continue;
                    const double eta = num / denom;
                    if (eta > 0.0 && eta < 1.0 - 1e-12)
                        offer(eta, {axis[i1], axis[i2], axis[i1p], axis[i2p]});
                }
            }

    ThresholdResult result;
    if (best_seeds.empty()) return result;  // nothing violates anywhere on the grid

    if (options.seed_shuffle != 0) {
        std::mt19937_64 rng(options.seed_shuffle);
        std::shuffle(best_seeds.begin(), best_seeds.end(), rng);
    }

    SimplexOptions simplex;
    simplex.initial_step = kPi / (2.0 * n);
    simplex.diameter_tolerance = 1e-10;
    simplex.max_iterations = 500;

    double best_value = kInfinity;
    std::array<double, 4> best_angles{};
    bool best_converged = false;
    int iterations = 0;
    for (const auto& seed : best_seeds) {
        const auto refined = minimize_simplex<4>(objective, seed.angles, simplex);
        iterations += refined.iterations;
        if (refined.value < best_value) {
            best_value = refined.value;
            best_angles = refined.x;
            best_converged = refined.converged;
        }
    }
    result.iterations = iterations;
    if (!(best_value < 1.0)) return result;
    result.eta_min = best_value;
    result.converged = best_converged;
    for (int k = 0; k < 4; ++k) result.angles[k] = Angle(best_angles[k]);
    return result;
}

unsigned sweep_thread_count() {
    if (const char* env = std::getenv("EVENTREADY_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<SweepRow> sweep_surface(std::span<const double> v_grid,
                                    std::span<const double> rho_grid,
                                    const MinimizeOptions& options) {
    if (v_grid.empty() || rho_grid.empty())
        throw std::invalid_argument("sweep_surface: grids must be non-empty");

    std::vector<SweepRow> rows(v_grid.size() * rho_grid.size());
    auto run_point = [&](std::size_t index) {
        const double v = v_grid[index / rho_grid.size()];
        const double rho = rho_grid[index % rho_grid.size()];
        const auto threshold = minimize_threshold(v, rho, options);
        SweepRow row;
        row.v = v;
        row.rho = rho;
        row.reflectivity = rho / (1.0 + rho);
        // rho = R/(1-R) and the model's R/T agree for a lossless splitter
        if (std::abs(row.reflectivity / (1.0 - row.reflectivity) - rho) >
            1e-12 * std::max(1.0, rho))
            throw std::logic_error("sweep_surface: rho/reflectivity conventions diverged");
        row.eta_min = threshold.eta_min;
        row.angles = threshold.angles;
        rows[index] = row;
    };

    const std::size_t total = rows.size();
    const unsigned workers = std::min<std::size_t>(sweep_thread_count(), total);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) run_point(i);
        return rows;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < total; i += workers) run_point(i);
        });
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace eventready
