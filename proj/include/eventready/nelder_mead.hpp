#ifndef EVENTREADY_NELDER_MEAD_HPP
#define EVENTREADY_NELDER_MEAD_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace eventready {

struct SimplexOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double initial_step = 0.1;
    double diameter_tolerance = 1e-10;
    int max_iterations = 500;
};

template <std::size_t N>
struct SimplexResult {
    std::array<double, N> x{};
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Derivative-free Nelder-Mead simplex descent.  The objective may return
/// +infinity to mark infeasible points; the simplex backs away from them.
template <std::size_t N, typename F>
SimplexResult<N> minimize_simplex(F&& objective, const std::array<double, N>& start,
                                  const SimplexOptions& opt = {}) {
    using Point = std::array<double, N>;
    std::vector<Point> xs(N + 1, start);
    std::vector<double> fs(N + 1);
    for (std::size_t i = 0; i < N; ++i) xs[i + 1][i] += opt.initial_step;
    for (std::size_t i = 0; i <= N; ++i) fs[i] = objective(xs[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(N + 1);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<Point> xs2(N + 1);
        std::vector<double> fs2(N + 1);
        for (std::size_t i = 0; i <= N; ++i) { xs2[i] = xs[idx[i]]; fs2[i] = fs[idx[i]]; }
        xs = std::move(xs2);
        fs = std::move(fs2);
    };

    SimplexResult<N> result;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        order();
        double diameter = 0.0;
        for (std::size_t i = 1; i <= N; ++i)
            for (std::size_t k = 0; k < N; ++k)
                diameter = std::max(diameter, std::abs(xs[i][k] - xs[0][k]));
        if (diameter < opt.diameter_tolerance) {
            result.converged = true;
            break;
        }

        Point centroid{};
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) centroid[k] += xs[i][k] / static_cast<double>(N);
        auto along = [&](double t) {
            Point p;
            for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + t * (xs[N][k] - centroid[k]);
            return p;
        };

        const Point reflected = along(-opt.reflection);
        const double f_reflected = objective(reflected);
        if (f_reflected < fs[0]) {
            const Point expanded = along(-opt.expansion);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) { xs[N] = expanded; fs[N] = f_expanded; }
            else { xs[N] = reflected; fs[N] = f_reflected; }
        } else if (f_reflected < fs[N - 1]) {
            xs[N] = reflected;
            fs[N] = f_reflected;
        } else {
            const Point contracted = along(opt.contraction);
            const double f_contracted = objective(contracted);
            if (f_contracted < fs[N]) { xs[N] = contracted; fs[N] = f_contracted; }
            else {
                for (std::size_t i = 1; i <= N; ++i) {
                    for (std::size_t k = 0; k < N; ++k)
                        xs[i][k] = xs[0][k] + opt.shrink * (xs[i][k] - xs[0][k]);
                    fs[i] = objective(xs[i]);
                }
            }
        }
    }
    order();
    result.x = xs[0];
    result.value = fs[0];
    result.iterations = it;
    return result;
}

}  // namespace eventready

#endif
