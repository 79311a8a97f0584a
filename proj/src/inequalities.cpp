#include "eventready/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eventready/nelder_mead.hpp"

namespace eventready {

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0 + 1e-12))
        throw std::invalid_argument(std::string("ChProbabilities: ") + name + " outside [0, 1]");
}

}  // namespace

void ChProbabilities::validate() const {
    check_unit_interval(p11, "p11");
    check_unit_interval(p12, "p12");
    check_unit_interval(p21, "p21");
    check_unit_interval(p22, "p22");
    check_unit_interval(s1, "s1");
    check_unit_interval(s2, "s2");
    const double slack = 1e-12;
    // Coincidences cannot exceed the singles they are part of.
    if (p21 > s1 + slack || p22 > s1 + slack)
        throw std::invalid_argument("ChProbabilities: coincidence at a1' exceeds its singles");
    if (p11 > s2 + slack || p21 > s2 + slack)
        throw std::invalid_argument("ChProbabilities: coincidence at a2 exceeds its singles");
    if (pinf) check_unit_interval(*pinf, "pinf");
    if (p1inf) check_unit_interval(*p1inf, "p1inf");
    if (pinf2) check_unit_interval(*pinf2, "pinf2");
}

double ch_loopholefree(const ChProbabilities& p) {
    p.validate();
    return p.p11 - p.p12 + p.p22 + p.p21 - p.s1 - p.s2;
}

double ch_ratio(const ChProbabilities& p) {
    p.validate();
    if (!p.pinf || !p.p1inf || !p.pinf2)
        throw std::invalid_argument("ch_ratio: the polarizer-free entries are required");
    if (*p.pinf == 0.0)
        throw std::domain_error("ch_ratio: undefined for pinf = 0");
    return (p.p11 - p.p12 + p.p22 + p.p21 - *p.p1inf - *p.pinf2) / *p.pinf;
}

std::optional<double> min_efficiency_rho(const std::array<double, 4>& a, double rho, double v) {
    const double t1 = a[0], t2 = a[1], t1p = a[2], t2p = a[3];
    const double denom = pair_p(rho, v, t1, t2) - pair_p(rho, v, t1, t2p) +
                         pair_p(rho, v, t1p, t2p) + pair_p(rho, v, t1p, t2);
    if (!(denom > 0.0)) return std::nullopt;
    const double eta = (singles_p1(rho, t1p) + singles_p2(rho, t2)) / denom;
    // eta = 1 only saturates the bound (S = 0); a violation needs some
    // physical efficiency strictly above the threshold.  Thresholds within
    // rounding distance of 1 count as saturation.
    if (!(eta > 0.0 && eta < 1.0 - 1e-12)) return std::nullopt;
    return eta;
}

std::optional<double> min_efficiency(const std::array<Angle, 4>& angles,
                                     const BeamSplitter& bs, double v) {
    return min_efficiency_rho({angles[0].radians(), angles[1].radians(),
                               angles[2].radians(), angles[3].radians()},
                              bs.rho(), v);
}

namespace {

struct HardyResiduals {
    double g1, g2, g3;  // |ratio1 - 1|, |ratio2 - 1|, P(t1', t2')
    double p_pair;      // P(t1, t2)
};

HardyResiduals hardy_residuals(double rho, double v, const std::array<double, 4>& a) {
    const double t1 = a[0], t2 = a[1], t1p = a[2], t2p = a[3];
    const double d1 = singles_p1(rho, t1);
    const double d2 = singles_p2(rho, t2);
    HardyResiduals r;
    r.g1 = d1 > 0.0 ? std::abs(pair_p(rho, v, t1, t2p) / d1 - 1.0)
                    : std::numeric_limits<double>::infinity();
    r.g2 = d2 > 0.0 ? std::abs(pair_p(rho, v, t1p, t2) / d2 - 1.0)
                    : std::numeric_limits<double>::infinity();
    r.g3 = pair_p(rho, v, t1p, t2p);
    r.p_pair = pair_p(rho, v, t1, t2);
    return r;
}

}  // namespace

HardyReport hardy_check(const HardySettings& settings, double v) {
    const double rho = settings.reflectivity / (1.0 - settings.reflectivity);
    const std::array<double, 4> a = {settings.theta1.radians(), settings.theta2.radians(),
                                     settings.theta1p.radians(), settings.theta2p.radians()};
    const double d1 = singles_p1(rho, a[0]);
    const double d2 = singles_p2(rho, a[1]);

    HardyReport report;
    if (d1 > 0.0) report.ratio1 = pair_p(rho, v, a[0], a[3]) / d1;
    if (d2 > 0.0) report.ratio2 = pair_p(rho, v, a[2], a[1]) / d2;
    report.residual1 = report.ratio1 ? std::abs(*report.ratio1 - 1.0)
                                     : std::numeric_limits<double>::infinity();
    report.residual2 = report.ratio2 ? std::abs(*report.ratio2 - 1.0)
                                     : std::numeric_limits<double>::infinity();
    report.p_primed = pair_p(rho, v, a[2], a[3]);
    report.p_pair = pair_p(rho, v, a[0], a[1]);
    report.violating = report.residual1 < settings.epsilon &&
                       report.residual2 < settings.epsilon &&
                       report.p_primed < settings.epsilon &&
                       report.p_pair > settings.epsilon;
    return report;
}

std::optional<HardySettings> hardy_search(double reflectivity, double v, double epsilon) {
    if (!(reflectivity > 0.0 && reflectivity <= 0.5))
        throw std::invalid_argument("hardy_search: reflectivity must lie in (0, 0.5]");
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("hardy_search: visibility must lie in [0, 1]");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("hardy_search: epsilon must be positive");

    const double rho = reflectivity / (1.0 - reflectivity);

    // Constraints are driven to half the tolerance so the accepted point
    // sits strictly inside the feasible box, not on its boundary.
    const double margin = 0.5 * epsilon;
    auto penalized = [&](const std::array<double, 4>& a) {
        const auto r = hardy_residuals(rho, v, a);
        auto hinge = [&](double g) {
            const double excess = (g - margin) / epsilon;
            return excess > 0.0 ? excess * excess : 0.0;
        };
        return -r.p_pair + hinge(r.g1) + hinge(r.g2) + hinge(r.g3);
    };

    // Seeds on the v = 1 constraint manifold: choosing theta1' fixes the
    // other three angles through the three equalities
    //   tan(t2') = rho tan(t1'), tan(t1) = -1/(rho^2 tan(t1')),
    //   tan(t2) = -rho / tan(t1').
    std::vector<std::array<double, 4>> seeds;
    for (int deg = 2; deg <= 88; deg += 2) {
        const double t1p = deg * kPi / 180.0;
        const double u = std::tan(t1p);
        seeds.push_back({std::atan(-1.0 / (rho * rho * u)), std::atan(-rho / u),
                         t1p, std::atan(rho * u)});
    }
    // Near rho = 1 the manifold itself carries P(t1,t2) = 0 and the
    // maximizer sits a tolerance-sized step off it; seed that step directly.
    {
        const double d3 = std::sqrt(2.0 * epsilon * 0.4);
        const double d = std::sqrt(epsilon * 0.4);
        for (double base : {kPi / 6.0, kPi / 4.0, kPi / 3.0})
            seeds.push_back({base + d3 - kPi / 2.0 - d, base + kPi / 2.0 + d, base, base + d3});
    }

    std::sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) {
        return penalized(a) < penalized(b);
    });

    SimplexOptions opt;
    opt.initial_step = 0.01;
    opt.diameter_tolerance = 1e-13;
    opt.max_iterations = 3000;

    std::optional<HardySettings> best;
    double best_pair = -1.0;
    const std::size_t refine = std::min<std::size_t>(16, seeds.size());
    for (std::size_t i = 0; i < refine; ++i) {
        const auto refined = minimize_simplex<4>(penalized, seeds[i], opt);
        // Local refinement: discard runs that wandered off their seed's
        // branch (the tolerance admits spurious near-degenerate pockets
        // elsewhere in angle space).
        double moved = 0.0;
        for (int k = 0; k < 4; ++k)
            moved = std::max(moved, std::abs(refined.x[k] - seeds[i][k]));
        if (moved > 0.35) continue;
        const auto r = hardy_residuals(rho, v, refined.x);
        if (r.g1 < epsilon && r.g2 < epsilon && r.g3 < epsilon && r.p_pair > epsilon &&
            r.p_pair > best_pair) {
            best_pair = r.p_pair;
            best = HardySettings{Angle(refined.x[0]), Angle(refined.x[1]),
                                 Angle(refined.x[2]), Angle(refined.x[3]),
                                 reflectivity, epsilon};
        }
    }
    return best;
}

std::optional<double> hardy_visibility_threshold(const HardySettings& settings) {
    if (!hardy_check(settings, 1.0).violating) return std::nullopt;
    double lo = 0.0, hi = 1.0;
    if (hardy_check(settings, lo).violating) return lo;
    for (int step = 0; step < 80; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (hardy_check(settings, mid).violating) hi = mid;
        else lo = mid;
    }
    return hi;
}

}  // namespace eventready
