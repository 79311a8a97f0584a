#ifndef EVENTREADY_INEQUALITIES_HPP
#define EVENTREADY_INEQUALITIES_HPP

#include <array>
#include <optional>

#include "eventready/core_model.hpp"

namespace eventready {

/// The probabilities entering the Clauser-Horne combinations.  Coincidences
/// p_ij pair setting a1 or a1' with a2 or a2'; s1 and s2 are the singles at
/// a1' and a2.  The pinf fields (joint and one-sided detections with the
/// polarizer removed) are only needed by the ratio form.
struct ChProbabilities {
    double p11 = 0.0;  // P(a1, a2)
    double p12 = 0.0;  // P(a1, a2')
    double p21 = 0.0;  // P(a1', a2)
    double p22 = 0.0;  // P(a1', a2')
    double s1 = 0.0;   // P(a1')
    double s2 = 0.0;   // P(a2)
    std::optional<double> pinf;   // P(inf, inf)
    std::optional<double> p1inf;  // P(a1', inf)
    std::optional<double> pinf2;  // P(inf, a2)

    void validate() const;
};

/// Loophole-free CH value  S = p11 - p12 + p22 + p21 - s1 - s2.
/// Local models obey -1 <= S <= 0; S > 0 signals a quantum violation.
double ch_loopholefree(const ChProbabilities& p);

/// No-enhancement ratio form:
/// [p11 - p12 + p22 + p21 - p1inf - pinf2] / pinf.   Throws if pinf == 0.
double ch_ratio(const ChProbabilities& p);

/// Minimal detection efficiency saturating the loophole-free CH bound at the
/// given angles, with coincidences scaling as eta^2 and singles as eta:
/// eta = [p(theta1') + p(theta2)] / [p(t1,t2) - p(t1,t2') + p(t1',t2') + p(t1',t2)].
/// Returns nullopt (no violation) when the denominator is not positive or no
/// physical efficiency violates, i.e. the threshold is not inside (0, 1).
std::optional<double> min_efficiency(const std::array<Angle, 4>& angles /* t1, t2, t1', t2' */,
                                     const BeamSplitter& bs, double v);
std::optional<double> min_efficiency_rho(const std::array<double, 4>& angles_rad,
                                         double rho, double v);

/// Polarizer orientations probing the Hardy equalities, plus the splitter
/// reflectivity and the tolerance used for the equality constraints.
struct HardySettings {
    Angle theta1, theta2, theta1p, theta2p;
    double reflectivity = 0.5;
    double epsilon = 1e-6;
};

struct HardyReport {
    std::optional<double> ratio1;  // P(t1, t2') / P(t1), nullopt if the singles vanish
    std::optional<double> ratio2;  // P(t1', t2) / P(t2)
    double residual1 = 0.0;        // |ratio1 - 1|
    double residual2 = 0.0;
    double p_primed = 0.0;         // P(t1', t2'), target 0
    double p_pair = 0.0;           // P(t1, t2), target > 0
    bool violating = false;
};

/// Evaluates the four Hardy conditions on the analytic probabilities at
/// visibility v.  HARDY-VIOLATING iff both ratio residuals and P(t1',t2')
/// are below epsilon while P(t1,t2) exceeds it.
HardyReport hardy_check(const HardySettings& settings, double v);

/// Searches for polarizer settings maximizing P(theta1, theta2) subject to
/// the three Hardy equality constraints, each within epsilon: seeds solved
/// on the constraint manifold plus penalty-function local refinement.
std::optional<HardySettings> hardy_search(double reflectivity, double v, double epsilon);

/// Largest visibility degradation the given settings tolerate: the smallest
/// v at which hardy_check still classifies them HARDY-VIOLATING (bisection;
/// settings are typically the hardy_search result at v = 1).
std::optional<double> hardy_visibility_threshold(const HardySettings& settings);

}  // namespace eventready

#endif
