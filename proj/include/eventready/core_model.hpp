#ifndef EVENTREADY_CORE_MODEL_HPP
#define EVENTREADY_CORE_MODEL_HPP

#include "eventready/experiment.hpp"

namespace eventready {

/// Q(q)_ij = q_x sin(theta_i) cos(theta_j) - q_y cos(theta_i) sin(theta_j),
/// the polarizer/splitter overlap factor entering the four-fold amplitude.
double q_factor(double q_x, double q_y, Angle theta_i, Angle theta_j);

/// Coincidence-counting visibility of finite detector openings,
/// sinc^2(pi delta_z / L); exactly 1 at delta_z = 0.
double visibility(const Geometry& geometry);

/// Probability that all four detectors fire:
/// (eta^2/4) (A^2 + B^2 - 2 v A B cos phi) with A = Q(t)_11' Q(t)_22',
/// B = Q(r)_12' Q(r)_21'.
double fourfold_probability(const ExperimentConfig& config);

/// Symmetric-splitter, unit-visibility special case
/// (1/16) sin^2(theta1' - theta2') sin^2(theta1 - theta2).
double symmetric_probability(Angle theta1p, Angle theta2p, Angle theta1, Angle theta2);

/// Coincidence probability with the preselector polarizers removed:
/// (1/4) [(T - R)^2 + 2 T R sin^2(theta1 - theta2)].
double partial_entanglement_probability(const BeamSplitter& bs, Angle theta1, Angle theta2);

/// Preselected Bell-pair coincidence probability (preselector projection
/// fixed at theta1' = 90 deg, theta2' = 0 deg, phi = 0):
/// eta^2 s (cos^2 t1 sin^2 t2 - 2 v rho cos t1 sin t1 cos t2 sin t2
///          + rho^2 cos^2 t2 sin^2 t1).
double bell_pair_probability(const BeamSplitter& bs, double v, Angle theta1, Angle theta2,
                             double eta);

/// Singles probability at D1: eta s (cos^2 t1 + rho^2 sin^2 t1).
double singles_probability_d1(const BeamSplitter& bs, Angle theta1, double eta);

/// Singles probability at D2: eta s (sin^2 t2 + rho^2 cos^2 t2).
double singles_probability_d2(const BeamSplitter& bs, Angle theta2, double eta);

/// Fraction of photon pairs leaving the splitter on the same side: 2R(1-R).
double same_side_fraction(double reflectivity);

// Efficiency-stripped p-forms on (rho, v).  These are what the inequality
// and optimizer layers consume; the eta scaling (coincidence ~ eta^2,
// singles ~ eta) is applied by the callers.
double pair_p(double rho, double v, double theta1_rad, double theta2_rad);
double singles_p1(double rho, double theta1_rad);
double singles_p2(double rho, double theta2_rad);

/// Joint distribution of the four Bell-pair analyzer outcomes
/// {theta1, theta1+90} x {theta2, theta2+90}; entries sum to 1.
struct BellPairOutcomes {
    double p[2][2];
    double sum() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
};
BellPairOutcomes bell_pair_outcome_distribution(double rho, double v,
                                                Angle theta1, Angle theta2);

}  // namespace eventready

#endif
