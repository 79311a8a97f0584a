#include "eventready/core_model.hpp"

#include <cmath>
#include <numbers>

namespace eventready {

double q_factor(double q_x, double q_y, Angle theta_i, Angle theta_j) {
    return q_x * sin_of(theta_i) * cos_of(theta_j) - q_y * cos_of(theta_i) * sin_of(theta_j);
}

double visibility(const Geometry& geometry) {
    const double x = std::numbers::pi * geometry.opening_width / geometry.fringe_spacing;
    if (x == 0.0) return 1.0;
    const double sinc = std::sin(x) / x;
    return sinc * sinc;
}

double fourfold_probability(const ExperimentConfig& config) {
    const auto& bs = config.bs;
    const double A = q_factor(bs.t_x(), bs.t_y(), config.theta1, config.theta1p) *
                     q_factor(bs.t_x(), bs.t_y(), config.theta2, config.theta2p);
    const double B = q_factor(bs.r_x(), bs.r_y(), config.theta1, config.theta2p) *
                     q_factor(bs.r_x(), bs.r_y(), config.theta2, config.theta1p);
    const double v = config.visibility_value();
    const double phi = config.phase();
    const double eta = config.eta;
    return eta * eta / 4.0 * (A * A + B * B - 2.0 * v * A * B * std::cos(phi));
}

double symmetric_probability(Angle theta1p, Angle theta2p, Angle theta1, Angle theta2) {
    const double sp = std::sin(theta1p.radians() - theta2p.radians());
    const double s = std::sin(theta1.radians() - theta2.radians());
    return sp * sp * s * s / 16.0;
}

double partial_entanglement_probability(const BeamSplitter& bs, Angle theta1, Angle theta2) {
    const double R = bs.reflectivity();
    const double T = bs.transmittance();
    const double sd = std::sin(theta1.radians() - theta2.radians());
    return 0.25 * ((T - R) * (T - R) + 2.0 * T * R * sd * sd);
}

double pair_p(double rho, double v, double theta1_rad, double theta2_rad) {
    const double c1 = std::cos(theta1_rad), s1 = std::sin(theta1_rad);
    const double c2 = std::cos(theta2_rad), s2 = std::sin(theta2_rad);
    const double s_norm = 1.0 / (1.0 + rho * rho);  // T^2/(R^2+T^2)
    return s_norm * (c1 * c1 * s2 * s2 - 2.0 * v * rho * c1 * s1 * c2 * s2 +
                     rho * rho * s1 * s1 * c2 * c2);
}

double singles_p1(double rho, double theta1_rad) {
    const double c = std::cos(theta1_rad), s = std::sin(theta1_rad);
    return (c * c + rho * rho * s * s) / (1.0 + rho * rho);
}

double singles_p2(double rho, double theta2_rad) {
    const double c = std::cos(theta2_rad), s = std::sin(theta2_rad);
    return (s * s + rho * rho * c * c) / (1.0 + rho * rho);
}

double bell_pair_probability(const BeamSplitter& bs, double v, Angle theta1, Angle theta2,
                             double eta) {
    return eta * eta * pair_p(bs.rho(), v, theta1.radians(), theta2.radians());
}

double singles_probability_d1(const BeamSplitter& bs, Angle theta1, double eta) {
    return eta * singles_p1(bs.rho(), theta1.radians());
}

double singles_probability_d2(const BeamSplitter& bs, Angle theta2, double eta) {
    return eta * singles_p2(bs.rho(), theta2.radians());
}

double same_side_fraction(double reflectivity) {
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
        throw std::invalid_argument("same_side_fraction: reflectivity must lie in [0, 1]");
    return 2.0 * reflectivity * (1.0 - reflectivity);
}

BellPairOutcomes bell_pair_outcome_distribution(double rho, double v,
                                                Angle theta1, Angle theta2) {
    BellPairOutcomes out;
    const Angle t1[2] = {theta1, theta1.perpendicular()};
    const Angle t2[2] = {theta2, theta2.perpendicular()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.p[i][j] = pair_p(rho, v, t1[i].radians(), t2[j].radians());
    return out;
}

}  // namespace eventready
