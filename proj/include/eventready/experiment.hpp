#ifndef EVENTREADY_EXPERIMENT_HPP
#define EVENTREADY_EXPERIMENT_HPP

#include <optional>
#include <stdexcept>

#include "eventready/angle.hpp"
#include "eventready/beam_splitter.hpp"
#include "eventready/geometry.hpp"

namespace eventready {

double visibility(const Geometry& geometry);

/// One input record for the analytic machinery: splitter, visibility/phase
/// (either from detector geometry or given directly), the four polarizer
/// angles and the detector efficiency.  Exactly one of {geometry, (v, phi)}
/// determines visibility and phase.
struct ExperimentConfig {
    BeamSplitter bs = BeamSplitter::from_reflectivity(0.5);
    std::optional<Geometry> geometry;
    double v_override = 1.0;
    double phi_override = 0.0;
    Angle theta1, theta2, theta1p, theta2p;
    double eta = 1.0;

    static ExperimentConfig with_visibility(BeamSplitter bs, double v, double phi,
                                            Angle theta1, Angle theta2,
                                            Angle theta1p, Angle theta2p, double eta) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("ExperimentConfig: visibility must lie in [0, 1]");
        if (!std::isfinite(phi))
            throw std::invalid_argument("ExperimentConfig: phase must be finite");
        check_eta(eta);
        ExperimentConfig c;
        c.bs = bs;
        c.v_override = v;
        c.phi_override = phi;
        c.theta1 = theta1; c.theta2 = theta2; c.theta1p = theta1p; c.theta2p = theta2p;
        c.eta = eta;
        return c;
    }

    static ExperimentConfig with_geometry(BeamSplitter bs, Geometry geometry,
                                          Angle theta1, Angle theta2,
                                          Angle theta1p, Angle theta2p, double eta) {
        check_eta(eta);
        ExperimentConfig c;
        c.bs = bs;
        c.geometry = geometry;
        c.theta1 = theta1; c.theta2 = theta2; c.theta1p = theta1p; c.theta2p = theta2p;
        c.eta = eta;
        return c;
    }

    double visibility_value() const {
        return geometry ? visibility(*geometry) : v_override;
    }

    double phase() const {
        return geometry ? geometry->phase() : phi_override;
    }

private:
    static void check_eta(double eta) {
        if (!(eta > 0.0 && eta <= 1.0))
            throw std::invalid_argument("ExperimentConfig: efficiency must lie in (0, 1]");
    }
};

}  // namespace eventready

#endif
