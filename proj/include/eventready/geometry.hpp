#ifndef EVENTREADY_GEOMETRY_HPP
#define EVENTREADY_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eventready {

/// Transverse detector placement behind the beam splitter.  z1, z2 are the
/// detector positions, L the fringe spacing, delta_z the opening width of
/// the detectors (all in the same length unit).
struct Geometry {
    double z1 = 0.0;
    double z2 = 0.0;
    double fringe_spacing = 1.0;  // L > 0
    double opening_width = 0.0;   // delta_z >= 0

    Geometry() = default;
    Geometry(double z1_, double z2_, double L, double delta_z)
        : z1(z1_), z2(z2_), fringe_spacing(L), opening_width(delta_z) {
        if (!(std::isfinite(z1) && std::isfinite(z2) && std::isfinite(L) && std::isfinite(delta_z)))
            throw std::invalid_argument("Geometry: all lengths must be finite");
        if (!(L > 0.0))
            throw std::invalid_argument("Geometry: fringe spacing L must be positive");
        if (delta_z < 0.0)
            throw std::invalid_argument("Geometry: opening width must be non-negative");
    }

    /// phi = 2 pi (z2 - z1) / L
    double phase() const {
        return 2.0 * std::numbers::pi * (z2 - z1) / fringe_spacing;
    }
};

}  // namespace eventready

#endif
