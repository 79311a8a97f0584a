#ifndef EVENTREADY_ANGLE_HPP
#define EVENTREADY_ANGLE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eventready {

/// Plane-polarization orientation, kept canonical in [0, pi).
class Angle {
public:
    Angle() = default;

    explicit Angle(double radians) : rad_(normalized(radians)) {}

    static Angle from_degrees(double degrees) {
        return Angle(degrees * std::numbers::pi / 180.0);
    }

    double radians() const { return rad_; }
    double degrees() const { return rad_ * 180.0 / std::numbers::pi; }

    /// theta + pi/2 mod pi; applying it twice returns the original orientation.
    Angle perpendicular() const { return Angle(rad_ + std::numbers::pi / 2.0); }

    static double normalized(double radians) {
        if (!std::isfinite(radians))
            throw std::invalid_argument("Angle: value must be finite");
        double r = std::fmod(radians, std::numbers::pi);
        if (r < 0.0) r += std::numbers::pi;
        if (r >= std::numbers::pi) r -= std::numbers::pi;  // fmod(-tiny) rounds up to pi
        return r;
    }

    friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

private:
    double rad_ = 0.0;
};

inline double sin_of(Angle a) { return std::sin(a.radians()); }
inline double cos_of(Angle a) { return std::cos(a.radians()); }

}  // namespace eventready

#endif
