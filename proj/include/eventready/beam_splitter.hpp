#ifndef EVENTREADY_BEAM_SPLITTER_HPP
#define EVENTREADY_BEAM_SPLITTER_HPP

#include <cmath>
#include <stdexcept>

namespace eventready {

/// Lossless beam splitter described by transmission/reflection amplitudes
/// per polarization.  The polarization-isotropic case (t_x = t_y, r_x = r_y)
/// is the default; the anisotropic form is kept so the general four-fold
/// probability stays available.
class BeamSplitter {
public:
    /// Isotropic splitter from intensity reflectivity R in [0, 1], T = 1 - R.
    static BeamSplitter from_reflectivity(double reflectivity) {
        if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
            throw std::invalid_argument("BeamSplitter: reflectivity must lie in [0, 1]");
        const double r = std::sqrt(reflectivity);
        const double t = std::sqrt(1.0 - reflectivity);
        return BeamSplitter(t, t, r, r);
    }

    static BeamSplitter from_amplitudes(double t_x, double t_y, double r_x, double r_y) {
        auto check = [](double t, double r, const char* pol) {
            if (!(t >= 0.0 && t <= 1.0 && r >= 0.0 && r <= 1.0))
                throw std::invalid_argument(std::string("BeamSplitter: amplitudes out of [0, 1] for ") + pol);
            if (std::abs(t * t + r * r - 1.0) > 1e-9)
                throw std::invalid_argument(std::string("BeamSplitter: t^2 + r^2 != 1 for ") + pol);
        };
        check(t_x, r_x, "x");
        check(t_y, r_y, "y");
        return BeamSplitter(t_x, t_y, r_x, r_y);
    }

    double t_x() const { return t_x_; }
    double t_y() const { return t_y_; }
    double r_x() const { return r_x_; }
    double r_y() const { return r_y_; }

    bool isotropic() const { return t_x_ == t_y_ && r_x_ == r_y_; }

    /// Intensity coefficients; meaningful for the isotropic case.
    double reflectivity() const { require_isotropic(); return r_x_ * r_x_; }
    double transmittance() const { require_isotropic(); return t_x_ * t_x_; }

    /// rho = R/T.  Not clamped: any value in (0, inf) is legal downstream.
    double rho() const {
        require_isotropic();
        return reflectivity() / transmittance();
    }

    /// s = T^2/(R^2 + T^2), the same-side renormalization weight.
    double s_factor() const {
        require_isotropic();
        const double R = reflectivity(), T = transmittance();
        return T * T / (R * R + T * T);
    }

private:
    BeamSplitter(double t_x, double t_y, double r_x, double r_y)
        : t_x_(t_x), t_y_(t_y), r_x_(r_x), r_y_(r_y) {}

    void require_isotropic() const {
        if (!isotropic())
            throw std::logic_error("BeamSplitter: intensity coefficients need an isotropic splitter");
    }

    double t_x_, t_y_, r_x_, r_y_;
};

}  // namespace eventready

#endif
