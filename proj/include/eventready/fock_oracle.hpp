#ifndef EVENTREADY_FOCK_ORACLE_HPP
#define EVENTREADY_FOCK_ORACLE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "eventready/experiment.hpp"

// Brute-force verification engine.  The four-photon state lives in eight
// occupation modes (four spatial paths times two polarizations); detection
// operators are linear combinations of single-mode annihilators and are
// applied term by term, with no closed-form shortcuts.  Occupations above
// one photon per mode are rejected: the source state never produces them
// and the engine deliberately omits the bosonic sqrt(n) ladder factors.

namespace eventready::fock {

enum class Spatial : int { path1 = 0, path1p = 1, path2 = 2, path2p = 3 };
enum class Pol : int { x = 0, y = 1 };

inline constexpr int kModeCount = 8;

constexpr int mode_index(Spatial s, Pol p) {
    return static_cast<int>(s) * 2 + static_cast<int>(p);
}

using Occupation = std::array<std::uint8_t, kModeCount>;
using Complex = std::complex<double>;

/// Complex-amplitude superposition over occupation vectors.
class Ket {
public:
    using Terms = std::map<Occupation, Complex>;

    void add_term(const Occupation& occ, Complex amplitude);
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    double norm_squared() const;
    double norm() const;

    Ket& operator+=(const Ket& other);
    Ket scaled(Complex factor) const;

private:
    Terms terms_;
};

/// Linear combination of single-mode annihilators.
struct DetectionOperator {
    struct Term {
        int mode;
        Complex coefficient;
    };
    std::vector<Term> terms;

    /// Applies each annihilator to each ket term; a_m on an unoccupied
    /// mode contributes the zero ket.
    Ket apply(const Ket& state) const;
};

/// The two-crystal source state
/// (1/2)(|x>_1 |y>_1' - |y>_1 |x>_1')(|x>_2 |y>_2' - |y>_2 |x>_2').
Ket build_state();

/// Field operator behind polarizer P1 or P2 (no splitter in the path):
/// cos(theta) a_x + sin(theta) a_y, global phase dropped.
DetectionOperator detection_operator_plain(Spatial which, Angle theta);

/// Field operator behind the beam splitter and polarizer P1' or P2'.
/// The transmitted branch annihilates the operator's own input path, the
/// reflected branch the opposite one with factor i; the relative phase phi
/// is carried entirely by the reflected branch of the 2' operator.
DetectionOperator detection_operator_primed(Spatial which, Angle theta,
                                            const BeamSplitter& bs, double phi);

/// eta^2 ||E1 E2 E1' E2' |state>||^2, by sequential operator application.
double fourfold_expectation(const Ket& state,
                            const DetectionOperator& e1, const DetectionOperator& e2,
                            const DetectionOperator& e1p, const DetectionOperator& e2p,
                            double eta);

/// Convenience wrapper: builds the source state and the four operators from
/// a config.  Point detectors: the config's phase is used directly and the
/// visibility field is ignored (finite openings are modelled by averaging
/// this expectation over the detector windows).
double fourfold_expectation(const ExperimentConfig& config);

}  // namespace eventready::fock

#endif
