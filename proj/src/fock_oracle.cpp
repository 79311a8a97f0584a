#include "eventready/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace eventready::fock {

void Ket::add_term(const Occupation& occ, Complex amplitude) {
    for (auto n : occ)
        if (n > 1)
            throw std::invalid_argument("Ket: occupations above one photon per mode are not supported");
    auto it = terms_.find(occ);
    if (it == terms_.end()) {
        if (amplitude != Complex(0.0, 0.0)) terms_.emplace(occ, amplitude);
        return;
    }
    it->second += amplitude;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

double Ket::norm_squared() const {
    double total = 0.0;
    for (const auto& [occ, amp] : terms_) total += std::norm(amp);
    return total;
}

double Ket::norm() const { return std::sqrt(norm_squared()); }

Ket& Ket::operator+=(const Ket& other) {
    for (const auto& [occ, amp] : other.terms_) add_term(occ, amp);
    return *this;
}

Ket Ket::scaled(Complex factor) const {
    Ket out;
    if (factor == Complex(0.0, 0.0)) return out;
    for (const auto& [occ, amp] : terms_) out.add_term(occ, factor * amp);
    return out;
}

Ket DetectionOperator::apply(const Ket& state) const {
    Ket out;
    for (const auto& [occ, amp] : state.terms()) {
        for (const auto& term : terms) {
            if (occ[term.mode] == 0) continue;  // annihilator on vacuum mode
            Occupation lowered = occ;
            lowered[term.mode] -= 1;
            out.add_term(lowered, amp * term.coefficient);
        }
    }
    return out;
}

Ket build_state() {
    // (1/sqrt2)(|x>_1|y>_1' - |y>_1|x>_1') tensor (1/sqrt2)(|x>_2|y>_2' - |y>_2|x>_2')
    struct Pair { Pol first, second; double sign; };
    const Pair pairs[2] = {{Pol::x, Pol::y, +1.0}, {Pol::y, Pol::x, -1.0}};
    Ket state;
    for (const auto& left : pairs) {
        for (const auto& right : pairs) {
            Occupation occ{};
            occ[mode_index(Spatial::path1, left.first)] = 1;
            occ[mode_index(Spatial::path1p, left.second)] = 1;
            occ[mode_index(Spatial::path2, right.first)] = 1;
            occ[mode_index(Spatial::path2p, right.second)] = 1;
            state.add_term(occ, Complex(0.5 * left.sign * right.sign, 0.0));
        }
    }
    return state;
}

DetectionOperator detection_operator_plain(Spatial which, Angle theta) {
    if (which != Spatial::path1 && which != Spatial::path2)
        throw std::invalid_argument("detection_operator_plain: expects path 1 or 2");
    DetectionOperator op;
    op.terms.push_back({mode_index(which, Pol::x), Complex(cos_of(theta), 0.0)});
    op.terms.push_back({mode_index(which, Pol::y), Complex(sin_of(theta), 0.0)});
    return op;
}

DetectionOperator detection_operator_primed(Spatial which, Angle theta,
                                            const BeamSplitter& bs, double phi) {
    if (which != Spatial::path1p && which != Spatial::path2p)
        throw std::invalid_argument("detection_operator_primed: expects path 1' or 2'");
    const Spatial other = which == Spatial::path1p ? Spatial::path2p : Spatial::path1p;
    const Complex i(0.0, 1.0);
    // Only the relative phase between the two reflected branches is
    // observable; it is assigned to the 2' operator.
    const Complex reflected_phase =
        which == Spatial::path2p ? i * std::exp(Complex(0.0, phi)) : i;
    DetectionOperator op;
    op.terms.push_back({mode_index(which, Pol::x), Complex(bs.t_x() * cos_of(theta), 0.0)});
    op.terms.push_back({mode_index(which, Pol::y), Complex(bs.t_y() * sin_of(theta), 0.0)});
    op.terms.push_back({mode_index(other, Pol::x), reflected_phase * bs.r_x() * cos_of(theta)});
    op.terms.push_back({mode_index(other, Pol::y), reflected_phase * bs.r_y() * sin_of(theta)});
    return op;
}

double fourfold_expectation(const Ket& state,
                            const DetectionOperator& e1, const DetectionOperator& e2,
                            const DetectionOperator& e1p, const DetectionOperator& e2p,
                            double eta) {
    Ket reduced = e2p.apply(state);
    reduced = e1p.apply(reduced);
    reduced = e2.apply(reduced);
    reduced = e1.apply(reduced);
    return eta * eta * reduced.norm_squared();
}

double fourfold_expectation(const ExperimentConfig& config) {
    const Ket state = build_state();
    const auto e1 = detection_operator_plain(Spatial::path1, config.theta1);
    const auto e2 = detection_operator_plain(Spatial::path2, config.theta2);
    const auto e1p = detection_operator_primed(Spatial::path1p, config.theta1p, config.bs, config.phase());
    const auto e2p = detection_operator_primed(Spatial::path2p, config.theta2p, config.bs, config.phase());
    return fourfold_expectation(state, e1, e2, e1p, e2p, config.eta);
}

}  // namespace eventready::fock
