// Copyright 2026 The qutrit-ks Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file nmr.hpp
 * Idealized spin-1 NMR: quadrupolar Hamiltonian, transition-selective
 * pulses, gradient crushers, T1/T2 relaxation and the standard
 * pseudopure-state preparation sequences.
 *
 * Levels 1, 2, 3 are |+1>, |0>, |-1>. Transition 1-2 is line 1 and
 * transition 2-3 is line 2. Pulses are instantaneous ideal rotations.
 */

#include "qutrit_ks/core.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace qutrit_ks::nmr {

struct SpinSystem {
    double omega0 = 0.0;       ///< Zeeman angular frequency, rad/s
    double lambda_q = 1.0;     ///< quadrupolar coupling, rad/s
    double polarization = 1.0; ///< thermal deviation scale in (0, 1]

    void validate() const {
        if (lambda_q == 0.0) {
            throw ValidationError("SpinSystem: quadrupolar coupling must be nonzero");
        }
        if (!(polarization > 0.0 && polarization <= 1.0)) {
            throw ValidationError("SpinSystem: polarization must lie in (0, 1]");
        }
    }
};

// Spin-1 angular momentum operators.
inline ComplexMatrix3 spin_z() {
    return Eigen::Vector3cd(1.0, 0.0, -1.0).asDiagonal();
}

inline ComplexMatrix3 spin_x() {
    ComplexMatrix3 m = ComplexMatrix3::Zero();
    m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = 1.0 / kSqrt2;
    return m;
}

inline ComplexMatrix3 spin_y() {
    const Complex i{0.0, 1.0};
    ComplexMatrix3 m = ComplexMatrix3::Zero();
    m(0, 1) = m(1, 2) = -i / kSqrt2;
    m(1, 0) = m(2, 1) = i / kSqrt2;
    return m;
}

/// H = -omega0 I_z + lambda (3 I_z^2 - I^2), with I^2 = 2 I for spin 1.
inline ComplexMatrix3 hamiltonian(const SpinSystem &sys) {
    sys.validate();
    const ComplexMatrix3 iz = spin_z();
    return -sys.omega0 * iz +
           sys.lambda_q * (3.0 * iz * iz - 2.0 * ComplexMatrix3::Identity());
}

/// High-temperature equilibrium: I/3 + polarization * diag(1, 0, -1) / 3.
inline QutritState thermal_state(const SpinSystem &sys) {
    sys.validate();
    return QutritState(ComplexMatrix3::Identity() / 3.0 + sys.polarization * spin_z() / 3.0);
}

// ---------------------------------------------------------------------------
// Events
// ---------------------------------------------------------------------------

enum class Transition {
    k12,          ///< line 1, levels |+1>,|0>
    k23,          ///< line 2, levels |0>,|-1>
    kNonSelective ///< hard pulse on the whole spin-1 manifold
};

enum class Axis { kX, kY };

struct PulseEvent {
    Transition transition = Transition::k12;
    Axis axis = Axis::kY;
    double flip_angle = 0.0; ///< radians, |flip_angle| < 2 pi

    void validate() const {
        if (!(std::abs(flip_angle) < 2.0 * kPi)) {
            throw ValidationError("PulseEvent: flip angle must satisfy |angle| < 2 pi");
        }
    }
};

/// Ideal z-gradient crusher: removes every coherence.
struct GradientEvent {};

struct RelaxationEvent {
    double duration = 0.0; ///< s
    double t1 = 1.0;       ///< s
    double t2 = 1.0;       ///< s

    void validate() const {
        if (!(duration >= 0.0)) {
            throw ValidationError("RelaxationEvent: duration must be non-negative");
        }
        if (!(t1 > 0.0) || !(t2 > 0.0)) {
            throw ValidationError("RelaxationEvent: T1 and T2 must be positive");
        }
    }
};

using SequenceEvent = std::variant<PulseEvent, GradientEvent, RelaxationEvent>;

struct PulseSequence {
    std::vector<SequenceEvent> events;
};

// ---------------------------------------------------------------------------
// Propagators
// ---------------------------------------------------------------------------

/**
 * Rotation for a pulse event. Selective pulses embed exp(-i theta/2 sigma)
 * in the two levels of the transition and act as identity on the third;
 * the non-selective pulse is exp(-i theta I_axis).
 */
inline ComplexMatrix3 pulse_unitary(const PulseEvent &p) {
    p.validate();
    if (p.transition == Transition::kNonSelective) {
        return unitary_exp(p.axis == Axis::kX ? spin_x() : spin_y(), -p.flip_angle);
    }
    const int a = p.transition == Transition::k12 ? 0 : 1;
    const int b = a + 1;
    const double c = std::cos(p.flip_angle / 2.0);
    const double s = std::sin(p.flip_angle / 2.0);
    ComplexMatrix3 u = ComplexMatrix3::Identity();
    u(a, a) = c;
    u(b, b) = c;
    if (p.axis == Axis::kY) {
        u(a, b) = -s;
        u(b, a) = s;
    } else {
        u(a, b) = Complex{0.0, -s};
        u(b, a) = Complex{0.0, -s};
    }
    return u;
}

inline QutritState apply_pulse(const QutritState &state, const PulseEvent &p) {
    return state.conjugated(pulse_unitary(p));
}

inline QutritState apply_gradient(const QutritState &state) {
    ComplexMatrix3 d = ComplexMatrix3::Zero();
    d.diagonal() = state.rho().diagonal();
    return QutritState(d);
}

/**
 * Populations relax toward the thermal populations of `sys` with
 * exp(-t/T1) and coherences decay with exp(-t/T2). Positivity is
 * guaranteed for T2 <= T1; otherwise the result is validated as usual.
 */
inline QutritState apply_relaxation(const QutritState &state, const RelaxationEvent &r,
                                    const SpinSystem &sys) {
    r.validate();
    const double e1 = std::exp(-r.duration / r.t1);
    const double e2 = std::exp(-r.duration / r.t2);
    const ComplexMatrix3 eq = thermal_state(sys).rho();
    ComplexMatrix3 out = e2 * state.rho();
    for (int k = 0; k < 3; ++k) {
        out(k, k) = eq(k, k) + e1 * (state.rho()(k, k) - eq(k, k));
    }
    return QutritState(out);
}

/// Free evolution exp(-i H t) rho exp(i H t).
inline QutritState apply_free_precession(const QutritState &state, const SpinSystem &sys,
                                         double duration) {
    return state.conjugated(unitary_exp(hamiltonian(sys), -duration));
}

inline QutritState apply(const QutritState &state, const SequenceEvent &event,
                         const SpinSystem &sys) {
    return std::visit(
        [&](const auto &e) -> QutritState {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, PulseEvent>) {
                return apply_pulse(state, e);
            } else if constexpr (std::is_same_v<T, GradientEvent>) {
                return apply_gradient(state);
            } else {
                return apply_relaxation(state, e, sys);
            }
        },
        event);
}

inline QutritState apply(QutritState state, const PulseSequence &seq, const SpinSystem &sys) {
    for (const auto &e : seq.events) {
        state = apply(state, e, sys);
    }
    return state;
}

// ---------------------------------------------------------------------------
// State preparation
// ---------------------------------------------------------------------------

enum class PreparedState { kPPS1, kPPS2, kPPS3, kSigmaX };

inline std::string_view to_string(PreparedState s) {
    switch (s) {
    case PreparedState::kPPS1:
        return "PPS1";
    case PreparedState::kPPS2:
        return "PPS2";
    case PreparedState::kPPS3:
        return "PPS3";
    case PreparedState::kSigmaX:
        return "SIGMA_X";
    }
    throw DomainError("unknown prepared state");
}

inline PreparedState prepared_state_from_string(std::string_view name) {
    for (auto s : {PreparedState::kPPS1, PreparedState::kPPS2, PreparedState::kPPS3,
                   PreparedState::kSigmaX}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw DomainError("unknown prepared state '" + std::string(name) + "'");
}

inline PulseEvent selective_y(Transition t, double angle) { return {t, Axis::kY, angle}; }

/**
 * Preparation sequence applied to the thermal state.
 *
 *   PPS1    (pi/2)_y^{2-3}, Grad
 *   PPS2    (pi/2)_y^{1-2}, Grad, (pi)_y^{2-3}
 *   PPS3    (pi/2)_y^{1-2}, Grad
 *   SIGMA_X non-selective (pi/2)_y
 *
 * The commonly quoted PPS2 order, (pi/2)_y^{2-3}, Grad, (pi)_y^{1-2}, lands
 * on diag(-1, 2, -1)/6; see literal_pps2_sequence().
 */
inline PulseSequence preparation_sequence(PreparedState s) {
    switch (s) {
    case PreparedState::kPPS1:
        return {{selective_y(Transition::k23, kPi / 2), GradientEvent{}}};
    case PreparedState::kPPS2:
        return {{selective_y(Transition::k12, kPi / 2), GradientEvent{},
                 selective_y(Transition::k23, kPi)}};
    case PreparedState::kPPS3:
        return {{selective_y(Transition::k12, kPi / 2), GradientEvent{}}};
    case PreparedState::kSigmaX:
        return {{selective_y(Transition::kNonSelective, kPi / 2)}};
    }
    throw DomainError("unknown prepared state");
}

/// (pi/2)_y^{2-3}, Grad, (pi)_y^{1-2}. Produces the negation of the PPS2 target.
inline PulseSequence literal_pps2_sequence() {
    return {{selective_y(Transition::k23, kPi / 2), GradientEvent{},
             selective_y(Transition::k12, kPi)}};
}

/// Target deviation matrices at unit polarization.
inline DeviationMatrix printed_deviation(PreparedState s) {
    switch (s) {
    case PreparedState::kPPS1:
        return DeviationMatrix::diagonal(2.0 / 6, -1.0 / 6, -1.0 / 6);
    case PreparedState::kPPS2:
        return DeviationMatrix::diagonal(1.0 / 6, -2.0 / 6, 1.0 / 6);
    case PreparedState::kPPS3:
        return DeviationMatrix::diagonal(1.0 / 6, 1.0 / 6, -2.0 / 6);
    case PreparedState::kSigmaX: {
        ComplexMatrix3 m = ComplexMatrix3::Zero();
        m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = 1.0 / (3.0 * kSqrt2);
        return DeviationMatrix(m);
    }
    }
    throw DomainError("unknown prepared state");
}

inline QutritState prepare(PreparedState s, const SpinSystem &sys) {
    return apply(thermal_state(sys), preparation_sequence(s), sys);
}

// ---------------------------------------------------------------------------
// Diagonal states
// ---------------------------------------------------------------------------

/// Scaled: deviation of the prepared state (includes the thermal 1/3).
/// Unscaled: the bare trigonometric expressions, three times larger.
enum class DiagonalConvention { kScaled, kUnscaled };

struct DiagonalPopulations {
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
};

inline DiagonalPopulations diagonal_populations(double theta_p, double theta_q,
                                                DiagonalConvention convention) {
    const double cp = std::cos(theta_p / 2.0);
    const double sp = std::sin(theta_p / 2.0);
    const double cq = std::cos(theta_q / 2.0);
    const double sq = std::sin(theta_q / 2.0);
    const double scale = convention == DiagonalConvention::kScaled ? 1.0 / 3.0 : 1.0;
    DiagonalPopulations d;
    d.p = scale * cp * cp;
    d.q = scale * (cq * cq * sp * sp - sq * sq);
    d.r = -(d.p + d.q);
    return d;
}

inline PulseSequence diagonal_sequence(double theta_p, double theta_q) {
    return {{selective_y(Transition::k12, theta_p), GradientEvent{},
             selective_y(Transition::k23, theta_q), GradientEvent{}}};
}

/// theta_p on 1-2, Grad, theta_q on 2-3, Grad, applied to the thermal state.
inline QutritState prepare_diagonal(double theta_p, double theta_q, const SpinSystem &sys) {
    auto in_range = [](double a) { return a >= 0.0 && a <= kPi; };
    if (!in_range(theta_p) || !in_range(theta_q)) {
        throw ValidationError("prepare_diagonal: angles must lie in [0, pi]");
    }
    return apply(thermal_state(sys), diagonal_sequence(theta_p, theta_q), sys);
}

} // namespace qutrit_ks::nmr
