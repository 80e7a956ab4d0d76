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
 * @file core.hpp
 * Dense 3x3 complex algebra for a single qutrit: the Gell-Mann basis,
 * density matrices, deviation matrices and unitary exponentials.
 *
 * Every matrix is written in the fixed basis {|+1>, |0>, |-1>}, i.e. the
 * S_z eigenbasis of a spin-1 nucleus, mapped to indices 0, 1, 2.
 */

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qutrit_ks {

using Complex = std::complex<double>;
using ComplexMatrix3 = Eigen::Matrix3cd;
using ComplexVector3 = Eigen::Vector3cd;

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kSqrt3 = std::numbers::sqrt3;
inline constexpr double kPi = std::numbers::pi;

/// Input violates a physical or structural precondition.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an enumerated or indexed domain.
class DomainError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A result that should be exact came out inconsistent (e.g. an
/// expectation with a non-negligible imaginary part).
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Matrix predicates
// ---------------------------------------------------------------------------

inline bool is_finite(const ComplexMatrix3 &m) {
    for (Eigen::Index i = 0; i < 9; ++i) {
        if (!std::isfinite(m(i).real()) || !std::isfinite(m(i).imag())) {
            return false;
        }
    }
    return true;
}

inline bool approx_equal(const ComplexMatrix3 &a, const ComplexMatrix3 &b,
                         double tol = kDefaultTol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_hermitian(const ComplexMatrix3 &m, double tol = kDefaultTol) {
    return approx_equal(m, m.adjoint(), tol);
}

inline bool is_unitary(const ComplexMatrix3 &u, double tol = kUnitaryTol) {
    return approx_equal(u * u.adjoint(), ComplexMatrix3::Identity(), tol);
}

inline bool is_diagonal(const ComplexMatrix3 &m, double tol = kPsdTol) {
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (r != c && std::abs(m(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Real eigenvalues of a Hermitian matrix in ascending order.
inline Eigen::Vector3d hermitian_eigenvalues(const ComplexMatrix3 &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix3> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline ComplexMatrix3 commutator(const ComplexMatrix3 &a, const ComplexMatrix3 &b) {
    return a * b - b * a;
}

// ---------------------------------------------------------------------------
// Gell-Mann basis
// ---------------------------------------------------------------------------

/// The Gell-Mann matrix Lambda_index, index in 1..8.
inline ComplexMatrix3 gell_mann(int index) {
    const Complex i{0.0, 1.0};
    ComplexMatrix3 m = ComplexMatrix3::Zero();
    switch (index) {
    case 1:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 2:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    case 3:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    case 4:
        m(0, 2) = 1.0;
        m(2, 0) = 1.0;
        break;
    case 5:
        m(0, 2) = -i;
        m(2, 0) = i;
        break;
    case 6:
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        break;
    case 7:
        m(1, 2) = -i;
        m(2, 1) = i;
        break;
    case 8:
        m(0, 0) = 1.0 / kSqrt3;
        m(1, 1) = 1.0 / kSqrt3;
        m(2, 2) = -2.0 / kSqrt3;
        break;
    default:
        throw DomainError("gell_mann: index " + std::to_string(index) +
                          " outside 1..8");
    }
    return m;
}

/// Coefficients c_1..c_8 of a traceless Hermitian operator sum c_i Lambda_i.
/// Stored zero-based; use operator() for the one-based Gell-Mann label.
struct GellMannVector {
    std::array<double, 8> c{};

    double &operator()(int index) { return c.at(static_cast<std::size_t>(index - 1)); }
    double operator()(int index) const { return c.at(static_cast<std::size_t>(index - 1)); }

    friend bool operator==(const GellMannVector &, const GellMannVector &) = default;
};

inline ComplexMatrix3 reconstruct(const GellMannVector &v) {
    ComplexMatrix3 m = ComplexMatrix3::Zero();
    for (int k = 1; k <= 8; ++k) {
        m += v(k) * gell_mann(k);
    }
    return m;
}

/// m = identity_coeff * I + sum_i lambda(i) * Lambda_i
struct Decomposition {
    double identity_coeff = 0.0;
    GellMannVector lambda;
};

inline Decomposition decompose(const ComplexMatrix3 &m, double tol = kDefaultTol) {
    if (!is_hermitian(m, tol)) {
        throw ValidationError("decompose: matrix is not Hermitian");
    }
    Decomposition d;
    d.identity_coeff = m.trace().real() / 3.0;
    for (int k = 1; k <= 8; ++k) {
        // trace(Lambda_k^2) = 2
        d.lambda(k) = (m * gell_mann(k)).trace().real() / 2.0;
    }
    return d;
}

inline ComplexMatrix3 reconstruct(const Decomposition &d) {
    return d.identity_coeff * ComplexMatrix3::Identity() + reconstruct(d.lambda);
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Unit-norm ket in the {|+1>, |0>, |-1>} basis.
class Ket3 {
  public:
    explicit Ket3(const ComplexVector3 &amplitudes, double tol = kDefaultTol)
        : amplitudes_(amplitudes) {
        if (std::abs(amplitudes_.norm() - 1.0) > tol) {
            throw ValidationError("Ket3: amplitudes are not unit norm");
        }
    }

    const ComplexVector3 &amplitudes() const { return amplitudes_; }
    Complex operator[](int i) const { return amplitudes_(i); }

    /// <this|other>
    Complex inner(const Ket3 &other) const { return amplitudes_.dot(other.amplitudes_); }

    ComplexMatrix3 projector() const { return amplitudes_ * amplitudes_.adjoint(); }

  private:
    ComplexVector3 amplitudes_;
};

/// Traceless Hermitian part of a density matrix, rho - I/3, up to an
/// arbitrary positive scale. Need not be positive semidefinite.
class DeviationMatrix {
  public:
    explicit DeviationMatrix(const ComplexMatrix3 &m, double tol = kDefaultTol) : m_(m) {
        if (!is_finite(m_)) {
            throw ValidationError("DeviationMatrix: non-finite entry");
        }
        if (!is_hermitian(m_, tol)) {
            throw ValidationError("DeviationMatrix: not Hermitian");
        }
        if (std::abs(m_.trace()) > tol) {
            throw ValidationError("DeviationMatrix: not traceless");
        }
    }

    /// Drops the identity component of a Hermitian matrix. Leaves every
    /// Gell-Mann coefficient unchanged.
    static DeviationMatrix traceless_part(const ComplexMatrix3 &m) {
        return DeviationMatrix(m - (m.trace() / 3.0) * ComplexMatrix3::Identity());
    }

    static DeviationMatrix diagonal(double p, double q, double r) {
        ComplexMatrix3 m = ComplexMatrix3::Zero();
        m(0, 0) = p;
        m(1, 1) = q;
        m(2, 2) = r;
        return DeviationMatrix(m);
    }

    const ComplexMatrix3 &matrix() const { return m_; }
    GellMannVector gell_mann_coefficients() const { return decompose(m_).lambda; }

    DeviationMatrix scaled(double factor) const { return DeviationMatrix(factor * m_); }

  private:
    ComplexMatrix3 m_;
};

/// Qutrit density matrix. Hermitian, unit trace and positive semidefinite
/// (eigenvalues >= -1e-10) on construction.
class QutritState {
  public:
    explicit QutritState(const ComplexMatrix3 &rho, double tol = kDefaultTol) : rho_(rho) {
        if (!is_finite(rho_)) {
            throw ValidationError("QutritState: non-finite entry");
        }
        if (!is_hermitian(rho_, tol)) {
            throw ValidationError("QutritState: density matrix is not Hermitian");
        }
        if (std::abs(rho_.trace() - Complex{1.0, 0.0}) > tol) {
            throw ValidationError("QutritState: trace is not 1");
        }
        if (hermitian_eigenvalues(rho_)(0) < -kPsdTol) {
            throw ValidationError("QutritState: density matrix is not positive semidefinite");
        }
    }

    static QutritState maximally_mixed() {
        return QutritState(ComplexMatrix3::Identity() / 3.0);
    }

    /// I/3 + deviation. Fails if the sum is not a valid state.
    static QutritState from_deviation(const DeviationMatrix &d) {
        return QutritState(ComplexMatrix3::Identity() / 3.0 + d.matrix());
    }

    const ComplexMatrix3 &rho() const { return rho_; }
    Complex operator()(int r, int c) const { return rho_(r, c); }

    DeviationMatrix deviation() const {
        return DeviationMatrix(rho_ - ComplexMatrix3::Identity() / 3.0);
    }

    bool is_diagonal(double tol = kPsdTol) const { return qutrit_ks::is_diagonal(rho_, tol); }

    /// u rho u^dagger
    QutritState conjugated(const ComplexMatrix3 &u) const {
        ComplexMatrix3 out = u * rho_ * u.adjoint();
        // Restore exact Hermiticity lost to round-off.
        out = 0.5 * (out + out.adjoint()).eval();
        return QutritState(out);
    }

  private:
    ComplexMatrix3 rho_;
};

// ---------------------------------------------------------------------------
// Expectations and exponentials
// ---------------------------------------------------------------------------

namespace detail {

inline double real_trace_product(const ComplexMatrix3 &a, const ComplexMatrix3 &obs) {
    if (!is_hermitian(obs)) {
        throw ValidationError("expectation: observable is not Hermitian");
    }
    const Complex t = (a * obs).trace();
    if (std::abs(t.imag()) >= 1e-10) {
        throw ConsistencyError("expectation: trace has imaginary part " +
                               std::to_string(t.imag()));
    }
    return t.real();
}

} // namespace detail

/// trace(rho * obs)
inline double expectation(const QutritState &state, const ComplexMatrix3 &obs) {
    return detail::real_trace_product(state.rho(), obs);
}

/// trace(d * obs). For traceless obs this equals the expectation in I/3 + d.
inline double expectation(const DeviationMatrix &d, const ComplexMatrix3 &obs) {
    return detail::real_trace_product(d.matrix(), obs);
}

/// exp(i * angle * generator) for Hermitian generator, via eigendecomposition.
inline ComplexMatrix3 unitary_exp(const ComplexMatrix3 &generator, double angle) {
    if (!is_hermitian(generator)) {
        throw ValidationError("unitary_exp: generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix3> solver(generator);
    const ComplexMatrix3 &v = solver.eigenvectors();
    ComplexVector3 phases;
    for (int k = 0; k < 3; ++k) {
        phases(k) = std::polar(1.0, angle * solver.eigenvalues()(k));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

/// Seeded random density matrix G G^dagger / trace, G with standard normal
/// complex entries.
inline QutritState random_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix3 g;
    for (Eigen::Index i = 0; i < 9; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        g(i) = Complex{re, im};
    }
    ComplexMatrix3 rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return QutritState(rho);
}

/// Seeded random Hermitian matrix with standard normal entries.
inline ComplexMatrix3 random_hermitian(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix3 g;
    for (Eigen::Index i = 0; i < 9; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        g(i) = Complex{re, im};
    }
    return 0.5 * (g + g.adjoint());
}

} // namespace qutrit_ks
