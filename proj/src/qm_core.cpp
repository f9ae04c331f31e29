#include "macroreal/qm_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace macroreal {
namespace {

// Slack on closed parameter intervals so that values like 2*pi computed in
// floating point are not rejected.
constexpr double kRangeSlack = 1e-12;

void require_in_range(const char* name, double value, double lo, double hi) {
    if (!std::isfinite(value) || value < lo - kRangeSlack || value > hi + kRangeSlack) {
        throw DomainError(std::string(name) + " = " + std::to_string(value) + " is outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

ComplexMat2 hermitian_part(const ComplexMat2& m) {
    return 0.5 * (m + m.adjoint());
}

}  // namespace

void validate_sharpness(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0 || lambda > 1.0 + kRangeSlack) {
        throw DomainError("lambda = " + std::to_string(lambda) + " is outside (0, 1]");
    }
}

void ModelParams::validate() const {
    require_in_range("theta", theta, 0.0, kPi / 2);
    require_in_range("phi", phi, 0.0, 2 * kPi);
    if (!std::isfinite(tau) || tau < 0.0) {
        throw DomainError("tau = " + std::to_string(tau) + " must be finite and >= 0");
    }
    validate_sharpness(lambda);
}

bool QubitState::satisfies_invariants(const ComplexMat2& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > tol) return false;
    return hermitian_eigenvalues(m)[0] >= -tol;
}

QubitState QubitState::from_matrix(const ComplexMat2& m, double tol) {
    if (!satisfies_invariants(m, tol)) {
        throw DomainError("matrix is not a density matrix (Hermitian, unit trace, PSD)");
    }
    return QubitState(m);
}

double QubitState::purity() const {
    return (matrix_ * matrix_).trace().real();
}

QubitState initial_state(double theta, double phi) {
    require_in_range("theta", theta, 0.0, kPi / 2);
    require_in_range("phi", phi, 0.0, 2 * kPi);
    const Complex a = std::cos(theta);
    const Complex b = std::polar(std::sin(theta), phi);
    return QubitState({a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)});
}

ComplexMat2 evolution_unitary(double tau) {
    if (!std::isfinite(tau)) throw DomainError("tau must be finite");
    const Complex c = std::cos(tau);
    const Complex off{0.0, -std::sin(tau)};
    return {c, off, off, c};
}

EffectPair effects(double lambda) {
    validate_sharpness(lambda);
    const double up = 0.5 * (1.0 + lambda);
    const double down = 0.5 * (1.0 - lambda);
    // down can be a tiny negative number when lambda carries the range slack.
    const double sqrt_up = std::sqrt(up);
    const double sqrt_down = std::sqrt(std::max(down, 0.0));
    return {
        Effect{ComplexMat2::diag(up, down), ComplexMat2::diag(sqrt_up, sqrt_down), Outcome::Plus},
        Effect{ComplexMat2::diag(down, up), ComplexMat2::diag(sqrt_down, sqrt_up), Outcome::Minus},
    };
}

const QubitState& LudersResult::require_post_state() const {
    if (!post_state) {
        throw NullEventError("conditioning on a null event (probability " +
                             std::to_string(probability) + ")");
    }
    return *post_state;
}

LudersResult luders_update(const QubitState& state, const Effect& effect) {
    LudersResult result;
    result.probability = std::clamp((state.matrix() * effect.op).trace().real(), 0.0, 1.0);
    if (result.probability <= kNullEventThreshold) return result;

    // sqrt(F) is Hermitian, so the adjoint equals sqrt(F) itself.
    const ComplexMat2 kicked = effect.sqrt_op * state.matrix() * effect.sqrt_op.adjoint();
    result.post_state = QubitState(hermitian_part(kicked) * Complex{1.0 / result.probability});
    return result;
}

QubitState evolve(const QubitState& state, double tau) {
    const ComplexMat2 u = evolution_unitary(tau);
    return QubitState(hermitian_part(u * state.matrix() * u.adjoint()));
}

}  // namespace macroreal
