// qm_core.hpp
// States, the two-state oscillation unitary, unsharp effects and the
// Lueders update for a single two-level system.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "macroreal/complex_mat2.hpp"

namespace macroreal {

inline constexpr double kPi = 3.14159265358979323846;

// Algebraic identities hold to this; composed pipelines to kPipelineTol.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPipelineTol = 1e-10;
// Branch probabilities at or below this are treated as null events.
inline constexpr double kNullEventThreshold = 1e-14;

// Thrown for out-of-range physical parameters. what() names the parameter.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a caller demands the post-measurement state of a null event.
class NullEventError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Outcome : int { Minus = -1, Plus = +1 };

constexpr int sign_of(Outcome o) { return static_cast<int>(o); }
constexpr Outcome flipped(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }
constexpr char symbol(Outcome o) { return o == Outcome::Plus ? '+' : '-'; }

// theta, phi: initial state angles; tau = dE * dt (hbar = 1); lambda: sharpness.
struct ModelParams {
    double theta = 0.0;
    double phi = 0.0;
    double tau = 0.0;
    double lambda = 1.0;

    // Throws DomainError naming the first offending field.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

void validate_sharpness(double lambda);

struct Effect;
struct LudersResult;

// Density matrix of the two-level system. Always Hermitian, unit trace, PSD.
class QubitState {
public:
    // Validates the invariants to kAlgebraTol; throws DomainError otherwise.
    static QubitState from_matrix(const ComplexMat2& m, double tol = kAlgebraTol);

    const ComplexMat2& matrix() const { return matrix_; }
    double purity() const;  // tr(rho^2)

    // Checks the invariants without throwing.
    static bool satisfies_invariants(const ComplexMat2& m, double tol);

private:
    explicit QubitState(const ComplexMat2& m) : matrix_(m) {}
    ComplexMat2 matrix_;

    friend QubitState initial_state(double, double);
    friend QubitState evolve(const QubitState&, double);
    friend LudersResult luders_update(const QubitState&, const Effect&);
};

// One element of a two-outcome POVM together with its positive square root.
struct Effect {
    ComplexMat2 op;
    ComplexMat2 sqrt_op;
    Outcome outcome = Outcome::Plus;
};

struct EffectPair {
    Effect plus;
    Effect minus;

    const Effect& operator[](Outcome o) const { return o == Outcome::Plus ? plus : minus; }
};

// |psi0><psi0| with |psi0> = cos(theta)|A> + e^{i phi} sin(theta)|B>.
QubitState initial_state(double theta, double phi);

// U = cos(tau) I - i sin(tau) (|A><B| + |B><A|), global phase fixed to 1.
ComplexMat2 evolution_unitary(double tau);

// F+- = (I +- lambda Q) / 2 with Q = |A><A| - |B><B|.
EffectPair effects(double lambda);

struct LudersResult {
    double probability = 0.0;
    std::optional<QubitState> post_state;  // empty for a null event

    // Throws NullEventError when the branch has (numerically) zero weight.
    const QubitState& require_post_state() const;
};

// p = tr(rho F); post = sqrt(F) rho sqrt(F)^dagger / p.
LudersResult luders_update(const QubitState& state, const Effect& effect);

// U rho U^dagger with U = evolution_unitary(tau).
QubitState evolve(const QubitState& state, double tau);

}  // namespace macroreal
