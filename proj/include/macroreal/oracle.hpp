// oracle.hpp
// Exact macrorealist checks by enumerating deterministic outcome assignments.
//
// Every classical joint distribution rho(Q_1, ..., Q_n) is a convex mixture of
// the 2^n deterministic assignments, so the extreme values of a linear
// functional of event probabilities are attained on one of them. All
// arithmetic here is integer.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "macroreal/inequalities.hpp"
#include "macroreal/parallel.hpp"

namespace macroreal {

inline constexpr int kMaxEnumerationTimes = 24;
inline constexpr int kMaxResidualTimes = 20;

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Outcome at time t (1-based) is '+' iff bit t-1 of `bits` is set.
struct Assignment {
    std::uint32_t bits = 0;
    int n_times = 0;

    Outcome at(int time) const {
        return (bits >> (time - 1)) & 1u ? Outcome::Plus : Outcome::Minus;
    }
    std::vector<Outcome> outcomes() const;
    static Assignment from_outcomes(const std::vector<Outcome>& outcomes);

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Value of the spec's linear functional on one deterministic assignment.
std::int64_t classical_value(const InequalitySpec& spec, const Assignment& v);

std::int64_t classical_max(const InequalitySpec& spec, Exec exec = Exec::Parallel);
std::int64_t classical_min(const InequalitySpec& spec, Exec exec = Exec::Parallel);

// Chain identity: for every assignment v,
//   c(v) = sum_i [Q_i=+, Q_{i+1}=-] - [Q_1=+, Q_n=-] >= 0,
// and sum_v c(v) = (n - 2) 2^(n - 2).
struct ResidualTerms {
    int n_times = 0;
    std::vector<std::int64_t> coefficients;  // indexed by Assignment::bits
    std::int64_t total = 0;

    bool all_non_negative() const;
    std::vector<Assignment> support() const;  // assignments with c(v) != 0
};

ResidualTerms residual_terms(int n);

struct CertificationEntry {
    std::string name;
    std::int64_t classical_max = 0;
    std::int64_t declared_upper = 0;
    std::optional<std::int64_t> classical_min;
    std::optional<std::int64_t> declared_lower;
    bool pass = false;
    bool tight = false;  // every declared bound is attained by some assignment
};

// Checks one spec against its declared bounds. Bounds must be integers.
CertificationEntry certify(const InequalitySpec& spec, Exec exec = Exec::Parallel);

struct CertificationReport {
    std::vector<CertificationEntry> wlgi3;
    std::vector<CertificationEntry> wlgi_n;  // n = 3..8
    std::vector<CertificationEntry> lgi;     // n = 3..8
    std::vector<ResidualTerms> residuals;    // n = 3..10

    bool all_pass() const;
    std::string summary() const;
};

CertificationReport certify_catalog(Exec exec = Exec::Parallel);

}  // namespace macroreal
