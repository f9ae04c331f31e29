#include "macroreal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace macroreal {
namespace {

struct MaskedTerm {
    int sign;
    std::uint32_t mask;  // times the event constrains
    std::uint32_t want;  // required '+' bits within mask
};

std::vector<MaskedTerm> compile(const InequalitySpec& spec) {
    spec.validate();
    if (spec.n_times > kMaxEnumerationTimes) {
        throw ResourceError(spec.name + ": " + std::to_string(spec.n_times) +
                            " times exceeds the enumeration limit of " +
                            std::to_string(kMaxEnumerationTimes));
    }
    std::vector<MaskedTerm> out;
    out.reserve(spec.terms.size());
    for (const auto& t : spec.terms) {
        MaskedTerm m{t.sign, 0, 0};
        for (const auto& meas : t.event.measurements()) {
            const std::uint32_t bit = 1u << (meas.time - 1);
            m.mask |= bit;
            if (meas.outcome == Outcome::Plus) m.want |= bit;
        }
        out.push_back(m);
    }
    return out;
}

std::int64_t value_at(const std::vector<MaskedTerm>& terms, std::uint32_t bits) {
    std::int64_t v = 0;
    for (const auto& t : terms) {
        if ((bits & t.mask) == t.want) v += t.sign;
    }
    return v;
}

// Extreme value of sign * functional over all assignments; sign = -1 gives -min.
std::int64_t extreme(const InequalitySpec& spec, int sign, Exec exec) {
    const auto terms = compile(spec);
    const std::int64_t count = std::int64_t{1} << spec.n_times;
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    if (exec == Exec::Serial) {
        for (std::int64_t b = 0; b < count; ++b) {
            best = std::max(best, sign * value_at(terms, static_cast<std::uint32_t>(b)));
        }
        return best;
    }
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::int64_t b = 0; b < count; ++b) {
        best = std::max(best, sign * value_at(terms, static_cast<std::uint32_t>(b)));
    }
    return best;
}

std::int64_t integral_bound(const std::string& name, double bound) {
    if (!std::isfinite(bound) || std::nearbyint(bound) != bound) {
        throw DomainError(name + ": declared bound is not an integer");
    }
    return static_cast<std::int64_t>(bound);
}

CertificationEntry certify_one(const InequalitySpec& spec, Exec exec) {
    CertificationEntry e;
    e.name = spec.name;
    e.classical_max = classical_max(spec, exec);
    e.declared_upper = integral_bound(spec.name, spec.upper_bound);
    e.pass = e.classical_max <= e.declared_upper;
    e.tight = e.classical_max == e.declared_upper;
    if (spec.lower_bound) {
        e.classical_min = classical_min(spec, exec);
        e.declared_lower = integral_bound(spec.name, *spec.lower_bound);
        e.pass = e.pass && *e.classical_min >= *e.declared_lower;
        e.tight = e.tight && *e.classical_min == *e.declared_lower;
    }
    return e;
}

bool all_entries_pass(const std::vector<CertificationEntry>& entries) {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

std::int64_t expected_residual_total(int n) {
    return std::int64_t{n - 2} << (n - 2);
}

}  // namespace

std::vector<Outcome> Assignment::outcomes() const {
    std::vector<Outcome> out;
    out.reserve(n_times);
    for (int t = 1; t <= n_times; ++t) out.push_back(at(t));
    return out;
}

Assignment Assignment::from_outcomes(const std::vector<Outcome>& outcomes) {
    Assignment a{0, static_cast<int>(outcomes.size())};
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        if (outcomes[k] == Outcome::Plus) a.bits |= 1u << k;
    }
    return a;
}

std::int64_t classical_value(const InequalitySpec& spec, const Assignment& v) {
    return value_at(compile(spec), v.bits);
}

std::int64_t classical_max(const InequalitySpec& spec, Exec exec) {
    return extreme(spec, +1, exec);
}

std::int64_t classical_min(const InequalitySpec& spec, Exec exec) {
    return -extreme(spec, -1, exec);
}

bool ResidualTerms::all_non_negative() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](auto c) { return c >= 0; });
}

std::vector<Assignment> ResidualTerms::support() const {
    std::vector<Assignment> out;
    for (std::size_t b = 0; b < coefficients.size(); ++b) {
        if (coefficients[b] != 0) out.push_back({static_cast<std::uint32_t>(b), n_times});
    }
    return out;
}

ResidualTerms residual_terms(int n) {
    if (n < 3 || n > kMaxResidualTimes) {
        throw DomainError("residual_terms requires 3 <= n <= " + std::to_string(kMaxResidualTimes));
    }
    // Chain sum minus the leading term, as one integer functional.
    InequalitySpec chain = wlgi_n(n);
    for (auto& t : chain.terms) t.sign = -t.sign;
    const auto terms = compile(chain);

    ResidualTerms r;
    r.n_times = n;
    r.coefficients.resize(std::size_t{1} << n);
    for (std::size_t b = 0; b < r.coefficients.size(); ++b) {
        r.coefficients[b] = value_at(terms, static_cast<std::uint32_t>(b));
        r.total += r.coefficients[b];
    }
    return r;
}

CertificationEntry certify(const InequalitySpec& spec, Exec exec) {
    return certify_one(spec, exec);
}

bool CertificationReport::all_pass() const {
    const bool residuals_ok = std::all_of(residuals.begin(), residuals.end(), [](const auto& r) {
        return r.all_non_negative() && r.total == expected_residual_total(r.n_times);
    });
    return all_entries_pass(wlgi3) && all_entries_pass(wlgi_n) && all_entries_pass(lgi) &&
           residuals_ok;
}

std::string CertificationReport::summary() const {
    auto passed = [](const std::vector<CertificationEntry>& v) {
        return std::count_if(v.begin(), v.end(), [](const auto& e) { return e.pass; });
    };
    std::string s = std::to_string(passed(wlgi3)) + "/" + std::to_string(wlgi3.size()) +
                    " WLGI-3 certified";
    s += all_entries_pass(wlgi_n) ? ", wlgi-n 3..8 certified" : ", wlgi-n 3..8 FAILED";
    s += all_entries_pass(lgi) ? ", lgi 3..8 bounds certified" : ", lgi 3..8 bounds FAILED";
    return s;
}

CertificationReport certify_catalog(Exec exec) {
    CertificationReport report;
    for (const auto& spec : wlgi3_catalog()) report.wlgi3.push_back(certify_one(spec, exec));
    for (int n = 3; n <= 8; ++n) {
        report.wlgi_n.push_back(certify_one(wlgi_n(n), exec));
        report.lgi.push_back(certify_one(lgi_spec(n), exec));
    }
    for (int n = 3; n <= 10; ++n) report.residuals.push_back(residual_terms(n));
    return report;
}

}  // namespace macroreal
