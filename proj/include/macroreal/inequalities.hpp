// inequalities.hpp
// Macrorealism criteria as signed sums of event probabilities with classical
// bounds, and their quantum-mechanical evaluation.
//
// Stable names:
//   wlgi3-4, wlgi3-5a .. wlgi3-5k    three-term Wigner-form inequalities
//   <any of the above>-flipped       same with every outcome reversed
//   wlgi-n:<n>                       n-term chain inequality, n >= 3
//   lgi:<n>                          K_n = C21 + C32 + ... + C_n(n-1) - C_n1
//   nsit                             P(Q2=+) - P(1+,2+) - P(1-,2+), equality

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "macroreal/qm_core.hpp"
#include "macroreal/sequences.hpp"

namespace macroreal {

class UnknownSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Term {
    int sign = +1;  // +1 or -1
    EventSpec event;
};

// sum_k sign_k P(event_k) <= upper_bound (and >= lower_bound when present)
// for every macrorealist model.
struct InequalitySpec {
    std::string name;
    int n_times = 0;
    std::vector<Term> terms;
    double upper_bound = 0.0;
    std::optional<double> lower_bound;

    void validate() const;
    InequalitySpec flipped() const;  // reverse every outcome, keep bounds
    std::string to_string() const;
};

struct ViolationResult {
    ModelParams params;
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // value - bound; > 0 means a violation
};

// The twelve listed three-term inequalities followed by their twelve flips.
std::vector<InequalitySpec> wlgi3_catalog();

InequalitySpec wlgi_n(int n);

// K_n expanded to 4n two-time events.
InequalitySpec lgi_spec(int n);

InequalitySpec nsit_spec();

// Resolves any stable name listed above.
InequalitySpec find_spec(std::string_view name);

// Parses "lgi:<n>"; empty if `name` is not of that form.
std::optional<int> parse_lgi_name(std::string_view name);

ViolationResult evaluate(const InequalitySpec& spec, const ModelParams& params);

// Routes lgi:<n> through lgi_kn, everything else through find_spec + evaluate.
ViolationResult evaluate(std::string_view spec_name, const ModelParams& params);

// K_n from correlators on an n-time plan; bound n - 2.
ViolationResult lgi_kn(int n, const ModelParams& params);

// Lower classical bound of K_n: -n for odd n, -(n - 2) for even n.
double lgi_lower_bound(int n);

// P(Q2=+) - [P(1+,2+) + P(1-,2+)]; nonzero means NSIT is violated.
double nsit_delta(const ModelParams& params);

}  // namespace macroreal
