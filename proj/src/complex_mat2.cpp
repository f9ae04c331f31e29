#include "macroreal/complex_mat2.hpp"

#include <algorithm>
#include <cmath>

namespace macroreal {

double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
    double worst = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

bool is_hermitian(const ComplexMat2& m, double tol) {
    return max_abs_diff(m, m.adjoint()) <= tol;
}

std::array<double, 2> hermitian_eigenvalues(const ComplexMat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

}  // namespace macroreal
