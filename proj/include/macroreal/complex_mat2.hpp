// complex_mat2.hpp
// Dense 2x2 complex matrices over the basis {|A>, |B>}.

#pragma once

#include <array>
#include <complex>

namespace macroreal {

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix: (0,0) (0,1) / (1,0) (1,1).
class ComplexMat2 {
public:
    constexpr ComplexMat2() = default;
    constexpr ComplexMat2(Complex a00, Complex a01, Complex a10, Complex a11)
        : entries_{a00, a01, a10, a11} {}

    static constexpr ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr ComplexMat2 zero() { return {}; }
    static constexpr ComplexMat2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr Complex operator()(int row, int col) const { return entries_[2 * row + col]; }
    constexpr Complex& operator()(int row, int col) { return entries_[2 * row + col]; }

    constexpr Complex trace() const { return entries_[0] + entries_[3]; }
    constexpr Complex determinant() const {
        return entries_[0] * entries_[3] - entries_[1] * entries_[2];
    }

    ComplexMat2 adjoint() const {
        return {std::conj(entries_[0]), std::conj(entries_[2]),
                std::conj(entries_[1]), std::conj(entries_[3])};
    }

    ComplexMat2& operator+=(const ComplexMat2& rhs) {
        for (int k = 0; k < 4; ++k) entries_[k] += rhs.entries_[k];
        return *this;
    }
    ComplexMat2& operator-=(const ComplexMat2& rhs) {
        for (int k = 0; k < 4; ++k) entries_[k] -= rhs.entries_[k];
        return *this;
    }
    ComplexMat2& operator*=(Complex s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend ComplexMat2 operator+(ComplexMat2 lhs, const ComplexMat2& rhs) { return lhs += rhs; }
    friend ComplexMat2 operator-(ComplexMat2 lhs, const ComplexMat2& rhs) { return lhs -= rhs; }
    friend ComplexMat2 operator*(ComplexMat2 m, Complex s) { return m *= s; }
    friend ComplexMat2 operator*(Complex s, ComplexMat2 m) { return m *= s; }

    friend ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) {
        return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
    }

    friend bool operator==(const ComplexMat2&, const ComplexMat2&) = default;

private:
    std::array<Complex, 4> entries_{};
};

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b);

bool is_hermitian(const ComplexMat2& m, double tol);

// Eigenvalues of a Hermitian matrix, ascending. Only the Hermitian part is used.
std::array<double, 2> hermitian_eigenvalues(const ComplexMat2& m);

}  // namespace macroreal
