#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace avoidance {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficient index = degree. Trailing zeros are
// normalized away; the zero polynomial has an empty coefficient vector and
// degree() == -1 (standing in for degree minus infinity).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial monomial(BigInt coeff, int degree);
    static IntPolynomial constant(BigInt c) { return monomial(std::move(c), 0); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Zero beyond the degree; valid for any non-negative index.
    BigInt coeff(int i) const;

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& c) const;

    bool operator==(const IntPolynomial&) const = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

// numerator(x) / denominator(x); the power-series expansion around 0 is
// well-defined exactly when the denominator's constant term is nonzero.
struct RationalGF {
    IntPolynomial numerator;
    IntPolynomial denominator;
};

}  // namespace avoidance
