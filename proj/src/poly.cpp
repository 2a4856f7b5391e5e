#include "avoidance/poly.hpp"

#include <stdexcept>

namespace avoidance {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = std::move(coeff);
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0) throw std::out_of_range("negative coefficient index");
    if (static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] -= o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
    std::vector<BigInt> out(coeffs_);
    for (auto& x : out) x *= c;
    return IntPolynomial(std::move(out));
}

}  // namespace avoidance
