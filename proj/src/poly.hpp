#pragma once

#include <vector>

#include "rational.hpp"

namespace bse {

/*
 * Dense polynomial over exact rationals, coefficients stored in ascending
 * degree. No trailing zeros except the zero polynomial, which is [0].
 * Evaluation and arithmetic are exact.
 */
class RatPoly {
public:
    RatPoly() : c_{Rat(0)} {}
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static RatPoly constant(const Rat& c) { return RatPoly({c}); }
    static RatPoly monomial(unsigned long deg, const Rat& coeff = Rat(1));

    const std::vector<Rat>& coeffs() const { return c_; }
    unsigned long degree() const { return c_.size() - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

    // Coefficient of x^i, zero beyond the degree.
    Rat coeff(unsigned long i) const { return i < c_.size() ? c_[i] : Rat(0); }

    Rat eval(const Rat& x) const;

    // p(a + b*x), exact composition with a linear argument.
    RatPoly substitute_linear(const Rat& a, const Rat& b) const;

    friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
    friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.c_ == q.c_; }

private:
    void normalize();

    std::vector<Rat> c_;
};

}  // namespace bse
