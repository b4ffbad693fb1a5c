#include "poly.hpp"

namespace bse {

void RatPoly::normalize() {
    while (c_.size() > 1 && c_.back() == 0)
        c_.pop_back();
    if (c_.empty())
        c_.push_back(Rat(0));
}

RatPoly RatPoly::monomial(unsigned long deg, const Rat& coeff) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = c_.back();
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::substitute_linear(const Rat& a, const Rat& b) const {
    const RatPoly lin({a, b});
    RatPoly acc = RatPoly::constant(c_.back());
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it)
        acc = acc * lin + RatPoly::constant(*it);
    return acc;
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> c(std::max(p.c_.size(), q.c_.size()), Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i)
        c[i] += q.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> c(std::max(p.c_.size(), q.c_.size()), Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i)
        c[i] -= q.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero())
        return RatPoly();
    std::vector<Rat> c(p.c_.size() + q.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j)
            c[i + j] += p.c_[i] * q.c_[j];
    return RatPoly(std::move(c));
}

}  // namespace bse
