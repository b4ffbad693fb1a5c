#include "sequences.hpp"

namespace bse {

void Sequences::ensure_stirling(unsigned long n) {
    if (stirling_rows_.empty())
        stirling_rows_.push_back({Int(1)});
    while (stirling_rows_.size() <= n) {
        const auto& prev = stirling_rows_.back();
        const unsigned long m = stirling_rows_.size() - 1;  // prev is row m
        std::vector<Int> row(m + 2, Int(0));
        // s(m+1,k) = s(m,k-1) - m*s(m,k)
        for (unsigned long k = 1; k <= m + 1; ++k) {
            row[k] = prev[k - 1];
            if (k <= m)
                row[k] -= Int(m) * prev[k];
        }
        stirling_rows_.push_back(std::move(row));
    }
}

Int Sequences::stirling_s1(unsigned long n, unsigned long k) {
    if (k > n)
        return Int(0);
    std::lock_guard lock(mu_);
    ensure_stirling(n);
    return stirling_rows_[n][k];
}

std::vector<Int> Sequences::stirling_row(unsigned long n) {
    std::lock_guard lock(mu_);
    ensure_stirling(n);
    return stirling_rows_[n];
}

void Sequences::ensure_bernoulli(unsigned long n) {
    if (bernoulli_.empty())
        bernoulli_.push_back(Rat(1));
    while (bernoulli_.size() <= n) {
        const unsigned long m = bernoulli_.size();
        Rat sum(0);
        Int binom(1);  // C(m+1,k), updated multiplicatively
        for (unsigned long k = 0; k < m; ++k) {
            sum += Rat(binom) * bernoulli_[k];
            binom *= Int(m + 1 - k);
            binom /= Int(k + 1);
        }
        bernoulli_.push_back(-sum / Rat(m + 1));
    }
}

Rat Sequences::bernoulli(unsigned long n) {
    std::lock_guard lock(mu_);
    ensure_bernoulli(n);
    return bernoulli_[n];
}

void Sequences::ensure_euler(unsigned long n) {
    if (euler_.empty())
        euler_.push_back(Int(1));
    while (euler_.size() <= n) {
        const unsigned long m = euler_.size();
        if (m % 2 == 1) {
            euler_.push_back(Int(0));
            continue;
        }
        Int sum(0);
        for (unsigned long k = 0; k + 2 <= m; k += 2)
            sum += binomial_int(m, k) * euler_[k];
        euler_.push_back(-sum);
    }
}

Int Sequences::euler_number(unsigned long n) {
    std::lock_guard lock(mu_);
    ensure_euler(n);
    return euler_[n];
}

RatPoly Sequences::bernoulli_poly_coeffs(unsigned long n) {
    std::vector<Rat> b;
    {
        std::lock_guard lock(mu_);
        ensure_bernoulli(n);
        b.assign(bernoulli_.begin(), bernoulli_.begin() + n + 1);
    }
    std::vector<Rat> coeffs(n + 1);
    for (unsigned long m = 0; m <= n; ++m)
        coeffs[m] = Rat(binomial_int(n, n - m)) * b[n - m];
    return RatPoly(std::move(coeffs));
}

Rat Sequences::bernoulli_poly_eval(unsigned long n, const Rat& x) {
    return bernoulli_poly_coeffs(n).eval(x);
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat falling_factorial(const Rat& x, unsigned long n) {
    Rat r(1);
    for (unsigned long i = 0; i < n; ++i)
        r *= x - Rat(i);
    return r;
}

Rat rising_factorial(const Rat& x, unsigned long n) {
    Rat r(1);
    for (unsigned long i = 0; i < n; ++i)
        r *= x + Rat(i);
    return r;
}

Int double_factorial_odd(unsigned long n) {
    Int r(1);
    for (unsigned long i = 1; i < 2 * n; i += 2)
        r *= Int(i);
    return r;
}

Int binomial_int(unsigned long n, unsigned long k) {
    if (k > n)
        return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat binomial_rat(const Rat& x, unsigned long n) {
    return falling_factorial(x, n) / Rat(factorial(n));
}

}  // namespace bse
