#pragma once

#include <mutex>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace bse {

/*
 * Primary recurrences for the classical sequences, with append-only memo
 * tables. All recurrences are iterative. Public methods are safe to call
 * from multiple threads on the same instance; a warm cache returns exactly
 * the values a cold instance would compute.
 *
 * Conventions: signed Stirling numbers s(n,k) from the falling-factorial
 * triangle; Bernoulli numbers from t/(e^t - 1), so B_1 = -1/2; Euler numbers
 * from 1/cosh t, zero at odd index.
 */
class Sequences {
public:
    // s(n,k); total, returns 0 for k > n and for n > 0, k = 0.
    Int stirling_s1(unsigned long n, unsigned long k);

    // [s(n,0), ..., s(n,n)], length n + 1.
    std::vector<Int> stirling_row(unsigned long n);

    // B_n via B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k.
    Rat bernoulli(unsigned long n);

    // E_n via E_{2m} = -sum_{k<m} C(2m,2k) E_{2k}; zero at odd index.
    Int euler_number(unsigned long n);

    // Coefficients of B_n(x) = sum_k C(n,k) B_k x^{n-k}; degree n, monic.
    RatPoly bernoulli_poly_coeffs(unsigned long n);

    Rat bernoulli_poly_eval(unsigned long n, const Rat& x);

private:
    void ensure_stirling(unsigned long n);
    void ensure_bernoulli(unsigned long n);
    void ensure_euler(unsigned long n);

    std::mutex mu_;
    std::vector<std::vector<Int>> stirling_rows_;
    std::vector<Rat> bernoulli_;
    std::vector<Int> euler_;
};

// Stateless factorial-type products. Empty products (n = 0) are 1.
Int factorial(unsigned long n);
Rat falling_factorial(const Rat& x, unsigned long n);
Rat rising_factorial(const Rat& x, unsigned long n);

// (2n-1)!! = 1*3*5*...*(2n-1).
Int double_factorial_odd(unsigned long n);

// C(n,k), zero for k > n.
Int binomial_int(unsigned long n, unsigned long k);

// C(x,n) = (x)_n / n! for rational x.
Rat binomial_rat(const Rat& x, unsigned long n);

}  // namespace bse
