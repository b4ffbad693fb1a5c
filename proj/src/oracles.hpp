#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace bse::oracles {

/*
 * Brute-force cross-validation routes. Each one is algorithmically disjoint
 * from the recurrence used by Sequences so the two sides do not share error
 * modes. Not built for speed.
 */

// B_n via the Akiyama-Tanigawa triangle, adjusted to the t/(e^t - 1)
// convention (B_1 = -1/2).
Rat bernoulli_akiyama_tanigawa(unsigned long n);

// [B_0, ..., B_max_n] from a single triangle, O(max_n^2) overall.
std::vector<Rat> bernoulli_akiyama_tanigawa_prefix(unsigned long max_n);

// Coefficients of prod_{j=0}^{n-1} (x - j) by repeated polynomial
// multiplication. Throws std::runtime_error if any coefficient comes out
// non-integral (an arithmetic bug, not an input error).
std::vector<Int> stirling_row_by_product(unsigned long n);

// All rows 0..max_n from one incremental product.
std::vector<std::vector<Int>> stirling_rows_by_product_prefix(unsigned long max_n);

// E_n read off the truncated power-series reciprocal of cosh t. Throws
// std::runtime_error if coeff * n! is not an integer.
Int euler_by_series_reciprocal(unsigned long n);

// [E_0, ..., E_max_n] from one truncated reciprocal.
std::vector<Int> euler_by_series_reciprocal_prefix(unsigned long max_n);

// Truncation of cosh t = sum t^{2k}/(2k)! up to degree `order`.
RatPoly cosh_series(unsigned long order);

// Power-series reciprocal of p up to degree `order`; p must have a nonzero
// constant term. Satisfies p * reciprocal = 1 + O(t^{order+1}).
RatPoly series_reciprocal(const RatPoly& p, unsigned long order);

}  // namespace bse::oracles
