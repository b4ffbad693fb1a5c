#include "oracles.hpp"

#include <stdexcept>

#include "sequences.hpp"

namespace bse::oracles {

std::vector<Rat> bernoulli_akiyama_tanigawa_prefix(unsigned long max_n) {
    std::vector<Rat> row(max_n + 1);
    for (unsigned long j = 0; j <= max_n; ++j)
        row[j] = make_rat(1, static_cast<long>(j) + 1);
    std::vector<Rat> out;
    out.reserve(max_n + 1);
    out.push_back(row[0]);
    for (unsigned long i = 1; i <= max_n; ++i) {
        for (unsigned long j = 0; j + i <= max_n; ++j)
            row[j] = Rat(j + 1) * (row[j] - row[j + 1]);
        // After i transformations row[0] is B_i in the B_1 = +1/2
        // convention; the sequences differ only at i = 1.
        out.push_back(i == 1 ? Rat(-row[0]) : row[0]);
    }
    return out;
}

Rat bernoulli_akiyama_tanigawa(unsigned long n) {
    return bernoulli_akiyama_tanigawa_prefix(n).back();
}

namespace {

std::vector<Int> integer_coeffs(const RatPoly& p, unsigned long n) {
    std::vector<Int> row;
    row.reserve(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        Rat c = p.coeff(k);
        if (c.get_den() != 1)
            throw std::runtime_error("non-integral falling-factorial coefficient at k=" +
                                     std::to_string(k));
        row.push_back(c.get_num());
    }
    return row;
}

}  // namespace

std::vector<Int> stirling_row_by_product(unsigned long n) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (unsigned long j = 0; j < n; ++j)
        p = p * RatPoly({Rat(-static_cast<long>(j)), Rat(1)});
    return integer_coeffs(p, n);
}

std::vector<std::vector<Int>> stirling_rows_by_product_prefix(unsigned long max_n) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(max_n + 1);
    RatPoly p = RatPoly::constant(Rat(1));
    rows.push_back(integer_coeffs(p, 0));
    for (unsigned long n = 1; n <= max_n; ++n) {
        p = p * RatPoly({Rat(-static_cast<long>(n) + 1), Rat(1)});
        rows.push_back(integer_coeffs(p, n));
    }
    return rows;
}

RatPoly cosh_series(unsigned long order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (unsigned long k = 0; 2 * k <= order; ++k)
        c[2 * k] = make_rat(Int(1), factorial(2 * k));
    return RatPoly(std::move(c));
}

RatPoly series_reciprocal(const RatPoly& p, unsigned long order) {
    const Rat c0 = p.coeff(0);
    if (c0 == 0)
        throw std::invalid_argument("series reciprocal needs a nonzero constant term");
    std::vector<Rat> r(order + 1, Rat(0));
    r[0] = Rat(1) / c0;
    for (unsigned long m = 1; m <= order; ++m) {
        Rat acc(0);
        for (unsigned long j = 1; j <= m; ++j)
            acc += p.coeff(j) * r[m - j];
        r[m] = -acc / c0;
    }
    return RatPoly(std::move(r));
}

std::vector<Int> euler_by_series_reciprocal_prefix(unsigned long max_n) {
    const RatPoly recip = series_reciprocal(cosh_series(max_n), max_n);
    std::vector<Int> out;
    out.reserve(max_n + 1);
    Int nfact(1);
    for (unsigned long n = 0; n <= max_n; ++n) {
        if (n > 0)
            nfact *= Int(n);
        Rat e = recip.coeff(n) * Rat(nfact);
        if (e.get_den() != 1)
            throw std::runtime_error("non-integral Euler coefficient at n=" +
                                     std::to_string(n));
        out.push_back(e.get_num());
    }
    return out;
}

Int euler_by_series_reciprocal(unsigned long n) {
    return euler_by_series_reciprocal_prefix(n).back();
}

}  // namespace bse::oracles
