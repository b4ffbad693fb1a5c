#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "sequences.hpp"

namespace bse {

enum class IdentityId { first, second, third, recur, stirdef, telescoped, half, quarter };

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

// All eight identity ids, in enum order.
const std::vector<IdentityId>& all_identities();

struct IdentitySides {
    unsigned long n;
    Rat lhs;
    Rat rhs;
    bool equal;  // exact structural equality of canonical rationals
};

// One verified index. The three theorem identities carry both sides; the
// check_* family is boolean-only and leaves lhs/rhs empty.
struct IdentityRow {
    unsigned long n;
    std::optional<Rat> lhs;
    std::optional<Rat> rhs;
    bool pass;
};

struct IdentityReport {
    IdentityId id;
    unsigned long n_min;
    unsigned long n_max;
    std::vector<IdentityRow> rows;
    bool all_pass;
    std::chrono::duration<double> elapsed;
};

// sum_k s(n,k) B_k  vs  (-1)^n n!/(n+1).
IdentitySides identity_one_sides(Sequences& seq, unsigned long n);

// sum_k s(n,k) (2^{-k} - 2) B_{k+1}/(k+1)  vs  (-1)^n/(n+1) * (2n-1)!!/2^{n+1}.
IdentitySides identity_two_sides(Sequences& seq, unsigned long n);

// sum_k s(n,k) [(1 + 2^{-(k+1)}(1 - 2^{-k})) B_{k+1} + 4^{-(k+1)}(k+1) E_k]/(k+1)
// vs  (-1)^{n-1}/(4(n+1)) * rising(3/4, n). At n = 0 the sign factor is -1.
IdentitySides identity_three_sides(Sequences& seq, unsigned long n);

// (B_{k+1}(x+1) - B_{k+1}(x))/(k+1) = x^k, at a point.
bool check_forward_difference(Sequences& seq, unsigned long k, const Rat& x);

// Same relation as a polynomial-coefficient identity (stronger than any
// pointwise sample).
bool check_forward_difference_poly(Sequences& seq, unsigned long k);

// (x)_n = sum_k s(n,k) x^k at a point.
bool check_stirling_expansion(Sequences& seq, unsigned long n, const Rat& x);

// n! C(y, n+1) = sum_k s(n,k) (B_{k+1}(y) - B_{k+1})/(k+1), integer y >= 0.
bool check_telescoped(Sequences& seq, unsigned long n, unsigned long y);

// B_{k+1}(1/2) = (2^{-k} - 1) B_{k+1}.
bool check_half_value(Sequences& seq, unsigned long k);

// B_{k+1}(1/4) = -2^{-(k+1)}(1 - 2^{-k}) B_{k+1} - 4^{-(k+1)}(k+1) E_k.
bool check_quarter_value(Sequences& seq, unsigned long k);

/*
 * Runs the selected check for every n in [n_min, n_max], never aborting
 * early, so a failing report lists every bad index. Rows are in ascending n.
 * For `stirdef` each row sweeps a fixed sample of rational arguments; for
 * `telescoped` each row sweeps y = 0..50. Throws std::invalid_argument when
 * n_min > n_max.
 */
IdentityReport verify_range(Sequences& seq, IdentityId id, unsigned long n_min,
                            unsigned long n_max);

// Report as a JSON object {"kind":"report","identity":...,"rows":[...],
// "all_pass":...}; rationals as strings, timings deliberately excluded so
// the output is byte-stable.
std::string report_to_json(const IdentityReport& report);

}  // namespace bse
