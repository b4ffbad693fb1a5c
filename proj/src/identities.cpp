#include "identities.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace bse {

namespace {

constexpr unsigned long kTelescopedMaxY = 50;

// Sample arguments for the stirdef sweep.
const std::vector<Rat>& stirdef_samples() {
    static const std::vector<Rat> xs = {make_rat(-2), make_rat(-1, 2), make_rat(0),
                                        make_rat(1, 3), make_rat(5)};
    return xs;
}

Rat sign(bool negative) { return negative ? Rat(-1) : Rat(1); }

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::first: return "first";
        case IdentityId::second: return "second";
        case IdentityId::third: return "third";
        case IdentityId::recur: return "recur";
        case IdentityId::stirdef: return "stirdef";
        case IdentityId::telescoped: return "telescoped";
        case IdentityId::half: return "half";
        case IdentityId::quarter: return "quarter";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (IdentityId id : all_identities())
        if (name == identity_name(id))
            return id;
    return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::first,      IdentityId::second, IdentityId::third,
        IdentityId::recur,      IdentityId::stirdef, IdentityId::telescoped,
        IdentityId::half,       IdentityId::quarter};
    return ids;
}

IdentitySides identity_one_sides(Sequences& seq, unsigned long n) {
    const auto row = seq.stirling_row(n);
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k)
        lhs += Rat(row[k]) * seq.bernoulli(k);
    Rat rhs = sign(n % 2 == 1) * Rat(factorial(n)) / Rat(n + 1);
    return {n, lhs, rhs, lhs == rhs};
}

IdentitySides identity_two_sides(Sequences& seq, unsigned long n) {
    const auto row = seq.stirling_row(n);
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k)
        lhs += Rat(row[k]) * (inv_pow2(k) - Rat(2)) * seq.bernoulli(k + 1) / Rat(k + 1);
    Rat rhs = sign(n % 2 == 1) / Rat(n + 1) * Rat(double_factorial_odd(n)) * inv_pow2(n + 1);
    return {n, lhs, rhs, lhs == rhs};
}

IdentitySides identity_three_sides(Sequences& seq, unsigned long n) {
    const auto row = seq.stirling_row(n);
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k) {
        Rat term = (Rat(1) + inv_pow2(k + 1) * (Rat(1) - inv_pow2(k))) * seq.bernoulli(k + 1);
        term += inv_pow2(2 * (k + 1)) * Rat(k + 1) * Rat(seq.euler_number(k));
        lhs += Rat(row[k]) * term / Rat(k + 1);
    }
    // (-1)^{n-1} is -1 at n = 0.
    Rat rhs = sign(n % 2 == 0) / Rat(4 * (n + 1)) * rising_factorial(make_rat(3, 4), n);
    return {n, lhs, rhs, lhs == rhs};
}

bool check_forward_difference(Sequences& seq, unsigned long k, const Rat& x) {
    Rat diff = seq.bernoulli_poly_eval(k + 1, x + 1) - seq.bernoulli_poly_eval(k + 1, x);
    Rat xk(1);
    for (unsigned long i = 0; i < k; ++i)
        xk *= x;
    return diff / Rat(k + 1) == xk;
}

bool check_forward_difference_poly(Sequences& seq, unsigned long k) {
    const RatPoly b = seq.bernoulli_poly_coeffs(k + 1);
    const RatPoly shifted = b.substitute_linear(Rat(1), Rat(1));
    const RatPoly diff = (shifted - b) * RatPoly::constant(make_rat(1, static_cast<long>(k) + 1));
    return diff == RatPoly::monomial(k);
}

bool check_stirling_expansion(Sequences& seq, unsigned long n, const Rat& x) {
    const auto row = seq.stirling_row(n);
    Rat rhs(0);
    Rat xp(1);
    for (unsigned long k = 0; k <= n; ++k) {
        rhs += Rat(row[k]) * xp;
        xp *= x;
    }
    return falling_factorial(x, n) == rhs;
}

bool check_telescoped(Sequences& seq, unsigned long n, unsigned long y) {
    const auto row = seq.stirling_row(n);
    const Rat ry(y);
    Rat rhs(0);
    for (unsigned long k = 0; k <= n; ++k)
        rhs += Rat(row[k]) * (seq.bernoulli_poly_eval(k + 1, ry) - seq.bernoulli(k + 1)) /
               Rat(k + 1);
    return Rat(factorial(n) * binomial_int(y, n + 1)) == rhs;
}

bool check_half_value(Sequences& seq, unsigned long k) {
    return seq.bernoulli_poly_eval(k + 1, make_rat(1, 2)) ==
           (inv_pow2(k) - Rat(1)) * seq.bernoulli(k + 1);
}

bool check_quarter_value(Sequences& seq, unsigned long k) {
    Rat rhs = -inv_pow2(k + 1) * (Rat(1) - inv_pow2(k)) * seq.bernoulli(k + 1) -
              inv_pow2(2 * (k + 1)) * Rat(k + 1) * Rat(seq.euler_number(k));
    return seq.bernoulli_poly_eval(k + 1, make_rat(1, 4)) == rhs;
}

namespace {

IdentityRow sides_row(const IdentitySides& s) {
    return {s.n, s.lhs, s.rhs, s.equal};
}

// The telescoped sweep reuses (B_{k+1}(y) - B_{k+1})/(k+1) across all n, so
// the full n x y grid costs O(max_n^2 * max_y) ring operations instead of
// O(max_n^3 * max_y).
std::vector<IdentityRow> telescoped_rows(Sequences& seq, unsigned long n_min,
                                         unsigned long n_max) {
    std::vector<std::vector<Rat>> vals(kTelescopedMaxY + 1);
    for (unsigned long y = 0; y <= kTelescopedMaxY; ++y) {
        vals[y].resize(n_max + 1);
        for (unsigned long k = 0; k <= n_max; ++k)
            vals[y][k] = (seq.bernoulli_poly_eval(k + 1, Rat(y)) - seq.bernoulli(k + 1)) /
                         Rat(k + 1);
    }
    std::vector<IdentityRow> rows;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        const auto srow = seq.stirling_row(n);
        const Int nfact = factorial(n);
        bool pass = true;
        for (unsigned long y = 0; y <= kTelescopedMaxY; ++y) {
            Rat rhs(0);
            for (unsigned long k = 0; k <= n; ++k)
                rhs += Rat(srow[k]) * vals[y][k];
            if (Rat(nfact * binomial_int(y, n + 1)) != rhs) {
                pass = false;
                break;
            }
        }
        rows.push_back({n, std::nullopt, std::nullopt, pass});
    }
    return rows;
}

}  // namespace

IdentityReport verify_range(Sequences& seq, IdentityId id, unsigned long n_min,
                            unsigned long n_max) {
    if (n_min > n_max)
        throw std::invalid_argument("verify_range: n_min > n_max");
    const auto start = std::chrono::steady_clock::now();
    std::vector<IdentityRow> rows;
    switch (id) {
        case IdentityId::first:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back(sides_row(identity_one_sides(seq, n)));
            break;
        case IdentityId::second:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back(sides_row(identity_two_sides(seq, n)));
            break;
        case IdentityId::third:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back(sides_row(identity_three_sides(seq, n)));
            break;
        case IdentityId::recur:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back({n, std::nullopt, std::nullopt,
                                check_forward_difference_poly(seq, n)});
            break;
        case IdentityId::stirdef:
            for (unsigned long n = n_min; n <= n_max; ++n) {
                bool pass = true;
                for (const Rat& x : stirdef_samples())
                    pass = check_stirling_expansion(seq, n, x) && pass;
                rows.push_back({n, std::nullopt, std::nullopt, pass});
            }
            break;
        case IdentityId::telescoped:
            rows = telescoped_rows(seq, n_min, n_max);
            break;
        case IdentityId::half:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back({n, std::nullopt, std::nullopt, check_half_value(seq, n)});
            break;
        case IdentityId::quarter:
            for (unsigned long n = n_min; n <= n_max; ++n)
                rows.push_back({n, std::nullopt, std::nullopt, check_quarter_value(seq, n)});
            break;
    }
    bool all_pass = true;
    for (const auto& r : rows)
        all_pass = all_pass && r.pass;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return {id, n_min, n_max, std::move(rows), all_pass,
            std::chrono::duration<double>(elapsed)};
}

std::string report_to_json(const IdentityReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        if (r.lhs)
            row["lhs"] = to_string(*r.lhs);
        if (r.rhs)
            row["rhs"] = to_string(*r.rhs);
        row["pass"] = r.pass;
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json out;
    out["kind"] = "report";
    out["identity"] = identity_name(report.id);
    out["n_min"] = report.n_min;
    out["n_max"] = report.n_max;
    out["rows"] = std::move(rows);
    out["all_pass"] = report.all_pass;
    return out.dump();
}

}  // namespace bse
