#include "rational.hpp"

#include <stdexcept>

namespace bse {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool valid_int_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-')
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    std::string num_s = s.substr(0, slash);
    std::string den_s = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int_token(num_s) || !valid_int_token(den_s))
        throw std::invalid_argument("malformed rational: '" + s + "'");
    Int num(num_s);
    Int den(den_s);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    return make_rat(num, den);
}

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

Rat inv_pow2(unsigned long k) {
    Int den = 1;
    den <<= k;
    return make_rat(Int(1), den);
}

}  // namespace bse
