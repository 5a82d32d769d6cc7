#include "exflat/rational.hpp"

namespace exflat {

namespace {

bool is_canonical_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    if (s[i] == '0') return i + 1 == s.size() && s[0] != '-';  // "0" only, no "-0", "01"
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_canonical_integer(num_part))
        throw std::invalid_argument("malformed rational '" + text + "'");
    Int num(num_part, 10);
    Int den = 1;
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!is_canonical_integer(den_part) || den_part[0] == '-')
            throw std::invalid_argument("malformed rational '" + text + "'");
        den = Int(den_part, 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        if (den == 1) throw std::invalid_argument("non-canonical rational '" + text + "'");
        Int g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) throw std::invalid_argument("non-reduced rational '" + text + "'");
    }
    return make_rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace exflat
