#include "qcontext/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace qcontext {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

namespace {

bool valid_int_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(text)) throw std::invalid_argument("bad rational: \"" + text + "\"");
    } else {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!valid_int_token(num) || !valid_int_token(den))
            throw std::invalid_argument("bad rational: \"" + text + "\"");
    }
    Rat r(text);
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
    r.canonicalize();
    return r;
}

double rat_double(const Rat& x) {
    return x.get_d();
}

std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

void normalize_primitive(RatVec& v) {
    mpz_class den_lcm = 1;
    for (const Rat& x : v) {
        mpz_class d = x.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    for (Rat& x : v) {
        x *= Rat(den_lcm);
        x.canonicalize();
        mpz_class n = x.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) return;  // zero vector
    int lead_sign = 0;
    for (const Rat& x : v) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    if (lead_sign < 0) num_gcd = -num_gcd;
    for (Rat& x : v) {
        x /= Rat(num_gcd);
        x.canonicalize();
    }
}

}  // namespace qcontext
