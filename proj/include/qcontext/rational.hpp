#ifndef QCONTEXT_RATIONAL_HPP
#define QCONTEXT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qcontext {

// Exact rational scalar. All algebra in this library is exact; doubles appear
// only at presentation time and in the explicitly floating quantum paths.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat make_rat(long num, long den);

// Canonical text form: lowest terms, positive denominator, "p/q" ("p" when q = 1).
std::string rat_str(const Rat& x);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);

double rat_double(const Rat& x);

// 17 significant digits, enough to round-trip an IEEE double.
std::string float17(double x);

Rat dot(const RatVec& a, const RatVec& b);

bool is_zero_vec(const RatVec& v);

// Scales to integer entries with gcd 1 and positive leading nonzero entry.
void normalize_primitive(RatVec& v);

}  // namespace qcontext

#endif
