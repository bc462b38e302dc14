#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssmc {

// All certified statements are computed over exact rationals; binary floating
// point never enters a certificate.
using Rat = mpq_class;
using Int = mpz_class;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "3.3", "-0.25", "25/87", "42" into an exact rational.
Rat rat_from_string(const std::string& s);

// Activity parameter of the hard-core model. Kept exact end to end.
struct Activity {
    Rat lambda;

    explicit Activity(const Rat& value) : lambda(value) {
        if (lambda <= 0) throw ParseError("activity must be positive: " + lambda.get_str());
    }
    explicit Activity(const std::string& s) : Activity(rat_from_string(s)) {}
};

// "p/q" for non-decimal denominators, plain decimal expansion otherwise.
std::string rat_to_string(const Rat& r);

// Fixed-point decimal with exactly `digits` fractional digits; requires the
// denominator to divide 10^digits.
std::string rat_to_fixed(const Rat& r, int digits);

Int pow10(int k);

inline Rat rat_pow(const Rat& base, int e) {
    Rat acc(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

std::string join_decimal_vector(const std::vector<Rat>& v);

}  // namespace ssmc
