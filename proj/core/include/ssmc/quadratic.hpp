#pragma once

#include "ssmc/rational.hpp"

namespace ssmc {

// Element a + b*sqrt(D) of the real quadratic extension Q(sqrt(D)), D > 0 and
// not a perfect square of a rational (a square D simply collapses to Q).
// Exact arithmetic throughout; sign() decides by rationalizing the radical.
struct QuadExt {
    Rat a, b, D;

    QuadExt(Rat a_, Rat b_, Rat D_) : a(std::move(a_)), b(std::move(b_)), D(std::move(D_)) {}
    static QuadExt of_rat(const Rat& r, const Rat& D) { return {r, Rat(0), D}; }
    static QuadExt radical(const Rat& D) { return {Rat(0), Rat(1), D}; }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt operator-() const { return {-a, -b, D}; }

    int sign() const;  // -1, 0, +1
    bool is_zero() const { return sign() == 0; }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator==(const QuadExt& o) const { return (*this - o).sign() == 0; }

    double approx() const;
    std::string to_string() const;  // "(a + b*sqrt(D))"
};

// Rational interval [lo, hi] enclosing sqrt(D) with hi - lo <= width.
// Independent route for cross-checking QuadExt computations.
std::pair<Rat, Rat> sqrt_enclosure(const Rat& D, const Rat& width);

}  // namespace ssmc
