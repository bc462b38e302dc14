#include "ssmc/closed_form.hpp"

#include <sstream>
#include <stdexcept>

namespace ssmc {

QuadExt QuadExt::operator+(const QuadExt& o) const { return {a + o.a, b + o.b, D}; }
QuadExt QuadExt::operator-(const QuadExt& o) const { return {a - o.a, b - o.b, D}; }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    return {a * o.a + D * b * o.b, a * o.b + b * o.a, D};
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    const Rat n = o.a * o.a - D * o.b * o.b;  // conjugate norm
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt(D))");
    QuadExt num = *this * QuadExt{o.a, -o.b, D};
    return {num.a / n, num.b / n, D};
}

int QuadExt::sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // mixed signs: compare a^2 against b^2 * D
    const Rat diff = a * a - b * b * D;
    const int sd = sgn(diff);
    return sa > 0 ? sd : -sd;
}

double QuadExt::approx() const {
    return a.get_d() + b.get_d() * std::sqrt(D.get_d());
}

std::string QuadExt::to_string() const {
    std::ostringstream os;
    os << "(" << rat_to_string(a);
    if (b != 0) os << (b > 0 ? " + " : " - ") << rat_to_string(abs(b)) << "*sqrt(" << rat_to_string(D) << ")";
    os << ")";
    return os.str();
}

std::pair<Rat, Rat> sqrt_enclosure(const Rat& D, const Rat& width) {
    if (D < 0) throw std::domain_error("sqrt of negative rational");
    if (width <= 0) throw std::invalid_argument("enclosure width must be positive");
    Rat lo(0), hi = D < 1 ? Rat(1) : D;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= D)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

const char* rho_class_name(RhoClass c) {
    switch (c) {
        case RhoClass::below_1: return "below_1";
        case RhoClass::equal_1: return "equal_1";
        case RhoClass::above_1: return "above_1";
    }
    return "?";
}

DhClosedForm dh_closed_form(const Rat& lambda) {
    if (lambda <= 1) throw std::invalid_argument("dh_closed_form requires lambda > 1");
    const Rat D = 8 * lambda + 1;
    const QuadExt s = QuadExt::radical(D);
    const QuadExt one = QuadExt::of_rat(Rat(1), D);
    auto q = [&](const Rat& r) { return QuadExt::of_rat(r, D); };

    // (x0, y0) = ((4l + sqrt(8l+1) - 1)/(8l), (sqrt(8l+1) - 3)/(2(l-1)))
    const QuadExt x0 = (q(4 * lambda - 1) + s) / q(8 * lambda);
    const QuadExt y0 = (s - q(3)) / q(2 * (lambda - 1));

    // tr(J) = l*x0*y0^2*(x0+1), det(J) = -l^2*x0^3*y0^4
    const QuadExt y0sq = y0 * y0;
    const QuadExt tr = q(lambda) * x0 * y0sq * (x0 + one);
    const QuadExt det = -(q(lambda * lambda) * x0 * x0 * x0 * y0sq * y0sq);

    // rho = tr/2 + sqrt(tr^2/4 - det); compare with 1 by rationalizing:
    // rho < 1  iff  A > 0 and B < A^2, where A = 1 - tr/2, B = tr^2/4 - det.
    const QuadExt A = one - tr / q(2);
    const QuadExt B = tr * tr / q(4) - det;
    RhoClass cls;
    if (A.sign() <= 0) {
        cls = RhoClass::above_1;  // B > 0 always, so sqrt(B) > 0 >= A
    } else {
        const int cmp = (B - A * A).sign();
        cls = cmp < 0 ? RhoClass::below_1 : (cmp == 0 ? RhoClass::equal_1 : RhoClass::above_1);
    }
    return DhClosedForm{lambda, x0, y0, cls};
}

}  // namespace ssmc
