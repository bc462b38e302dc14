#include "ssmc/rational.hpp"

#include <cctype>
#include <sstream>

namespace ssmc {

Int pow10(int k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed fraction: " + s);
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("malformed fraction: " + s);
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw ParseError("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("malformed integer: " + s);
        r.canonicalize();
        return r;
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
        neg = head[0] == '-';
        head.erase(0, 1);
    }
    if (head.empty() && tail.empty()) throw ParseError("malformed decimal: " + s);
    for (char c : head)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed decimal: " + s);
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed decimal: " + s);
    Int ip = head.empty() ? Int(0) : Int(head);
    Int fp = tail.empty() ? Int(0) : Int(tail);
    Int den = pow10(static_cast<int>(tail.size()));
    Int num = ip * den + fp;
    if (neg) num = -num;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// Largest k with 10^k | den after stripping; -1 if den has other prime factors.
int decimal_digits_of_denominator(const Int& den) {
    Int d = den;
    int twos = 0, fives = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return -1;
    return twos > fives ? twos : fives;
}

}  // namespace

std::string rat_to_string(const Rat& r) {
    const int k = decimal_digits_of_denominator(r.get_den());
    if (k < 0) return r.get_str();
    if (k == 0) return r.get_num().get_str();
    return rat_to_fixed(r, k);
}

std::string rat_to_fixed(const Rat& r, int digits) {
    Int scaled_num = r.get_num() * pow10(digits);
    if (!mpz_divisible_p(scaled_num.get_mpz_t(), r.get_den().get_mpz_t()))
        throw ParseError("value not representable with " + std::to_string(digits) +
                         " decimal digits: " + r.get_str());
    Int v = scaled_num / r.get_den();
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string ds = v.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    if (neg) ds.insert(0, "-");
    return ds;
}

std::string join_decimal_vector(const std::vector<Rat>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    return os.str();
}

}  // namespace ssmc
