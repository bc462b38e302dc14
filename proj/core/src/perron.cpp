#include "ssmc/perron.hpp"

#include <cmath>
#include <stdexcept>

namespace ssmc {

Rat perron_bound(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& v) {
    const size_t t = a.size();
    if (v.size() != t) throw std::invalid_argument("perron_bound: dimension mismatch");
    for (const auto& row : a) {
        if (row.size() != t) throw std::invalid_argument("perron_bound: ragged matrix");
        for (const auto& e : row)
            if (e < 0) throw std::invalid_argument("perron_bound: negative entry");
    }
    for (const auto& x : v)
        if (x <= 0) throw std::invalid_argument("perron_bound: test vector must be positive");
    Rat best(0);
    for (size_t i = 0; i < t; ++i) {
        Rat s(0);
        for (size_t j = 0; j < t; ++j) s += a[i][j] * v[j];
        Rat ratio = s / v[i];
        if (ratio > best) best = ratio;
    }
    return best;
}

std::vector<Rat> find_test_vector(const std::vector<std::vector<Rat>>& a, int iterations) {
    const size_t t = a.size();
    std::vector<std::vector<double>> ad(t, std::vector<double>(t));
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) ad[i][j] = a[i][j].get_d();
    std::vector<double> v(t, 1.0), w(t);
    for (int it = 0; it < iterations; ++it) {
        double norm = 0;
        for (size_t i = 0; i < t; ++i) {
            w[i] = 0;
            for (size_t j = 0; j < t; ++j) w[i] += ad[i][j] * v[j];
            norm = std::max(norm, w[i]);
        }
        if (norm == 0) break;  // nilpotent-ish; all-ones works
        // keep isolated coordinates alive so positivity survives
        for (size_t i = 0; i < t; ++i) v[i] = std::max(w[i] / norm, 1e-12);
    }
    std::vector<Rat> out(t);
    const long denom = 1'000'000;
    for (size_t i = 0; i < t; ++i) {
        double inflated = v[i] * 1.01;  // margin before rationalizing
        long num = std::lround(inflated * static_cast<double>(denom));
        if (num < 1) num = 1;
        out[i] = Rat(num, denom);
        out[i].canonicalize();
    }
    return out;
}

}  // namespace ssmc
