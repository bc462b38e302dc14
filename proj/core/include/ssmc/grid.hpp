#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssmc/rational.hpp"

namespace ssmc {

// Point of the decimal grid S = {0, 10^-s, 2*10^-s, ..., 1}.
struct GridScalar {
    std::int64_t num = 0;  // value = num * 10^-s
    int scale = 7;

    Rat to_rat() const;
    std::string to_string() const;  // fixed point with exactly `scale` digits
    auto operator<=>(const GridScalar&) const = default;
};

GridScalar grid_scalar_from_string(const std::string& s, int scale);

// Per-type grid values, indexed by the recurrent types of a matrix.
struct GridVector {
    int scale = 7;
    std::vector<std::int64_t> num;

    static GridVector zeros(int n, int scale);
    static GridVector ones(int n, int scale);

    int size() const { return static_cast<int>(num.size()); }
    Rat coord(int i) const;
    std::vector<Rat> to_rats() const;
    std::vector<std::string> to_strings() const;

    bool operator==(const GridVector&) const = default;
};

GridVector grid_vector_from_strings(const std::vector<std::string>& v, int scale);

bool leq(const GridVector& a, const GridVector& b);
bool lt_strict(const GridVector& a, const GridVector& b);

// Coordinate-wise box [lo, hi] on the grid.
struct Cuboid {
    GridVector lo, hi;

    void validate() const;  // lo <= hi, matching scales/sizes
    bool disjoint(const Cuboid& other) const;
};

}  // namespace ssmc
