#include "ssmc/grid.hpp"

#include <stdexcept>

namespace ssmc {

Rat GridScalar::to_rat() const {
    Rat r(Int(num), pow10(scale));
    r.canonicalize();
    return r;
}

std::string GridScalar::to_string() const {
    return rat_to_fixed(to_rat(), scale);
}

GridScalar grid_scalar_from_string(const std::string& s, int scale) {
    const Rat r = rat_from_string(s);
    Rat scaled = r * Rat(pow10(scale));
    scaled.canonicalize();
    if (scaled.get_den() != 1)
        throw ParseError("not a grid value at scale " + std::to_string(scale) + ": " + s);
    if (scaled < 0 || scaled > Rat(pow10(scale)))
        throw ParseError("grid value out of [0,1]: " + s);
    return GridScalar{static_cast<std::int64_t>(scaled.get_num().get_si()), scale};
}

GridVector GridVector::zeros(int n, int scale) {
    GridVector v;
    v.scale = scale;
    v.num.assign(n, 0);
    return v;
}

GridVector GridVector::ones(int n, int scale) {
    GridVector v;
    v.scale = scale;
    v.num.assign(n, pow10(scale).get_si());
    return v;
}

Rat GridVector::coord(int i) const {
    Rat r(Int(num[i]), pow10(scale));
    r.canonicalize();
    return r;
}

std::vector<Rat> GridVector::to_rats() const {
    std::vector<Rat> out;
    out.reserve(num.size());
    for (int i = 0; i < size(); ++i) out.push_back(coord(i));
    return out;
}

std::vector<std::string> GridVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(num.size());
    for (int i = 0; i < size(); ++i) out.push_back(GridScalar{num[i], scale}.to_string());
    return out;
}

GridVector grid_vector_from_strings(const std::vector<std::string>& v, int scale) {
    GridVector out;
    out.scale = scale;
    out.num.reserve(v.size());
    for (const auto& s : v) out.num.push_back(grid_scalar_from_string(s, scale).num);
    return out;
}

bool leq(const GridVector& a, const GridVector& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a.num[i] > b.num[i]) return false;
    return true;
}

bool lt_strict(const GridVector& a, const GridVector& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a.num[i] >= b.num[i]) return false;
    return true;
}

void Cuboid::validate() const {
    if (lo.scale != hi.scale || lo.size() != hi.size())
        throw std::invalid_argument("cuboid endpoints disagree in shape");
    if (!leq(lo, hi)) throw std::invalid_argument("cuboid has lo > hi");
}

bool Cuboid::disjoint(const Cuboid& other) const {
    for (int i = 0; i < lo.size(); ++i)
        if (hi.num[i] < other.lo.num[i] || other.hi.num[i] < lo.num[i]) return true;
    return false;
}

}  // namespace ssmc
