#include <cstdint>
#include <map>
#include <stdexcept>

#include "ssmc/rational.hpp"
#include "ssmc/walks.hpp"

namespace ssmc {

OrderingField homogeneous(const Ordering& o) {
    o.validate();
    return [o](int, int) { return o; };
}

OrderingField seeded_random_field(std::uint64_t seed) {
    return [seed](int x, int y) {
        // splitmix64 over the packed coordinate, then a Fisher-Yates shuffle
        std::uint64_t z = seed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32 |
                                  static_cast<std::uint32_t>(y));
        auto next = [&z]() {
            z += 0x9e3779b97f4a7c15ULL;
            std::uint64_t w = z;
            w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ULL;
            w = (w ^ (w >> 27)) * 0x94d049bb133111ebULL;
            return w ^ (w >> 31);
        };
        std::array<Direction, 4> perm{Direction::N, Direction::E, Direction::S, Direction::W};
        for (int i = 3; i > 0; --i) std::swap(perm[i], perm[next() % (i + 1)]);
        return Ordering::from_permutation(perm);
    };
}

namespace {

using Pt = std::pair<int, int>;

struct SawEnum {
    int depth;
    const OrderingField& sigma;
    SawTreeOptions opts;
    std::set<std::string> paths;
    std::int64_t nodes = 0;

    std::map<Pt, int> walk_index;           // lattice point -> index of first visit
    std::vector<Direction> walk_steps;      // step i leads from vertex i to i+1
    std::vector<Pt> walk_points;

    SawEnum(int depth, const OrderingField& sigma, const SawTreeOptions& opts)
        : depth(depth), sigma(sigma), opts(opts) {
        walk_points.push_back({0, 0});
        walk_index[{0, 0}] = 0;
    }

    // Does the vertex at the end of the walk survive the boundary assignment,
    // i.e. is no neighboring step an occupied closing?
    bool end_vertex_alive() const {
        const Pt cur = walk_points.back();
        for (int di = 0; di < 4; ++di) {
            const auto d = static_cast<Direction>(di);
            const Pt np{cur.first + kDirVec[di].first, cur.second + kDirVec[di].second};
            auto it = walk_index.find(np);
            if (it == walk_index.end()) continue;
            const int i = it->second;
            if (i == static_cast<int>(walk_steps.size()) - 1) continue;  // parent edge
            const Direction d_first = walk_steps[i];
            const Direction d_last = opposite(d);
            const Ordering ord = sigma(np.first, np.second);
            if (ord.rank[static_cast<int>(d_first)] < ord.rank[static_cast<int>(d_last)])
                return false;
        }
        return true;
    }

    void run() {
        std::string prefix;
        rec(0, prefix);
    }

    void rec(int d, std::string& prefix) {
        if (d >= depth) return;
        const Pt cur = walk_points.back();
        for (int di = 0; di < 4; ++di) {
            const auto dir = static_cast<Direction>(di);
            const Pt np{cur.first + kDirVec[di].first, cur.second + kDirVec[di].second};
            if (walk_index.count(np)) continue;  // closing or backtrack: not a child
            if (std::abs(np.first) > opts.box_radius || std::abs(np.second) > opts.box_radius)
                throw ResourceLimitError("saw enumeration left the configured box");
            if (++nodes > opts.node_cap)
                throw ResourceLimitError("saw enumeration node cap of " +
                                         std::to_string(opts.node_cap) + " exceeded");
            walk_index[np] = static_cast<int>(walk_points.size());
            walk_points.push_back(np);
            walk_steps.push_back(dir);
            if (end_vertex_alive()) {
                prefix.push_back(direction_char(dir));
                paths.insert(prefix);
                rec(d + 1, prefix);
                prefix.pop_back();
            }
            walk_steps.pop_back();
            walk_points.pop_back();
            walk_index.erase(np);
        }
    }
};

}  // namespace

std::set<std::string> enumerate_saw_tree(int depth, const OrderingField& sigma,
                                         const SawTreeOptions& opts) {
    if (depth < 0) throw std::invalid_argument("negative depth");
    if (depth > 2 * opts.box_radius)
        throw std::invalid_argument("depth must be at most twice the box radius");
    SawEnum e(depth, sigma, opts);
    e.run();
    return e.paths;
}

}  // namespace ssmc
