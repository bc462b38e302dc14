#include "ssmc/tree_hash.hpp"

#include <algorithm>
#include <vector>

namespace ssmc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

std::uint64_t canonical_tree_hash(const BranchingMatrix& m, int type, int depth) {
    // memo[d][i] = hash of the depth-d tree below a type-i vertex
    std::vector<std::vector<std::uint64_t>> memo(depth + 1,
                                                 std::vector<std::uint64_t>(m.t, 0));
    for (int i = 0; i < m.t; ++i) memo[0][i] = 0x517cc1b727220a95ULL;
    for (int d = 1; d <= depth; ++d) {
        for (int i = 0; i < m.t; ++i) {
            std::vector<std::uint64_t> kids;
            for (int j = 0; j < m.t; ++j)
                for (int c = 0; c < m.rows[i][j]; ++c) kids.push_back(memo[d - 1][j]);
            std::sort(kids.begin(), kids.end());
            std::uint64_t h = 0x2545f4914f6cdd1dULL;
            for (auto k : kids) h = mix(h, k);
            memo[d][i] = h;
        }
    }
    return memo[depth][type];
}

bool trees_match_under_map(const BranchingMatrix& m, const BranchingMatrix& reduced,
                           const std::vector<int>& type_map, int depth) {
    for (int i = 0; i < m.t; ++i)
        if (canonical_tree_hash(m, i, depth) != canonical_tree_hash(reduced, type_map[i], depth))
            return false;
    return true;
}

}  // namespace ssmc
