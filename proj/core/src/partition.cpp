#include "ssmc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace ssmc {

Partition Partition::discrete(int t) {
    Partition p;
    p.blocks.reserve(t);
    for (int i = 0; i < t; ++i) p.blocks.push_back({i});
    return p;
}

std::vector<int> Partition::type_map(int t) const {
    std::vector<int> map(t, -1);
    for (int b = 0; b < block_count(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : blocks[b]) {
            if (v < 0 || v >= t) throw std::invalid_argument("partition index out of range");
            if (map[v] != -1) throw std::invalid_argument("partition blocks overlap");
            map[v] = b;
        }
    }
    for (int v = 0; v < t; ++v)
        if (map[v] == -1)
            throw std::invalid_argument("partition does not cover type " + std::to_string(v));
    return map;
}

std::string Partition::to_json() const {
    nlohmann::ordered_json j = blocks;
    return j.dump() + "\n";
}

Partition Partition::from_json(const std::string& text) {
    Partition p;
    p.blocks = nlohmann::json::parse(text).get<std::vector<std::vector<int>>>();
    return p;
}

namespace {

// blocksum[b] = sum of row entries over block b.
std::vector<int> block_sums(const BranchingMatrix& m, const std::vector<int>& map, int row,
                            int nblocks) {
    std::vector<int> s(nblocks, 0);
    for (int j = 0; j < m.t; ++j)
        if (m.rows[row][j]) s[map[j]] += m.rows[row][j];
    return s;
}

}  // namespace

std::optional<ConsistencyViolation> check_consistent(const BranchingMatrix& m,
                                                     const Partition& c) {
    const auto map = c.type_map(m.t);
    const int k = c.block_count();
    for (int b = 0; b < k; ++b) {
        const auto& blk = c.blocks[b];
        const auto ref = block_sums(m, map, blk[0], k);
        for (size_t a = 1; a < blk.size(); ++a) {
            const auto got = block_sums(m, map, blk[a], k);
            for (int tb = 0; tb < k; ++tb)
                if (got[tb] != ref[tb])
                    return ConsistencyViolation{b, blk[0], blk[a], tb};
        }
    }
    return std::nullopt;
}

ReductionResult reduce(const BranchingMatrix& m, const Partition& c) {
    if (auto v = check_consistent(m, c)) {
        throw std::invalid_argument(
            "partition inconsistent: block " + std::to_string(v->block) + " types " +
            std::to_string(v->type_a) + "," + std::to_string(v->type_b) +
            " disagree on block " + std::to_string(v->target_block));
    }
    const auto map = c.type_map(m.t);
    const int k = c.block_count();

    // Deterministic block order: by smallest member.
    std::vector<int> order(k);
    for (int b = 0; b < k; ++b) order[b] = b;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return *std::min_element(c.blocks[a].begin(), c.blocks[a].end()) <
               *std::min_element(c.blocks[b].begin(), c.blocks[b].end());
    });
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[order[i]] = i;

    ReductionResult r;
    r.partition.blocks.resize(k);
    r.type_map.assign(m.t, -1);
    for (int i = 0; i < k; ++i) {
        r.partition.blocks[i] = c.blocks[order[i]];
        std::sort(r.partition.blocks[i].begin(), r.partition.blocks[i].end());
    }
    for (int v = 0; v < m.t; ++v) r.type_map[v] = pos[map[v]];

    r.reduced.t = k;
    r.reduced.rows.assign(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        const int rep = r.partition.blocks[i][0];
        const auto sums = block_sums(m, map, rep, k);
        for (int b = 0; b < k; ++b) r.reduced.rows[i][pos[b]] = sums[b];
    }
    if (!m.labels.empty()) {
        for (int i = 0; i < k; ++i) {
            std::string lbl;
            for (int v : r.partition.blocks[i]) {
                if (!lbl.empty()) lbl += "+";
                lbl += m.labels[v];
            }
            r.reduced.labels.push_back(lbl);
        }
    }
    r.reduced.root = r.type_map[m.root];
    r.reduced.transient = compute_transient_types(r.reduced);
    r.reduced.validate();
    return r;
}

Partition propose_partition(const BranchingMatrix& m, const Activity& lambda,
                            const ProposeOptions& opts) {
    if (opts.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    const double lam = lambda.lambda.get_d();
    std::vector<double> x(m.t, 1.0), nx(m.t);
    for (long it = 0; it < opts.iterations; ++it) {
        for (int i = 0; i < m.t; ++i) {
            double prod = 1.0;
            for (int j = 0; j < m.t; ++j)
                for (int c = 0; c < m.rows[i][j]; ++c) prod *= x[j];
            nx[i] = 1.0 / (1.0 + lam * prod);
        }
        x.swap(nx);
    }
    std::vector<int> idx(m.t);
    for (int i = 0; i < m.t; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] < x[b]; });

    Partition p;
    std::vector<int> cur{idx.empty() ? 0 : idx[0]};
    for (int a = 1; a < m.t; ++a) {
        if (x[idx[a]] - x[idx[a - 1]] <= opts.cluster_tol) {
            cur.push_back(idx[a]);
        } else {
            std::sort(cur.begin(), cur.end());
            p.blocks.push_back(cur);
            cur = {idx[a]};
        }
    }
    if (m.t > 0) {
        std::sort(cur.begin(), cur.end());
        p.blocks.push_back(cur);
    }
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return p;
}

Partition refine_to_consistent(const BranchingMatrix& m, Partition c) {
    while (check_consistent(m, c)) {
        const auto map = c.type_map(m.t);
        const int k = c.block_count();
        Partition next;
        for (const auto& blk : c.blocks) {
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : blk) groups[block_sums(m, map, v, k)].push_back(v);
            for (auto& [sig, members] : groups) next.blocks.push_back(members);
        }
        std::sort(next.blocks.begin(), next.blocks.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        c = std::move(next);
    }
    return c;
}

}  // namespace ssmc
