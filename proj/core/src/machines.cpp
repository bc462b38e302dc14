#include "ssmc/machines.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace ssmc {

namespace {

BranchingMatrix from_rules(const std::vector<std::pair<std::string, std::vector<std::string>>>& rules) {
    std::map<std::string, int> idx;
    BranchingMatrix m;
    m.t = static_cast<int>(rules.size());
    for (int i = 0; i < m.t; ++i) {
        idx[rules[i].first] = i;
        m.labels.push_back(rules[i].first);
    }
    m.rows.assign(m.t, std::vector<int>(m.t, 0));
    for (int i = 0; i < m.t; ++i)
        for (const auto& target : rules[i].second) m.rows[i][idx.at(target)]++;
    m.root = idx.at("O");
    m.transient = compute_transient_types(m);
    m.validate();
    return m;
}

}  // namespace

BranchingMatrix build_named_machine(const std::string& name) {
    if (name == "D_H") {
        return from_rules({
            {"O", {"N", "E", "W"}},
            {"N", {"N", "E", "W"}},
            {"E", {"N", "E"}},
            {"W", {"N", "W"}},
        });
    }
    if (name == "D_G") {
        return from_rules({
            {"O", {"N", "E", "W"}},
            {"N", {"NN", "NE", "NW"}},
            {"E", {"EN", "EE"}},
            {"W", {"WN", "WW"}},
            {"NN", {"NN", "NE", "NW"}},
            {"NW", {"WN", "WW"}},
            {"NE", {"EN", "EE"}},
            {"WW", {"WN", "WW"}},
            {"EE", {"EN", "EE"}},
            {"WN", {"NW", "NN"}},
            {"EN", {"NE", "NN"}},
        });
    }
    if (name == "D_prime") {
        return from_rules({
            {"O", {"N", "E", "W"}},
            {"N", {"E", "W", "NN"}},
            {"E", {"N", "E"}},
            {"W", {"N", "W"}},
            {"NN", {"NN", "NNE", "NNW"}},
            {"NNE", {"N", "NEE"}},
            {"NEE", {"N", "E", "EES"}},
            {"EES", {"ESE"}},
            {"ESE", {"SEE"}},
            {"SEE", {"EEN"}},
            {"EEN", {"N", "E"}},
            {"NNW", {"N", "NWW"}},
            {"NWW", {"N", "W", "WWS"}},
            {"WWS", {"WSW"}},
            {"WSW", {"SWW"}},
            {"SWW", {"WWN"}},
            {"WWN", {"N", "W"}},
        });
    }
    throw std::invalid_argument("unknown machine: " + name +
                                " (expected D_H, D_G, or D_prime)");
}

}  // namespace ssmc
