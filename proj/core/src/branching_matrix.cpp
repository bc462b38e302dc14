#include "ssmc/branching_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace ssmc {

int BranchingMatrix::degree(int i) const {
    return std::accumulate(rows[i].begin(), rows[i].end(), 0);
}

bool BranchingMatrix::is_transient(int i) const {
    return std::binary_search(transient.begin(), transient.end(), i);
}

std::vector<int> BranchingMatrix::recurrent_types() const {
    std::vector<int> out;
    for (int i = 0; i < t; ++i)
        if (!is_transient(i)) out.push_back(i);
    return out;
}

std::vector<int> BranchingMatrix::expanded_row(int i) const {
    std::vector<int> out;
    for (int j = 0; j < t; ++j)
        for (int c = 0; c < rows[i][j]; ++c) out.push_back(j);
    return out;
}

BranchingMatrix BranchingMatrix::drop_transient(std::vector<int>* old_index) const {
    const auto keep = recurrent_types();
    BranchingMatrix r;
    r.t = static_cast<int>(keep.size());
    r.rows.resize(r.t);
    for (int a = 0; a < r.t; ++a) {
        r.rows[a].resize(r.t);
        for (int b = 0; b < r.t; ++b) r.rows[a][b] = rows[keep[a]][keep[b]];
        if (!labels.empty()) r.labels.push_back(labels[keep[a]]);
    }
    if (old_index) *old_index = keep;
    r.validate();
    return r;
}

void BranchingMatrix::validate() const {
    if (t < 0) throw std::invalid_argument("negative type count");
    if (static_cast<int>(rows.size()) != t) throw std::invalid_argument("row count != t");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != t) throw std::invalid_argument("ragged matrix row");
        for (int v : r)
            if (v < 0) throw std::invalid_argument("negative matrix entry");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != t)
        throw std::invalid_argument("label count != t");
    for (int v : transient)
        if (v < 0 || v >= t) throw std::invalid_argument("transient index out of range");
    if (!std::is_sorted(transient.begin(), transient.end()))
        throw std::invalid_argument("transient indices not sorted");
}

std::vector<int> compute_transient_types(const BranchingMatrix& m) {
    const int t = m.t;
    // Tarjan SCC, then mark everything reachable from a cyclic SCC as recurrent.
    std::vector<int> index(t, -1), low(t, 0), comp(t, -1);
    std::vector<char> on_stack(t, 0);
    std::vector<int> stack;
    int next_index = 0, ncomp = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w = 0; w < t; ++w) {
            if (m.rows[v][w] == 0) continue;
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    };
    for (int v = 0; v < t; ++v)
        if (index[v] < 0) strongconnect(v);

    std::vector<int> comp_size(ncomp, 0);
    std::vector<char> comp_cyclic(ncomp, 0);
    for (int v = 0; v < t; ++v) {
        comp_size[comp[v]]++;
        if (m.rows[v][v] > 0) comp_cyclic[comp[v]] = 1;
    }
    for (int c = 0; c < ncomp; ++c)
        if (comp_size[c] > 1) comp_cyclic[c] = 1;

    std::vector<char> recurrent(t, 0);
    std::function<void(int)> mark = [&](int v) {
        if (recurrent[v]) return;
        recurrent[v] = 1;
        for (int w = 0; w < t; ++w)
            if (m.rows[v][w] > 0) mark(w);
    };
    for (int v = 0; v < t; ++v)
        if (comp_cyclic[comp[v]]) mark(v);

    std::vector<int> out;
    for (int v = 0; v < t; ++v)
        if (!recurrent[v]) out.push_back(v);
    return out;
}

std::string matrix_to_json(const BranchingMatrix& m) {
    nlohmann::ordered_json j;
    j["scale"] = "counts";
    j["t"] = m.t;
    j["labels"] = m.labels;
    j["rows"] = m.rows;
    j["transient"] = m.transient;
    return j.dump(2) + "\n";
}

BranchingMatrix matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.value("scale", "") != std::string("counts"))
        throw std::invalid_argument("matrix file: expected scale=\"counts\"");
    BranchingMatrix m;
    m.t = j.at("t").get<int>();
    m.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    m.labels = j.value("labels", std::vector<std::string>{});
    m.transient = j.value("transient", std::vector<int>{});
    std::sort(m.transient.begin(), m.transient.end());
    m.validate();
    return m;
}

}  // namespace ssmc
