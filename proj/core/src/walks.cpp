#include "ssmc/walks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace ssmc {

char direction_char(Direction d) {
    return "NESW"[static_cast<int>(d)];
}

Ordering Ordering::from_permutation(const std::array<Direction, 4>& smallest_first) {
    Ordering o;
    std::array<bool, 4> seen{};
    for (int r = 0; r < 4; ++r) {
        const int d = static_cast<int>(smallest_first[r]);
        o.rank[d] = static_cast<std::uint8_t>(r);
        seen[d] = true;
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("ordering permutation misses a direction");
    return o;
}

void Ordering::validate() const {
    std::array<bool, 4> seen{};
    for (auto r : rank) {
        if (r > 3 || seen[r]) throw std::invalid_argument("invalid direction ordering");
        seen[r] = true;
    }
}

namespace {

using Window = std::vector<Direction>;
using Pt = std::pair<int, int>;

Pt step(Pt p, Direction d) {
    return {p.first + kDirVec[static_cast<int>(d)].first,
            p.second + kDirVec[static_cast<int>(d)].second};
}

// pos[j-1] = position of the vertex j steps back, relative to the walk end.
std::vector<Pt> back_positions(const Window& w) {
    std::vector<Pt> pos;
    pos.reserve(w.size());
    int x = 0, y = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        x -= kDirVec[static_cast<int>(*it)].first;
        y -= kDirVec[static_cast<int>(*it)].second;
        pos.emplace_back(x, y);
    }
    return pos;
}

int l1(Pt a, Pt b) {
    return std::abs(a.first - b.first) + std::abs(a.second - b.second);
}

// Can a continuation of the walk revisit the vertex target_j steps back while
// the cycle length stays <= ell? Continuations are walks of the generated
// tree: self-avoiding, never stepping onto a tracked window vertex while its
// cycle budget is still open (such a step closes there instead).
class ClosableSearch {
  public:
    ClosableSearch(const Window& w, int ell, int target_j)
        : ell_(ell), target_j_(target_j), pos_(back_positions(w)) {
        target_ = pos_[target_j_ - 1];
        budget_ = ell_ - target_j_;
        last_ = w.back();
    }

    bool run() {
        if (budget_ < 1) return false;
        visited_.assign({{0, 0}});
        return dfs({0, 0}, 0, last_, true);
    }

  private:
    bool blocked_window_vertex(Pt p, int time) const {
        for (int j = 1; j <= static_cast<int>(pos_.size()); ++j)
            if (pos_[j - 1] == p) return j + time <= ell_;
        return false;
    }

    bool dfs(Pt cur, int t, Direction lastdir, bool have_last) {
        if (t >= budget_) return false;
        for (int di = 0; di < 4; ++di) {
            const auto d = static_cast<Direction>(di);
            if (have_last && d == opposite(lastdir)) continue;
            const Pt np = step(cur, d);
            const int nt = t + 1;
            if (np == target_) {
                if (target_j_ + nt <= ell_) return true;
                continue;
            }
            if (std::find(visited_.begin(), visited_.end(), np) != visited_.end()) continue;
            if (blocked_window_vertex(np, nt)) continue;
            if (l1(np, target_) > budget_ - nt) continue;
            visited_.push_back(np);
            if (dfs(np, nt, d, true)) return true;
            visited_.pop_back();
        }
        return false;
    }

    int ell_, target_j_, budget_;
    std::vector<Pt> pos_;
    Pt target_;
    Direction last_;
    std::vector<Pt> visited_;
};

bool closable(const Window& w, int ell, int target_j) {
    return ClosableSearch(w, ell, target_j).run();
}

Window prune(Window w, int ell) {
    while (!w.empty() && !closable(w, ell, static_cast<int>(w.size())))
        w.erase(w.begin());
    return w;
}

// The eight lattice symmetries fixing the origin: rotation count + reflection.
Direction transform_dir(Direction d, int rot, bool refl) {
    int x = kDirVec[static_cast<int>(d)].first, y = kDirVec[static_cast<int>(d)].second;
    if (refl) x = -x;
    for (int r = 0; r < rot; ++r) {
        const int nx = -y, ny = x;
        x = nx;
        y = ny;
    }
    for (int i = 0; i < 4; ++i)
        if (kDirVec[i].first == x && kDirVec[i].second == y) return static_cast<Direction>(i);
    throw std::logic_error("unreachable");
}

Window canonical_symmetric(const Window& w) {
    if (w.empty()) return w;
    Window best;
    for (int rot = 0; rot < 4; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
            Window v;
            v.reserve(w.size());
            for (Direction d : w) v.push_back(transform_dir(d, rot, refl != 0));
            if (best.empty() || v < best) best = v;
        }
    }
    return best;
}

std::string window_label(const Window& w) {
    if (w.empty()) return "O";
    std::string s;
    for (Direction d : w) s += direction_char(d);
    return s;
}

struct StepOutcome {
    bool dead = false;
    std::vector<Window> children;  // pre-canonicalization
};

// Children of a window state. A step onto a tracked window vertex closes a
// cycle: occupied closings (first exit ranked before the return side) kill
// the state, unoccupied closings just drop that child.
StepOutcome window_children(const Window& w, int ell, bool trimmed, const Ordering& ord) {
    StepOutcome out;
    const auto pos = back_positions(w);
    const Direction last = w.back();
    for (int di = 0; di < 4; ++di) {
        const auto d = static_cast<Direction>(di);
        if (d == opposite(last)) continue;
        const Pt np = step({0, 0}, d);
        int hit_j = 0;
        for (int j = 1; j <= static_cast<int>(pos.size()); ++j)
            if (pos[j - 1] == np) {
                hit_j = j;
                break;
            }
        if (hit_j > 0) {
            if (trimmed) {
                const Direction d_first = w[w.size() - hit_j];
                const Direction d_last = opposite(d);
                if (ord.rank[static_cast<int>(d_first)] < ord.rank[static_cast<int>(d_last)]) {
                    out.dead = true;
                    out.children.clear();
                    return out;
                }
            }
            continue;
        }
        Window nw = w;
        nw.push_back(d);
        if (static_cast<int>(nw.size()) > ell - 1) nw.erase(nw.begin());
        out.children.push_back(prune(std::move(nw), ell));
    }
    return out;
}

}  // namespace

BranchingMatrix build_cycle_free_matrix(int ell, const CycleFreeOptions& opts) {
    if (ell < 4 || ell % 2 != 0 || ell > 10)
        throw std::invalid_argument("ell must be one of {4, 6, 8, 10}");
    opts.ordering.validate();
    const bool trimmed = opts.trim_boundary;
    const bool quotient = !trimmed && opts.symmetry_quotient;

    auto canon = [&](const Window& w) { return quotient ? canonical_symmetric(w) : w; };

    std::map<Window, StepOutcome> info;
    std::deque<Window> queue;
    const Window origin;
    info[origin] = {};
    queue.push_back(origin);
    while (!queue.empty()) {
        Window w = queue.front();
        queue.pop_front();
        StepOutcome oc;
        if (w.empty()) {
            for (int di = 0; di < 4; ++di)
                oc.children.push_back(prune({static_cast<Direction>(di)}, ell));
        } else {
            oc = window_children(w, ell, trimmed, opts.ordering);
        }
        for (auto& c : oc.children) c = canon(c);
        info[w] = oc;
        for (const auto& c : oc.children) {
            if (!info.count(c)) {
                if (static_cast<std::int64_t>(info.size()) >= opts.state_cap)
                    throw ResourceLimitError("cycle-free state cap of " +
                                             std::to_string(opts.state_cap) + " states exceeded");
                info[c] = {};
                queue.push_back(c);
            }
        }
    }

    // Keep live states reachable from the origin through live states only.
    std::map<Window, int> index;
    std::deque<Window> bfs;
    std::vector<Window> order;
    bfs.push_back(origin);
    index[origin] = 0;
    order.push_back(origin);
    while (!bfs.empty()) {
        Window w = bfs.front();
        bfs.pop_front();
        for (const auto& c : info[w].children) {
            if (info[c].dead || index.count(c)) continue;
            index[c] = static_cast<int>(order.size());
            order.push_back(c);
            bfs.push_back(c);
        }
    }
    // Deterministic type order: by (length, content), origin first.
    std::vector<Window> sorted_states(order.begin(), order.end());
    std::sort(sorted_states.begin(), sorted_states.end(), [](const Window& a, const Window& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    index.clear();
    for (int i = 0; i < static_cast<int>(sorted_states.size()); ++i) index[sorted_states[i]] = i;

    BranchingMatrix m;
    m.t = static_cast<int>(sorted_states.size());
    m.rows.assign(m.t, std::vector<int>(m.t, 0));
    for (const auto& w : sorted_states) {
        const int i = index[w];
        for (const auto& c : info[w].children) {
            auto it = index.find(c);
            if (it != index.end()) m.rows[i][it->second]++;
        }
        m.labels.push_back(window_label(w));
    }
    m.root = index[origin];
    m.transient = compute_transient_types(m);
    m.validate();
    return m;
}

std::set<std::string> machine_paths(const BranchingMatrix& m, int depth, std::int64_t node_cap) {
    if (m.labels.empty()) throw std::invalid_argument("machine_paths requires labels");
    std::set<std::string> out;
    std::int64_t nodes = 0;
    auto rec = [&](auto&& self, int type, int d, std::string& prefix) -> void {
        if (d >= depth) return;
        for (int j = 0; j < m.t; ++j) {
            if (m.rows[type][j] == 0) continue;
            if (m.rows[type][j] > 1)
                throw std::invalid_argument("machine_paths requires direction-deterministic rows");
            if (++nodes > node_cap) throw ResourceLimitError("machine_paths node cap exceeded");
            prefix.push_back(m.labels[j].back());
            out.insert(prefix);
            self(self, j, d + 1, prefix);
            prefix.pop_back();
        }
    };
    std::string prefix;
    rec(rec, m.root, 0, prefix);
    return out;
}

}  // namespace ssmc
