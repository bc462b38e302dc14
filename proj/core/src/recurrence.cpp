#include "ssmc/recurrence.hpp"

#include <stdexcept>

namespace ssmc {

Recurrence::Recurrence(const BranchingMatrix& m, const Activity& lambda) : lambda_(lambda) {
    m.validate();
    if (!m.transient.empty())
        throw std::invalid_argument("recurrence expects a matrix with transient types dropped");
    rows_.reserve(m.t);
    for (int i = 0; i < m.t; ++i) rows_.push_back(m.expanded_row(i));
}

Rat Recurrence::eval_exact_row(const std::vector<int>& row, const std::vector<Rat>& x) const {
    Rat prod(1);
    for (int j : row) prod *= x[j];
    Rat denom = 1 + lambda_.lambda * prod;
    Rat r = Rat(1) / denom;
    r.canonicalize();
    return r;
}

std::vector<Rat> Recurrence::eval_exact(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != types())
        throw std::invalid_argument("eval_exact: dimension mismatch");
    std::vector<Rat> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(eval_exact_row(row, x));
    return out;
}

GridVector Recurrence::eval_rounded(const GridVector& x, bool up) const {
    if (x.size() != types()) throw std::invalid_argument("eval: dimension mismatch");
    const Int S = pow10(x.scale);
    const Int& p = lambda_.lambda.get_num();
    const Int& q = lambda_.lambda.get_den();
    GridVector out;
    out.scale = x.scale;
    out.num.resize(x.size());
    Int prod, numer, denom, scaled, res;
    for (size_t i = 0; i < rows_.size(); ++i) {
        // F_i = q*S^d / (q*S^d + p * prod n_j), then floor/ceil of F_i * S.
        prod = 1;
        for (int j : rows_[i]) prod *= x.num[j];
        numer = q;
        for (size_t k = 0; k < rows_[i].size(); ++k) numer *= S;
        denom = numer + p * prod;
        scaled = numer * S;
        if (up)
            mpz_cdiv_q(res.get_mpz_t(), scaled.get_mpz_t(), denom.get_mpz_t());
        else
            mpz_fdiv_q(res.get_mpz_t(), scaled.get_mpz_t(), denom.get_mpz_t());
        out.num[i] = res.get_si();
    }
    return out;
}

GridVector Recurrence::eval_down(const GridVector& x) const { return eval_rounded(x, false); }
GridVector Recurrence::eval_up(const GridVector& x) const { return eval_rounded(x, true); }

GridVector Recurrence::iterate_alternating(const GridVector& start, long n, First first) const {
    GridVector x = start;
    for (long k = 0; k < n; ++k) {
        if (first == First::up) {
            x = eval_up(x);
            x = eval_down(x);
        } else {
            x = eval_down(x);
            x = eval_up(x);
        }
    }
    return x;
}

GridVector Recurrence::iterate_to_cycle(const GridVector& start, long min_pairs, long cap,
                                        First first, bool* stable) const {
    GridVector x = start;
    long k = 0;
    for (; k < min_pairs; ++k) x = iterate_alternating(x, 1, first);
    for (; k < cap; ++k) {
        GridVector next = iterate_alternating(x, 1, first);
        if (next == x) {
            if (stable) *stable = true;
            return x;
        }
        x = next;
    }
    if (stable) *stable = false;
    return x;
}

std::vector<Rat> finite_tree_marginal(const BranchingMatrix& m, const Activity& lambda, int depth,
                                      Boundary boundary, std::int64_t max_total_bits) {
    if (depth < 0) throw std::invalid_argument("negative depth");
    BranchingMatrix core = m.transient.empty() ? m : m.drop_transient();
    Recurrence rec(core, lambda);
    const int t = rec.types();
    std::vector<Rat> x(t);
    for (int i = 0; i < t; ++i) {
        switch (boundary) {
            case Boundary::odd: x[i] = Rat(0); break;
            case Boundary::even: x[i] = Rat(1); break;
            case Boundary::free_boundary: x[i] = Rat(1) / (1 + lambda.lambda); break;
        }
    }
    for (int level = 0; level < depth; ++level) {
        x = rec.eval_exact(x);
        std::int64_t bits = 0;
        for (const auto& r : x)
            bits += static_cast<std::int64_t>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2)) +
                    static_cast<std::int64_t>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
        if (bits > max_total_bits)
            throw ResourceLimitError("finite_tree_marginal: numerator size cap of " +
                                     std::to_string(max_total_bits) + " bits exceeded at depth " +
                                     std::to_string(level + 1));
    }
    return x;
}

}  // namespace ssmc
