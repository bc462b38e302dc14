#include "ssmc/wsm.hpp"

#include <algorithm>
#include <deque>

#include "ssmc/perron.hpp"

namespace ssmc {

namespace {

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

GridVector shifted(const GridVector& x, std::int64_t units) {
    GridVector out = x;
    const std::int64_t hi = pow10(x.scale).get_si();
    for (auto& n : out.num) n = std::clamp<std::int64_t>(n + units, 0, hi);
    return out;
}

bool strictly_less(const GridVector& a, const GridVector& b) { return lt_strict(a, b); }

struct ChainCheck {
    bool ok = false;
    std::string first_violation;
};

ChainCheck check_chains(const Recurrence& rec, const Cuboid& left, const Cuboid& right) {
    const GridVector f_rr = rec.eval_down(right.hi);
    const GridVector f_rl = rec.eval_up(right.lo);
    const GridVector f_lr = rec.eval_down(left.hi);
    const GridVector f_ll = rec.eval_up(left.lo);
    if (!strictly_less(left.lo, f_rr)) return {false, "x_LL < Fdown(x_RR)"};
    if (!strictly_less(f_rr, f_rl)) return {false, "Fdown(x_RR) < Fup(x_RL)"};
    if (!strictly_less(f_rl, left.hi)) return {false, "Fup(x_RL) < x_LR"};
    if (!strictly_less(right.lo, f_lr)) return {false, "x_RL < Fdown(x_LR)"};
    if (!strictly_less(f_lr, f_ll)) return {false, "Fdown(x_LR) < Fup(x_LL)"};
    if (!strictly_less(f_ll, right.hi)) return {false, "Fup(x_LL) < x_RR"};
    if (!left.disjoint(right)) return {false, "cuboids not disjoint"};
    return {true, {}};
}

}  // namespace

std::string matrix_content_id(const BranchingMatrix& m) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv64(matrix_to_json(m))));
    return std::string(buf);
}

WsmCertifyResult wsm_certify(const BranchingMatrix& core, const Activity& lambda,
                             const WsmOptions& opts) {
    Recurrence rec(core, lambda);
    const int t = rec.types();
    bool stable = false;
    GridVector x_l = rec.iterate_to_cycle(GridVector::zeros(t, opts.scale), opts.pairs,
                                          opts.pair_cap, Recurrence::First::up, &stable);
    if (!stable)
        return CertifyFailure{"alternating iteration did not stabilize within " +
                              std::to_string(opts.pair_cap) + " pairs"};
    GridVector x_r = rec.eval_up(x_l);
    if (rec.eval_down(x_r) != x_l)
        return CertifyFailure{"rounded 2-cycle inconsistent: Fdown(x_R) != x_L"};

    // invariance of C(x_L, x_R) under F, checked in exact rationals
    const auto xl_rat = x_l.to_rats();
    const auto xr_rat = x_r.to_rats();
    const auto f_xr = rec.eval_exact(xr_rat);
    const auto f_xl = rec.eval_exact(xl_rat);
    for (int i = 0; i < t; ++i) {
        if (!(xl_rat[i] <= f_xr[i])) return CertifyFailure{"chain x_L <= F(x_R) fails"};
        if (!(f_xl[i] <= xr_rat[i])) return CertifyFailure{"chain F(x_L) <= x_R fails"};
    }

    const auto majorant = jacobian_majorant(core);
    const auto m_at_xr = majorant.eval(xr_rat);
    const auto v = find_test_vector(m_at_xr);
    const Rat bound = lambda.lambda * perron_bound(m_at_xr, v);
    if (!(bound < 1))
        return CertifyFailure{"contraction bound " + rat_to_string(bound) + " >= 1"};

    WsmHoldsCert cert;
    cert.matrix_id = matrix_content_id(core);
    cert.lambda = lambda.lambda;
    cert.scale = opts.scale;
    cert.pairs = opts.pairs;
    cert.x_left = std::move(x_l);
    cert.x_right = std::move(x_r);
    cert.test_vector = v;
    cert.bound = bound;
    return cert;
}

WsmRefuteResult wsm_refute_cuboids(const BranchingMatrix& core, const Activity& lambda,
                                   const Cuboid& left, const Cuboid& right) {
    left.validate();
    right.validate();
    Recurrence rec(core, lambda);
    const auto chk = check_chains(rec, left, right);
    if (!chk.ok) return CertifyFailure{"chain inequality failed: " + chk.first_violation};
    WsmFailsCert cert;
    cert.matrix_id = matrix_content_id(core);
    cert.lambda = lambda.lambda;
    cert.scale = left.lo.scale;
    cert.left = left;
    cert.right = right;
    return cert;
}

WsmRefuteResult wsm_refute_seeds(const BranchingMatrix& core, const Activity& lambda,
                                 const GridVector& seed_left, const GridVector& seed_right,
                                 int slack_units) {
    Cuboid left{shifted(seed_left, -slack_units), shifted(seed_left, slack_units)};
    Cuboid right{shifted(seed_right, -slack_units), shifted(seed_right, slack_units)};
    return wsm_refute_cuboids(core, lambda, left, right);
}

WsmRefuteResult wsm_refute(const BranchingMatrix& core, const Activity& lambda,
                           const RefuteOptions& opts) {
    Recurrence rec(core, lambda);
    const int t = rec.types();
    GridVector seed_l = rec.iterate_to_cycle(GridVector::zeros(t, opts.scale), opts.seed_pairs,
                                             opts.seed_cap, Recurrence::First::up, nullptr);
    GridVector seed_r = rec.eval_up(seed_l);

    const auto g = opts.slack_units;
    Cuboid left{shifted(seed_l, -g), shifted(seed_l, g)};
    Cuboid right{shifted(seed_r, -g), shifted(seed_r, g)};
    for (int round = 0; round < opts.max_rounds; ++round) {
        Cuboid nright{shifted(rec.eval_down(left.hi), -g), shifted(rec.eval_up(left.lo), g)};
        Cuboid nleft{shifted(rec.eval_down(right.hi), -g), shifted(rec.eval_up(right.lo), g)};
        if (!leq(nleft.lo, nleft.hi) || !leq(nright.lo, nright.hi))
            return CertifyFailure{"box iteration collapsed (no period-2 separation)"};
        const bool fixed = nleft.lo == left.lo && nleft.hi == left.hi &&
                           nright.lo == right.lo && nright.hi == right.hi;
        left = nleft;
        right = nright;
        if (fixed) break;
    }
    return wsm_refute_cuboids(core, lambda, left, right);
}

std::optional<std::string> recheck_wsm_holds(const BranchingMatrix& core, const WsmHoldsCert& c) {
    if (c.matrix_id != matrix_content_id(core)) return "matrix id mismatch";
    Activity lambda(c.lambda);
    Recurrence rec(core, lambda);
    const int t = rec.types();
    if (c.x_left.size() != t || c.x_right.size() != t) return "certificate dimension mismatch";
    bool stable = false;
    GridVector x_l = rec.iterate_to_cycle(GridVector::zeros(t, c.scale), c.pairs, c.pairs * 100,
                                          Recurrence::First::up, &stable);
    if (!stable || x_l != c.x_left) return "x_L does not reproduce from the stated iteration";
    if (rec.eval_up(c.x_left) != c.x_right) return "x_R != Fup(x_L)";
    const auto xl = c.x_left.to_rats(), xr = c.x_right.to_rats();
    const auto f_xr = rec.eval_exact(xr), f_xl = rec.eval_exact(xl);
    for (int i = 0; i < t; ++i) {
        if (!(xl[i] <= f_xr[i])) return "chain x_L <= F(x_R) fails";
        if (!(f_xl[i] <= xr[i])) return "chain F(x_L) <= x_R fails";
    }
    for (const auto& vi : c.test_vector)
        if (!(vi > 0)) return "test vector not strictly positive";
    const auto m_at_xr = jacobian_majorant(core).eval(xr);
    const Rat bound = lambda.lambda * perron_bound(m_at_xr, c.test_vector);
    if (bound != c.bound) return "stored bound does not match recomputation";
    if (!(bound < 1)) return "contraction bound >= 1";
    return std::nullopt;
}

std::optional<std::string> recheck_wsm_fails(const BranchingMatrix& core, const WsmFailsCert& c) {
    if (c.matrix_id != matrix_content_id(core)) return "matrix id mismatch";
    Activity lambda(c.lambda);
    Recurrence rec(core, lambda);
    if (c.left.lo.size() != rec.types()) return "certificate dimension mismatch";
    c.left.validate();
    c.right.validate();
    const auto chk = check_chains(rec, c.left, c.right);
    if (!chk.ok) return "chain inequality failed: " + chk.first_violation;
    return std::nullopt;
}

ThresholdEstimate threshold_estimate(const BranchingMatrix& core, const Rat& lambda_lo,
                                     const Rat& lambda_hi, const Rat& tol,
                                     const ThresholdOptions& opts) {
    if (!(lambda_lo < lambda_hi)) throw std::invalid_argument("need lambda_lo < lambda_hi");
    ThresholdEstimate est{lambda_lo, lambda_hi, false};

    auto probe = [&](const Rat& lam) -> int {  // +1 holds, -1 fails, 0 undecided
        Activity a(lam);
        if (std::holds_alternative<WsmHoldsCert>(wsm_certify(core, a, opts.certify))) return 1;
        if (std::holds_alternative<WsmFailsCert>(wsm_refute(core, a, opts.refute))) return -1;
        return 0;
    };

    while (est.upper - est.lower > tol) {
        const Rat mid = (est.lower + est.upper) / 2;
        int r = probe(mid);
        if (r == 0) {
            // try off-center probes before giving up on this interval
            const Rat q1 = est.lower + (est.upper - est.lower) / 4;
            const Rat q3 = est.lower + 3 * (est.upper - est.lower) / 4;
            if (probe(q1) == 1) {
                est.lower = q1;
                continue;
            }
            if (probe(q3) == -1) {
                est.upper = q3;
                continue;
            }
            est.widened = true;
            break;
        }
        if (r > 0)
            est.lower = mid;
        else
            est.upper = mid;
    }
    return est;
}

}  // namespace ssmc
