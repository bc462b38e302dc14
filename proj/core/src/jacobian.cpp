#include "ssmc/jacobian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ssmc/recurrence.hpp"

namespace ssmc {

Rat Monomial::eval(const std::vector<Rat>& x) const {
    if (coeff == 0) return Rat(0);
    Rat r(coeff);
    for (size_t k = 0; k < exps.size(); ++k)
        for (int e = 0; e < exps[k]; ++e) r *= x[k];
    return r;
}

double Monomial::eval_d(const std::vector<double>& x) const {
    if (coeff == 0) return 0.0;
    double r = static_cast<double>(coeff);
    for (size_t k = 0; k < exps.size(); ++k) r *= std::pow(x[k], exps[k]);
    return r;
}

std::string Monomial::to_string() const {
    if (coeff == 0) return "0";
    std::ostringstream os;
    bool first = true;
    if (coeff != 1) {
        os << coeff;
        first = false;
    }
    for (size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        if (!first) os << "*";
        os << "x" << (k + 1);
        if (exps[k] > 1) os << "^" << exps[k];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::vector<std::vector<Rat>> JacobianMajorant::eval(const std::vector<Rat>& y) const {
    std::vector<std::vector<Rat>> out(t, std::vector<Rat>(t, Rat(0)));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) out[i][j] = entries[i][j].eval(y);
    return out;
}

std::vector<std::vector<double>> JacobianMajorant::eval_d(const std::vector<double>& y) const {
    std::vector<std::vector<double>> out(t, std::vector<double>(t, 0.0));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) out[i][j] = entries[i][j].eval_d(y);
    return out;
}

JacobianMajorant jacobianMajorant_impl(const BranchingMatrix& m) {
    if (!m.transient.empty())
        throw std::invalid_argument("jacobian_majorant expects transient types dropped");
    JacobianMajorant mj;
    mj.t = m.t;
    mj.entries.assign(m.t, std::vector<Monomial>(m.t));
    for (int i = 0; i < m.t; ++i) {
        for (int j = 0; j < m.t; ++j) {
            Monomial mono;
            mono.exps.assign(m.t, 0);
            if (m.rows[i][j] == 0) {
                mj.entries[i][j] = std::move(mono);
                continue;
            }
            mono.coeff = m.rows[i][j];
            for (int k = 0; k < m.t; ++k) mono.exps[k] = m.rows[i][k];
            mono.exps[j] -= 1;      // d/dx_j of the product
            mono.exps[i] += 2;      // F_i^2 bounded by the upper coordinate
            mj.entries[i][j] = std::move(mono);
        }
    }
    return mj;
}

JacobianMajorant jacobian_majorant(const BranchingMatrix& m) { return jacobianMajorant_impl(m); }

std::vector<std::vector<Rat>> jacobian_abs_exact(const BranchingMatrix& m, const Activity& lambda,
                                                 const std::vector<Rat>& x) {
    Recurrence rec(m, lambda);
    const auto F = rec.eval_exact(x);
    std::vector<std::vector<Rat>> out(m.t, std::vector<Rat>(m.t, Rat(0)));
    for (int i = 0; i < m.t; ++i) {
        for (int j = 0; j < m.t; ++j) {
            if (m.rows[i][j] == 0) continue;
            Rat dprod(m.rows[i][j]);
            for (int k = 0; k < m.t; ++k) {
                int e = m.rows[i][k] - (k == j ? 1 : 0);
                for (int c = 0; c < e; ++c) dprod *= x[k];
            }
            out[i][j] = lambda.lambda * dprod * F[i] * F[i];
        }
    }
    return out;
}

}  // namespace ssmc
