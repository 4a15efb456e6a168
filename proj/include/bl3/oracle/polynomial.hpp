#pragma once

// Homogeneous polynomials in x_0..x_3 over F_p, as coefficient vectors over
// the degree-d monomials in graded-lex order (x_0^d first).

#include <array>
#include <cstdint>
#include <vector>

#include "bl3/oracle/field.hpp"
#include "bl3/oracle/linalg.hpp"

namespace bl3::oracle {

using Point = std::array<u64, 4>;
using Exponent = std::array<int, 4>;

inline std::vector<Exponent> monomials(int degree) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    for (int e0 = degree; e0 >= 0; --e0)
        for (int e1 = degree - e0; e1 >= 0; --e1)
            for (int e2 = degree - e0 - e1; e2 >= 0; --e2) out.push_back({e0, e1, e2, degree - e0 - e1 - e2});
    return out;
}

inline std::size_t monomial_count(int degree) {
    if (degree < 0) return 0;
    const std::size_t d = static_cast<std::size_t>(degree);
    return (d + 1) * (d + 2) * (d + 3) / 6;
}

/// Per-point tables of coordinate powers and binomial coefficients mod p,
/// shared by evaluation and derivative rows.
class MonomialEvaluator {
public:
    MonomialEvaluator(int degree, const PrimeField& F) : degree_(degree), F_(F), monos_(monomials(degree)) {
        const auto n = static_cast<std::size_t>(degree + 1);
        binom_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            binom_[i * n] = 1;
            for (std::size_t j = 1; j <= i; ++j)
                binom_[i * n + j] = F.add(binom_[(i - 1) * n + j - 1], j <= i - 1 ? binom_[(i - 1) * n + j] : 0);
        }
    }

    int degree() const { return degree_; }
    const std::vector<Exponent>& basis() const { return monos_; }

    /// Row of the Hasse derivative D^alpha at `pt`: entry for monomial x^beta
    /// is prod_k C(beta_k, alpha_k) pt_k^(beta_k - alpha_k).
    Vector derivative_row(const Exponent& alpha, const Point& pt) const {
        const auto powers = power_table(pt);
        const auto n = static_cast<std::size_t>(degree_ + 1);
        Vector row(monos_.size(), 0);
        for (std::size_t idx = 0; idx < monos_.size(); ++idx) {
            const auto& beta = monos_[idx];
            u64 v = 1;
            for (std::size_t k = 0; k < 4 && v; ++k) {
                if (beta[k] < alpha[k]) {
                    v = 0;
                    break;
                }
                const auto bk = static_cast<std::size_t>(beta[k]), ak = static_cast<std::size_t>(alpha[k]);
                v = F_.mul(v, F_.mul(binom_[bk * n + ak], powers[k][bk - ak]));
            }
            row[idx] = v;
        }
        return row;
    }

    Vector evaluation_row(const Point& pt) const { return derivative_row({0, 0, 0, 0}, pt); }

    u64 evaluate(const Vector& coeffs, const Point& pt) const { return dot(coeffs, evaluation_row(pt), F_); }

    u64 derivative(const Vector& coeffs, const Exponent& alpha, const Point& pt) const {
        return dot(coeffs, derivative_row(alpha, pt), F_);
    }

private:
    std::array<std::vector<u64>, 4> power_table(const Point& pt) const {
        std::array<std::vector<u64>, 4> pw;
        for (std::size_t k = 0; k < 4; ++k) {
            pw[k].resize(static_cast<std::size_t>(degree_ + 1));
            pw[k][0] = 1;
            for (std::size_t e = 1; e < pw[k].size(); ++e) pw[k][e] = F_.mul(pw[k][e - 1], pt[k]);
        }
        return pw;
    }

    int degree_;
    PrimeField F_;
    std::vector<Exponent> monos_;
    std::vector<u64> binom_;
};

}  // namespace bl3::oracle
