#pragma once

// The named series and class families of the theta basis: beta, the Mischenko
// logarithm and [CP^n], the dual classes v_n and w_n, the decomposition of a
// class from its Chern numbers, and Adams-Novikov operations.

#include "thetacob/graded_poly.hpp"
#include "thetacob/series.hpp"
#include "thetacob/symfun.hpp"

namespace thetacob {

using PolySeries = TruncSeries<GradedPoly>;

inline GradedPoly theta(int n) { return GradedPoly::gen(n); }

/// beta(z) = z + sum_{n=1}^{N-1} t_n z^{n+1}/(n+1)!, truncated at z^N.
inline PolySeries beta(int order) {
    if (order < 2) throw std::invalid_argument("beta needs truncation order >= 2");
    PolySeries b(order);
    b[1] = GradedPoly(1);
    for (int n = 1; n + 1 <= order; ++n) b[n + 1] = theta(n) / Rat(factorial(n + 1));
    b.set_grade_shift(1);
    return b;
}

/// beta^{-1}(u) = u + sum [CP^n] u^{n+1}/(n+1), to u^{N+1}.
inline PolySeries mischenko_log(int max_weight) {
    PolySeries l = revert(beta(max_weight + 1));
    l.set_grade_shift(1);
    return l;
}

/// cp[n] = [CP^n] for 0 <= n <= N.
inline std::vector<GradedPoly> cp_classes(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("negative weight");
    std::vector<GradedPoly> cp{GradedPoly(1)};
    if (max_weight == 0) return cp;
    PolySeries l = mischenko_log(max_weight);
    for (int n = 1; n <= max_weight; ++n) cp.push_back(l[n + 1] * Rat(n + 1));
    return cp;
}

/// Q_v(z) = (beta(z)/z)^{-1} = 1 + sum (-1)^n v_n z^n/(n+1)!.
inline PolySeries qv_series(int max_weight) {
    return inverse(beta(max_weight + 1).shifted_down(1));
}

/// v[n] for 0 <= n <= N, read off Q_v.
inline std::vector<GradedPoly> v_classes(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("negative weight");
    std::vector<GradedPoly> v{GradedPoly(1)};
    if (max_weight == 0) return v;
    PolySeries q = qv_series(max_weight);
    for (int n = 1; n <= max_weight; ++n) {
        Rat scale = Rat(factorial(n + 1));
        if (n % 2) scale = -scale;
        v.push_back(q[n] * scale);
    }
    return v;
}

namespace detail {

/// det of the n x n matrix e_{1-i+j} by Laplace expansion along rows, minors
/// memoised by the set of columns still available.
inline GradedPoly jacobi_trudi_det(int n, const std::vector<GradedPoly>& e) {
    auto entry = [&](int i, int j) -> GradedPoly {
        int k = 1 - i + j;
        if (k < 0) return GradedPoly();
        return e[k];
    };
    std::map<unsigned, GradedPoly> memo;
    auto det = [&](auto&& self, int row, unsigned cols) -> GradedPoly {
        if (row == n) return GradedPoly(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        GradedPoly total;
        int sign_pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            GradedPoly a = entry(row, j);
            if (!a.is_zero()) {
                GradedPoly term = a * self(self, row + 1, cols & ~(1u << j));
                if (sign_pos % 2) total -= term;
                else total += term;
            }
            ++sign_pos;
        }
        memo.emplace(cols, total);
        return total;
    };
    return det(det, 0, n >= 32 ? ~0u : (1u << n) - 1);
}

}  // namespace detail

/// v[n] = (n+1)! h_n with h_n = det(e_{1-i+j}) and e_k = t_k/(k+1)!.
inline std::vector<GradedPoly> v_classes_jacobi_trudi(int max_weight) {
    if (max_weight > 24) throw std::invalid_argument("determinant route limited to weight 24");
    std::vector<GradedPoly> e{GradedPoly(1)};
    for (int k = 1; k <= max_weight; ++k) e.push_back(theta(k) / Rat(factorial(k + 1)));
    std::vector<GradedPoly> v{GradedPoly(1)};
    for (int n = 1; n <= max_weight; ++n) v.push_back(detail::jacobi_trudi_det(n, e) * Rat(factorial(n + 1)));
    return v;
}

/// w[n] = n! [z^n] log(beta(z)/z); w[0] = 0.
inline std::vector<GradedPoly> w_classes(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("negative weight");
    std::vector<GradedPoly> w{GradedPoly()};
    if (max_weight == 0) return w;
    PolySeries l = log(beta(max_weight + 1).shifted_down(1));
    for (int n = 1; n <= max_weight; ++n) w.push_back(l[n] * Rat(factorial(n)));
    return w;
}

/// q_n: denominator of (n+1) B_n.
inline BigInt q_multiplier(int n) {
    return denominator_of(Rat(n + 1) * bernoulli(n));
}

/// Least common denominator of the coefficients.
inline BigInt denominator_lcm(const GradedPoly& p) {
    BigInt l = 1;
    for (const auto& [m, c] : p.terms()) {
        BigInt d = denominator_of(c);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

struct DualClassTable {
    std::vector<GradedPoly> v, w, cp;
    std::vector<BigInt> qn;
    std::vector<BigInt> w_multiplier;
};

/// Both v routes are computed and must agree.
inline DualClassTable dual_class_table(int max_weight) {
    DualClassTable t;
    t.v = v_classes(max_weight);
    if (t.v != v_classes_jacobi_trudi(max_weight))
        throw std::logic_error("series and determinant routes for v_n disagree");
    t.w = w_classes(max_weight);
    t.cp = cp_classes(max_weight);
    for (int n = 0; n <= max_weight; ++n) {
        t.qn.push_back(q_multiplier(n));
        t.w_multiplier.push_back(denominator_lcm(t.w[n]));
    }
    return t;
}

/// y_n = v_n/(n+1) rewritten in x_k = t_k/(k+1); the result uses t_k to name x_k.
inline GradedPoly hurwitz_form(const GradedPoly& v, int n) {
    return substitute_poly(v, [](int k) { return theta(k) * Rat(k + 1); }) / Rat(n + 1);
}

// ---------------------------------------------------------------------------
// Chern-number data of reference manifolds

/// Theta^n in the normal frame: (n+1)! on (n), zero elsewhere.
inline ChernVector theta_normal_vector(int n) {
    ChernVector c = constant_vector(n, Frame::normal, ChernBasis::monomial, Rat(0));
    c.values[Partition{n}] = Rat(factorial(n + 1));
    return c;
}

/// Theta^n in the tangent frame and chern-product basis: every product is (-1)^n (n+1)!.
inline ChernVector theta_tangent_vector(int n) {
    Rat value = Rat(factorial(n + 1));
    if (n % 2) value = -value;
    return constant_vector(n, Frame::tangent, ChernBasis::chern_product, value);
}

/// Theta^lambda = prod Theta^{lambda_i} in the normal frame, monomial basis.
inline ChernVector theta_product_normal_vector(const Partition& lambda) {
    ChernVector c = constant_vector(0, Frame::normal, ChernBasis::monomial, Rat(1));
    for (int part : lambda.parts()) c = product_vector(c, theta_normal_vector(part));
    return c;
}

/// CP^n in the tangent frame from the total class (1+z)^{n+1}: m_lambda on
/// n+1 equal roots counts the distinct exponent arrangements.
inline ChernVector cpn_tangent_vector(int n) {
    ChernVector c{n, Frame::tangent, ChernBasis::monomial, {}};
    for (const auto& lambda : partitions_of(n)) {
        if (lambda.length() > n + 1) {
            c.values[lambda] = 0;
            continue;
        }
        BigInt count = factorial(n + 1) / factorial(n + 1 - lambda.length());
        for (const auto& [part, mult] : lambda.multiplicities()) count /= factorial(mult);
        c.values[lambda] = Rat(count);
    }
    return c;
}

/// sum_lambda c^nu_lambda t^lambda/(lambda+1)!, from any frame and basis.
inline GradedPoly decompose(const ChernVector& c) {
    ChernVector nu = converted(c, Frame::normal, ChernBasis::monomial);
    GradedPoly r;
    for (const auto& [lambda, value] : nu.values)
        if (value != 0) r.add_term(lambda, value / Rat(partition_factorial(lambda)));
    return r;
}

/// sum_lambda (-1)^{|lambda|} c_lambda v^lambda/(lambda+1)!, from tangent numbers.
inline GradedPoly decompose_tangent(const ChernVector& c) {
    ChernVector tan = converted(c, Frame::tangent, ChernBasis::monomial);
    auto v = v_classes(tan.weight);
    GradedPoly r;
    for (const auto& [lambda, value] : tan.values) {
        if (value == 0) continue;
        GradedPoly term(value / Rat(partition_factorial(lambda)));
        for (int part : lambda.parts()) term *= v[part];
        r += tan.weight % 2 ? -term : term;
    }
    return r;
}

/// Psi^k(u) = (1/k) beta(k beta^{-1}(u)), to u^N.
inline PolySeries adams_novikov(int k, int order) {
    if (k == 0) throw std::invalid_argument("Adams-Novikov operation needs k != 0");
    PolySeries b = beta(order);
    PolySeries inner = revert(b).scaled(GradedPoly(Rat(k)));
    return compose(b, inner).scaled(GradedPoly(Rat(1) / Rat(k)));
}

/// Grading action t^lambda -> k^{|lambda|} t^lambda.
inline GradedPoly psi_on_class(int k, const GradedPoly& p) {
    if (k == 0) throw std::invalid_argument("Adams-Novikov operation needs k != 0");
    return p.map_by_weight([k](int w) { return rpow(Rat(k), w); });
}

}  // namespace thetacob
