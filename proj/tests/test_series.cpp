#include "thetacob/multi_series.hpp"
#include "thetacob/series.hpp"

#include <gtest/gtest.h>

using namespace thetacob;

namespace {

using PolySeries = TruncSeries<GradedPoly>;
using RatSeries = TruncSeries<Rat>;

GradedPoly t(int n) { return GradedPoly::gen(n); }

// beta(z) = z + sum t_n z^{n+1}/(n+1)!, built directly from its definition.
PolySeries beta_series(int order) {
    PolySeries b(order);
    if (order >= 1) b[1] = GradedPoly(1);
    for (int n = 1; n + 1 <= order; ++n) b[n + 1] = t(n) / Rat(factorial(n + 1));
    return b;
}

// Lagrange inversion oracle: [u^n] f^{-1}(u) = (1/n) [z^{n-1}] (z/f(z))^n.
PolySeries lagrange_reversion(const PolySeries& f) {
    int order = f.order();
    PolySeries g(order);
    PolySeries z_over_f = inverse(f.shifted_down(1));
    for (int n = 1; n <= order; ++n) g[n] = pow(z_over_f, n)[n - 1] / Rat(n);
    return g;
}

// log(1 + x) = sum (-1)^{k+1} x^k / k, composed directly.
PolySeries log_by_composition(const PolySeries& f) {
    PolySeries x = f - PolySeries::constant(GradedPoly(1), f.order());
    PolySeries l(f.order());
    for (int k = 1; k <= f.order(); ++k) l[k] = GradedPoly(Rat(k % 2 ? 1 : -1) / Rat(k));
    return compose(l, x);
}

}  // namespace

TEST(Series, InverseOfOnePlusZ) {
    RatSeries f(std::vector<Rat>{1, 1, 0, 0, 0, 0, 0, 0});
    RatSeries g = inverse(f);
    for (int m = 0; m <= 7; ++m) EXPECT_EQ(g[m], m % 2 ? -1 : 1);
    EXPECT_EQ(f * g, RatSeries::constant(Rat(1), 7));
}

TEST(Series, InverseRejectsNonInvertibleConstant) {
    EXPECT_THROW(inverse(RatSeries(std::vector<Rat>{0, 1, 2})), non_invertible_series);
    PolySeries f(3);
    f[0] = t(1);
    EXPECT_THROW(inverse(f), non_invertible_series);
}

TEST(Series, QvTimesBetaIsZ) {
    PolySeries beta = beta_series(10);
    PolySeries qv = inverse(beta.shifted_down(1));
    PolySeries prod = qv * beta;
    EXPECT_EQ(prod, PolySeries::identity(9).truncated(prod.order()));
}

TEST(Series, SquareOfBeta) {
    PolySeries b2 = pow(beta_series(6), 2);
    EXPECT_TRUE(b2[0].is_zero());
    EXPECT_TRUE(b2[1].is_zero());
    EXPECT_EQ(b2[2], GradedPoly(1));
    EXPECT_EQ(b2[3], t(1));
}

TEST(Series, NegativePowerIsInverse) {
    PolySeries q = beta_series(8).shifted_down(1);
    EXPECT_EQ(pow(q, -2) * pow(q, 2), PolySeries::constant(GradedPoly(1), 7));
}

TEST(Series, Compose) {
    PolySeries b = beta_series(8);
    EXPECT_EQ(compose(b, PolySeries::identity(8)), b);
    EXPECT_EQ(compose(b, revert(b)), PolySeries::identity(8));
    RatSeries geometric(std::vector<Rat>(9, Rat(1)));
    RatSeries zsq = RatSeries::monomial(2, 8);
    RatSeries expected(8);
    for (int m = 0; m <= 8; m += 2) expected[m] = 1;
    EXPECT_EQ(compose(geometric, zsq), expected);
    EXPECT_THROW(compose(b, PolySeries::constant(GradedPoly(1), 8)), composition_domain_error);
}

TEST(Series, Revert) {
    EXPECT_EQ(revert(PolySeries::identity(6)), PolySeries::identity(6));
    PolySeries inv = revert(beta_series(10));
    EXPECT_EQ(inv[2], -t(1) / Rat(2));
    EXPECT_EQ(inv[3], t(1) * t(1) / Rat(2) - t(2) / Rat(6));
    EXPECT_EQ(inv, lagrange_reversion(beta_series(10)));
    EXPECT_THROW(revert(PolySeries::constant(GradedPoly(1), 4)), not_normalized_error);
    RatSeries two_z(std::vector<Rat>{0, 2, 1});
    EXPECT_THROW(revert(two_z), not_normalized_error);
}

TEST(Series, RevertIsInvolutive) {
    PolySeries b = beta_series(11);
    EXPECT_EQ(revert(revert(b)), b);
}

TEST(Series, ExpLog) {
    EXPECT_TRUE(log(RatSeries::constant(Rat(1), 6)).is_zero());
    PolySeries l = log(beta_series(10).shifted_down(1));
    EXPECT_TRUE(l[0].is_zero());
    EXPECT_EQ(l[1], t(1) / Rat(2));
    EXPECT_EQ(l[2], t(2) / Rat(6) - t(1) * t(1) / Rat(8));
    EXPECT_EQ(l, log_by_composition(beta_series(10).shifted_down(1)));
    EXPECT_THROW(log(RatSeries(std::vector<Rat>{2, 1})), series_error);
    EXPECT_THROW(exp(RatSeries(std::vector<Rat>{1, 1})), series_error);
}

TEST(Series, ExpOfLogIsIdentity) {
    PolySeries q = beta_series(12).shifted_down(1);
    EXPECT_EQ(exp(log(q)), q);
    RatSeries e = exp(RatSeries::identity(8));
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(e[m], Rat(1) / Rat(factorial(m)));
}

TEST(Series, ResidueExtract) {
    PolySeries b = beta_series(12);
    EXPECT_EQ(residue_extract(b, 2, 1), Rat(6) * t(1));
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(residue_extract(b, n, n), GradedPoly(Rat(factorial(n + 1))));
    // k = n - 1 at n = 3: the curve class n(n+1)/2 * n! * t1 = 36 t1.
    EXPECT_EQ(residue_extract(b, 3, 2), Rat(36) * t(1));
    EXPECT_THROW(residue_extract(b, 12, 1), truncation_error);
    EXPECT_THROW(b.coefficient(13), truncation_error);
}

TEST(Series, GradeShiftContract) {
    PolySeries b = beta_series(10);
    b.set_grade_shift(1);
    EXPECT_TRUE(b.grading_consistent());
    PolySeries bb = pow(b, 3);
    bb.set_grade_shift(3);
    EXPECT_TRUE(bb.grading_consistent());
    PolySeries r = revert(b);
    r.set_grade_shift(1);
    EXPECT_TRUE(r.grading_consistent());
    PolySeries broken = b;
    broken[4] += GradedPoly(1);
    broken.set_grade_shift(1);
    EXPECT_FALSE(broken.grading_consistent());
}

TEST(Series, Rendering) {
    EXPECT_EQ(to_string(beta_series(3)), "z + 1/2*t1*z^2 + 1/6*t2*z^3 + O(z^4)");
    EXPECT_EQ(to_string(revert(beta_series(3))), "z - 1/2*t1*z^2 + (-1/6*t2 + 1/2*t1^2)*z^3 + O(z^4)");
}

TEST(FormalGroupLaw, LowOrderCoefficients) {
    auto f = formal_group_law(beta_series(8), 8);
    EXPECT_EQ(f.coefficient({1, 0}), GradedPoly(1));
    EXPECT_EQ(f.coefficient({0, 1}), GradedPoly(1));
    EXPECT_EQ(f.coefficient({1, 1}), t(1));
    EXPECT_TRUE(f.coefficient({2, 0}).is_zero());
}

TEST(FormalGroupLaw, Axioms) {
    const int order = 8;
    auto f = formal_group_law(beta_series(order), order);
    using Bi = BiTruncSeries<GradedPoly>;
    Bi u = Bi::variable(0, order);
    Bi zero(order);
    EXPECT_EQ((substitute<GradedPoly, 2, 2>(f, {u, zero})), u);
    EXPECT_EQ(f.permuted({1, 0}), f);
}

TEST(FormalGroupLaw, Associativity) {
    const int order = 6;
    using Tri = MultiSeries<GradedPoly, 3>;
    auto f = formal_group_law(beta_series(order), order);
    Tri u = Tri::variable(0, order), v = Tri::variable(1, order), w = Tri::variable(2, order);
    Tri uv = substitute<GradedPoly, 2, 3>(f, {u, v});
    Tri vw = substitute<GradedPoly, 2, 3>(f, {v, w});
    EXPECT_EQ((substitute<GradedPoly, 2, 3>(f, {uv, w})), (substitute<GradedPoly, 2, 3>(f, {u, vw})));
}

TEST(FormalGroupLaw, ExponentialIdentity) {
    const int order = 8;
    using Bi = BiTruncSeries<GradedPoly>;
    PolySeries b = beta_series(order);
    auto f = formal_group_law(b, order);
    Bi bz = Bi::lift(b, 0, order), bw = Bi::lift(b, 1, order);
    Bi lhs = substitute<GradedPoly, 2, 2>(f, {bz, bw});
    Bi rhs = compose(b, Bi::variable(0, order) + Bi::variable(1, order));
    EXPECT_TRUE((lhs - rhs).is_zero());
}
