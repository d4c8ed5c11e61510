#include "thetacob/symfun.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace thetacob;

namespace {

// Oracle: symmetric functions as explicit polynomials in `vars` variables.
using Exps = std::vector<int>;
using Explicit = std::map<Exps, Rat>;

Explicit ex_mul(const Explicit& a, const Explicit& b) {
    Explicit r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Explicit ex_add(Explicit a, const Explicit& b, const Rat& s = 1) {
    for (const auto& [e, c] : b) a[e] += s * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

Explicit ex_one(int vars) { return {{Exps(vars, 0), Rat(1)}}; }

Explicit ex_m(const Partition& lambda, int vars) {
    Exps e(vars, 0);
    if (lambda.length() > vars) return {};
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
    std::sort(e.begin(), e.end());
    Explicit r;
    do r[e] = 1;
    while (std::next_permutation(e.begin(), e.end()));
    return r;
}

Explicit ex_power(int k, int vars) { return ex_m(Partition{k}, vars); }

// e_k: sum over k-subsets.
Explicit ex_e(int k, int vars) {
    std::vector<int> ones(k, 1);
    return ex_m(Partition(std::vector<int>(ones)), vars);
}

// h_k: sum of all monomials of degree k.
Explicit ex_h(int k, int vars) {
    Explicit r;
    for (const auto& lambda : partitions_of(k)) r = ex_add(r, ex_m(lambda, vars));
    return r;
}

Explicit ex_element(SymBasis b, const Partition& lambda, int vars) {
    if (b == SymBasis::monomial) return ex_m(lambda, vars);
    Explicit r = ex_one(vars);
    for (int part : lambda.parts()) {
        Explicit f = b == SymBasis::elementary ? ex_e(part, vars)
                     : b == SymBasis::complete ? ex_h(part, vars)
                                               : ex_power(part, vars);
        r = ex_mul(r, f);
    }
    return r;
}

Explicit ex_of(const SymFunExpr& x, int vars) {
    Explicit r;
    for (const auto& [lambda, c] : x.terms) r = ex_add(r, ex_element(x.basis, lambda, vars), c);
    return r;
}

const std::array<SymBasis, 4> kBases{SymBasis::monomial, SymBasis::elementary, SymBasis::complete,
                                     SymBasis::power_sum};

}  // namespace

TEST(SymFun, ListedConversions) {
    auto e2 = SymFunExpr::element(SymBasis::elementary, {2});
    EXPECT_EQ(to_string(convert_basis(e2, SymBasis::monomial)), "m[1,1]");
    auto h2 = SymFunExpr::element(SymBasis::complete, {2});
    EXPECT_EQ(to_string(convert_basis(h2, SymBasis::elementary)), "-e[2] + e[1,1]");
    auto p2 = SymFunExpr::element(SymBasis::power_sum, {2});
    EXPECT_EQ(to_string(convert_basis(p2, SymBasis::elementary)), "-2*e[2] + e[1,1]");
}

TEST(SymFun, ConversionsMatchExplicitPolynomials) {
    for (int n = 1; n <= 6; ++n)
        for (SymBasis from : kBases)
            for (SymBasis to : kBases)
                for (const auto& lambda : partitions_of(n)) {
                    auto x = SymFunExpr::element(from, lambda);
                    auto y = convert_basis(x, to);
                    EXPECT_EQ(ex_of(y, n), ex_of(x, n))
                        << basis_letter(from) << "[" << to_string(lambda) << "] -> " << basis_letter(to);
                }
}

TEST(SymFun, ConversionsCommuteThroughThirdBasis) {
    for (int n = 1; n <= 8; ++n)
        for (SymBasis a : kBases)
            for (SymBasis b : kBases)
                for (SymBasis c : kBases)
                    for (const auto& lambda : partitions_of(n)) {
                        auto x = SymFunExpr::element(a, lambda);
                        EXPECT_EQ(convert_basis(convert_basis(x, c), b), convert_basis(x, b));
                    }
}

TEST(SymFun, RoundTripIsExact) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int n = 1; n <= 8; ++n) {
        for (SymBasis b : kBases) {
            SymFunExpr x{b, n, {}};
            for (const auto& lambda : partitions_of(n))
                if (int c = coeff(rng)) x.terms[lambda] = Rat(c) / Rat(3);
            for (SymBasis t : kBases) EXPECT_EQ(convert_basis(convert_basis(x, t), b), x);
        }
    }
}

TEST(SymFun, SignInvolutionExamples) {
    auto p1 = SymFunExpr::element(SymBasis::power_sum, {1});
    EXPECT_EQ(to_string(sign_involution(p1)), "-p[1]");
    auto e1 = SymFunExpr::element(SymBasis::elementary, {1});
    EXPECT_EQ(to_string(sign_involution(e1)), "-e[1]");
    auto e2 = SymFunExpr::element(SymBasis::elementary, {2});
    EXPECT_EQ(convert_basis(sign_involution(e2), SymBasis::complete), SymFunExpr::element(SymBasis::complete, {2}));
}

TEST(SymFun, SignInvolutionSendsEkToSignedHk) {
    for (int k = 1; k <= 8; ++k) {
        auto image = convert_basis(sign_involution(SymFunExpr::element(SymBasis::elementary, {k})), SymBasis::complete);
        SymFunExpr expected = SymFunExpr::element(SymBasis::complete, {k});
        if (k % 2) expected.terms.begin()->second = -1;
        EXPECT_EQ(image, expected) << k;
    }
}

TEST(SymFun, SignInvolutionIsInvolutiveRingHomomorphism) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> wdist(1, 4);
        int wa = wdist(rng), wb = wdist(rng);
        auto pa = partitions_of(wa), pb = partitions_of(wb);
        auto a = SymFunExpr::element(SymBasis::elementary, pa[rng() % pa.size()]);
        auto b = SymFunExpr::element(SymBasis::elementary, pb[rng() % pb.size()]);
        EXPECT_EQ(sign_involution(a * b), sign_involution(a) * sign_involution(b));
        EXPECT_EQ(sign_involution(sign_involution(a * b)), a * b);
    }
}

TEST(ChernVector, ChernProductToMonomial) {
    // c1^2 = e1^2 = m2 + 2 m11 and c2 = e2 = m11, so the product values follow.
    ChernVector mono{2, Frame::tangent, ChernBasis::monomial, {{Partition{2}, Rat(5)}, {Partition{1, 1}, Rat(7)}}};
    ChernVector prod = monomial_to_chern_product(mono);
    EXPECT_EQ(prod[Partition({1, 1})], Rat(5 + 2 * 7));
    EXPECT_EQ(prod[Partition({2})], Rat(7));
    EXPECT_EQ(chern_product_to_monomial(prod), mono);
    ChernVector one{1, Frame::tangent, ChernBasis::chern_product, {{Partition{1}, Rat(-2)}}};
    EXPECT_EQ(chern_product_to_monomial(one)[Partition({1})], -2);
}

TEST(ChernVector, TangentToNormalExamples) {
    ChernVector c1{1, Frame::tangent, ChernBasis::monomial, {{Partition{1}, Rat(-2)}}};
    EXPECT_EQ(tangent_to_normal(c1)[Partition({1})], 2);

    ChernVector theta2 = constant_vector(2, Frame::tangent, ChernBasis::chern_product, Rat(6));
    ChernVector nu = to_basis(tangent_to_normal(theta2), ChernBasis::monomial);
    EXPECT_EQ(nu[Partition({2})], 6);
    EXPECT_EQ(nu[Partition({1, 1})], 0);
}

TEST(ChernVector, ThetaTangentMapsToNormalVector) {
    for (int n = 1; n <= 6; ++n) {
        Rat value = Rat(factorial(n + 1)) * (n % 2 ? -1 : 1);
        ChernVector tangent = constant_vector(n, Frame::tangent, ChernBasis::chern_product, value);
        ChernVector nu = converted(tangent, Frame::normal, ChernBasis::monomial);
        for (const auto& lambda : partitions_of(n))
            EXPECT_EQ(nu[lambda], lambda.is_one_part() ? Rat(factorial(n + 1)) : Rat(0)) << n << " " << to_string(lambda);
    }
}

TEST(ChernVector, FrameSwitchIsInvolutive) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> val(-50, 50);
    for (int n = 1; n <= 5; ++n)
        for (ChernBasis b : {ChernBasis::monomial, ChernBasis::chern_product}) {
            ChernVector c{n, Frame::tangent, b, {}};
            for (const auto& lambda : partitions_of(n)) c.values[lambda] = val(rng);
            ChernVector once = tangent_to_normal(c);
            EXPECT_TRUE(is_integral(once));
            EXPECT_EQ(normal_to_tangent(once), c);
        }
}

TEST(ChernVector, ValidationRejectsIncompleteVectors) {
    ChernVector c{2, Frame::tangent, ChernBasis::monomial, {{Partition{2}, Rat(1)}}};
    EXPECT_THROW(tangent_to_normal(c), incomplete_vector);
    EXPECT_THROW(to_basis(c, ChernBasis::chern_product), incomplete_vector);
    c.values[Partition({1, 1})] = 0;
    EXPECT_NO_THROW(validate(c));
    c.values[Partition({3})] = 0;
    EXPECT_THROW(validate(c), incomplete_vector);
}

TEST(ChernVector, ProductOfManifolds) {
    // CP^1 x CP^1: c1^2 = 8, c2 = 4 from the tangent total class (1+a)^2(1+b)^2.
    ChernVector cp1{1, Frame::tangent, ChernBasis::monomial, {{Partition{1}, Rat(2)}}};
    ChernVector prod = monomial_to_chern_product(product_vector(cp1, cp1));
    EXPECT_EQ(prod[Partition({1, 1})], 8);
    EXPECT_EQ(prod[Partition({2})], 4);
}
