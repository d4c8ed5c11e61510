#include "thetacob/congruences.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace thetacob;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix m(rows, IntVector(cols));
    for (auto& r : m)
        for (auto& e : r) e = d(rng);
    return m;
}

// Oracle: the k-th determinantal divisor is the gcd of all k x k minors.
BigInt det(const IntMatrix& m) {
    RatMatrix r(m.size(), std::vector<Rat>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = Rat(m[i][j]);
    Rat d = 1;
    for (std::size_t c = 0; c < r.size(); ++c) {
        std::size_t p = c;
        while (p < r.size() && r[p][c] == 0) ++p;
        if (p == r.size()) return 0;
        if (p != c) {
            std::swap(r[p], r[c]);
            d = -d;
        }
        d *= r[c][c];
        for (std::size_t i = c + 1; i < r.size(); ++i) {
            Rat f = r[i][c] / r[c][c];
            for (std::size_t j = c; j < r.size(); ++j) r[i][j] -= f * r[c][j];
        }
    }
    return numerator_of(d);
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<BigInt> divisors_by_minors(const IntMatrix& m) {
    std::vector<BigInt> d{1};
    for (std::size_t k = 1; k <= std::min(m.size(), m[0].size()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.size(), k, 0, cur, rs);
        subsets(m[0].size(), k, 0, cur, cs);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix sub(k, IntVector(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
                g = boost::multiprecision::gcd(g, abs(det(sub)));
            }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<BigInt> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

ChernVector tangent_products(int n, const std::vector<std::pair<Partition, int>>& values) {
    ChernVector c = constant_vector(n, Frame::tangent, ChernBasis::chern_product, Rat(0));
    for (const auto& [p, v] : values) c.values[p] = v;
    return c;
}

}  // namespace

TEST(Lattice, HermiteFormShape) {
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    IntMatrix h = hermite_normal_form(m);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h, (IntMatrix{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}}));
    EXPECT_EQ(hermite_normal_form(IntMatrix{{0, 0}, {0, 3}, {0, 6}}), (IntMatrix{{0, 3}}));
}

TEST(Lattice, HermiteFormSpansTheSameLattice) {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m = random_matrix(rng, 5, 4, 9);
        Lattice l = Lattice::spanned_by(m, 4);
        for (const auto& row : m) EXPECT_TRUE(l.contains(row));
        for (std::size_t i = 0; i < l.basis.size(); ++i) {
            const auto& row = l.basis[i];
            std::size_t col = 0;
            while (row[col] == 0) ++col;
            EXPECT_GT(row[col], 0);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(l.basis[k][col], 0);
                EXPECT_LT(l.basis[k][col], row[col]);
            }
        }
        // The basis rows lie in the span of the generators: same lattice both ways.
        EXPECT_TRUE(Lattice::spanned_by(l.basis, 4).contains(Lattice::spanned_by(m, 4)));
        EXPECT_EQ(Lattice::spanned_by(l.basis, 4), l);
    }
}

TEST(Lattice, SmithDivisorsMatchMinors) {
    std::mt19937 rng(43);
    EXPECT_EQ(elementary_divisors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
              (std::vector<BigInt>{2, 6, 12}));
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
        IntMatrix m = random_matrix(rng, rows, cols, 12);
        auto d = elementary_divisors(m);
        EXPECT_EQ(d, divisors_by_minors(m));
        for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    }
}

TEST(Lattice, IntegralSolutions) {
    // x/2 and (x + y)/3 integral: x = 0 mod 2, y = -x mod 3.
    RatMatrix f{{Rat(1, 2), Rat(0)}, {Rat(1, 3), Rat(1, 3)}};
    Lattice l = integral_solutions(f, 2);
    EXPECT_TRUE(l.contains(IntVector{2, 1}));
    EXPECT_TRUE(l.contains(IntVector{0, 3}));
    EXPECT_FALSE(l.contains(IntVector{1, 2}));
    EXPECT_FALSE(l.contains(IntVector{2, 0}));
    EXPECT_EQ(l.elementary_divisors(), (std::vector<BigInt>{1, 6}));
    EXPECT_EQ(integral_solutions({}, 3), Lattice::full(3));
}

TEST(Lattice, IntegralSolutionsBruteForce) {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix f(2, std::vector<Rat>(3));
        for (auto& r : f)
            for (auto& c : r) c = Rat(num(rng), den(rng));
        Lattice l = integral_solutions(f, 3);
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b)
                for (int c = -4; c <= 4; ++c) {
                    bool ok = true;
                    for (const auto& r : f) ok = ok && is_integer(r[0] * a + r[1] * b + r[2] * c);
                    EXPECT_EQ(l.contains(IntVector{a, b, c}), ok);
                }
    }
}

TEST(Congruences, RowsAreToddOfOperations) {
    auto sys = congruence_system(2);
    ASSERT_EQ(sys.columns, (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
    // mu = empty: Todd(t2)/3! and Todd(t1^2)/(2!2!).
    EXPECT_EQ(sys.functionals[0].mu, Partition());
    EXPECT_EQ(sys.functionals[0].coeffs, (std::vector<Rat>{Rat(1, 6), Rat(1, 4)}));
    EXPECT_EQ(sys.functionals.size(), partitions_up_to(2).size());
}

TEST(Congruences, WeightOne) {
    auto sys = congruence_system(1);
    EXPECT_EQ(sys.elementary_divisors(), (std::vector<BigInt>{2}));
    EXPECT_TRUE(sys.lattice.contains(IntVector{2}));
    EXPECT_FALSE(sys.lattice.contains(IntVector{1}));
    EXPECT_TRUE(compare_with_listed(sys).equal());
}

TEST(Congruences, ListedConditionsAgree) {
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(compare_with_listed(congruence_system(n)).equal()) << n;
    auto four = compare_with_listed(congruence_system(4));
    EXPECT_TRUE(four.generated_within_listed);
    EXPECT_EQ(congruence_system(2).elementary_divisors(), (std::vector<BigInt>{1, 12}));
    EXPECT_EQ(congruence_system(3).elementary_divisors(), (std::vector<BigInt>{2, 2, 24}));
}

TEST(Congruences, ThetaVectorsPass) {
    for (int n = 1; n <= 6; ++n) {
        auto sys = congruence_system(n);
        auto v = check_chern_vector(theta_tangent_vector(n), sys);
        EXPECT_TRUE(v.pass) << n;
        EXPECT_EQ(v.values.front().second, n % 2 ? -1 : 1);
        auto x = system_coordinates(theta_normal_vector(n), sys);
        IntVector xi;
        for (const auto& c : x) xi.push_back(numerator_of(c));
        EXPECT_TRUE(sys.lattice.contains(xi));
    }
    auto v3 = check_chern_vector(tangent_products(3, {{Partition({3}), -24}, {Partition({2, 1}), -24},
                                                       {Partition({1, 1, 1}), -24}}),
                                 congruence_system(3));
    EXPECT_TRUE(v3.pass);
    auto sys4 = congruence_system(4);
    auto v4 = check_chern_vector(constant_vector(4, Frame::tangent, ChernBasis::chern_product, Rat(120)), sys4);
    EXPECT_TRUE(v4.pass);
    auto row = tangent_condition_row(listed_congruences(4)[0], 4);
    auto x = system_coordinates(theta_tangent_vector(4), sys4);
    Rat value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) value += row[i] * x[i];
    EXPECT_EQ(value, 1);  // (-120 + 120 + 360 + 480 - 120)/720
}

TEST(Congruences, ProductsOfThetaDivisorsPass) {
    for (int n = 2; n <= 5; ++n) {
        auto sys = congruence_system(n);
        for (const auto& lambda : partitions_of(n)) {
            EXPECT_TRUE(check_chern_vector(theta_product_normal_vector(lambda), sys).pass) << to_string(lambda);
            auto x = system_coordinates(theta_product_normal_vector(lambda), sys);
            IntVector xi;
            for (const auto& c : x) xi.push_back(numerator_of(c));
            EXPECT_TRUE(sys.lattice.contains(xi));
        }
    }
}

TEST(Congruences, ProjectiveSpacesPass) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(check_chern_vector(cpn_tangent_vector(n), congruence_system(n)).pass) << n;
}

TEST(Congruences, FailingVectorReportsTodd) {
    auto v = check_chern_vector(tangent_products(2, {{Partition({1, 1}), 1}}), congruence_system(2));
    EXPECT_FALSE(v.pass);
    ASSERT_FALSE(v.failures.empty());
    EXPECT_EQ(v.failures.front().first, Partition());
    EXPECT_EQ(v.failures.front().second, Rat(1, 12));
}

TEST(Congruences, Validation) {
    EXPECT_THROW(congruence_system(0), std::invalid_argument);
    EXPECT_THROW(congruence_system(7), std::invalid_argument);
    EXPECT_THROW(check_chern_vector(theta_tangent_vector(2), congruence_system(3)), std::invalid_argument);
    EXPECT_THROW(listed_congruences(5), std::invalid_argument);
}
