#pragma once

// Divisibility conditions on Chern numbers. For a weight-n U-manifold with
// normal numbers c_lambda, every S_mu [M] = sum_lambda c_lambda S_mu(t^lambda)/(lambda+1)!
// is integral, so its Todd genus (t_j -> (-1)^j) is an integer. Each mu gives a
// rational functional on the vector (c_lambda); the lattice of integer vectors
// on which all of them are integral is the congruence lattice.

#include "thetacob/genera.hpp"
#include "thetacob/landweber_novikov.hpp"
#include "thetacob/lattice.hpp"

namespace thetacob {

struct CongruenceFunctional {
    Partition mu;
    std::vector<Rat> coeffs;  // indexed like CongruenceSystem::columns
};

/// Columns are the normal-frame monomial Chern numbers of weight n.
struct CongruenceSystem {
    int weight = 0;
    std::vector<Partition> columns;
    std::vector<CongruenceFunctional> functionals;
    Lattice lattice;

    std::vector<BigInt> elementary_divisors() const { return lattice.elementary_divisors(); }
};

inline Rat todd_of(const GradedPoly& p) {
    return substitute(p, [](int j) -> std::optional<Rat> { return j % 2 ? Rat(-1) : Rat(1); });
}

inline CongruenceSystem congruence_system(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("congruence systems are supported for 1 <= n <= 6");
    CongruenceSystem sys;
    sys.weight = n;
    sys.columns = partitions_of(n);
    RatMatrix rows;
    for (const auto& mu : partitions_up_to(n)) {
        CongruenceFunctional f{mu, {}};
        for (const auto& lambda : sys.columns)
            f.coeffs.push_back(todd_of(ln_apply(mu, monomial(lambda))) / Rat(partition_factorial(lambda)));
        rows.push_back(f.coeffs);
        sys.functionals.push_back(std::move(f));
    }
    sys.lattice = integral_solutions(rows, sys.columns.size());
    return sys;
}

/// Integer coordinates of c in the columns of sys.
inline std::vector<Rat> system_coordinates(const ChernVector& c, const CongruenceSystem& sys) {
    if (c.weight != sys.weight)
        throw std::invalid_argument("Chern vector of weight " + std::to_string(c.weight) + " against a weight-" +
                                    std::to_string(sys.weight) + " system");
    ChernVector nu = converted(c, Frame::normal, ChernBasis::monomial);
    std::vector<Rat> x;
    for (const auto& lambda : sys.columns) x.push_back(nu[lambda]);
    return x;
}

inline Rat evaluate(const CongruenceFunctional& f, const std::vector<Rat>& x) {
    Rat v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += f.coeffs[i] * x[i];
    return v;
}

struct CongruenceVerdict {
    bool pass = true;
    bool integral_input = true;
    std::vector<std::pair<Partition, Rat>> values;    // every functional, in system order
    std::vector<std::pair<Partition, Rat>> failures;  // the non-integral ones
};

inline CongruenceVerdict check_chern_vector(const ChernVector& c, const CongruenceSystem& sys) {
    CongruenceVerdict v;
    auto x = system_coordinates(c, sys);
    v.integral_input = std::all_of(x.begin(), x.end(), [](const Rat& r) { return is_integer(r); });
    for (const auto& f : sys.functionals) {
        Rat value = evaluate(f, x);
        v.values.emplace_back(f.mu, value);
        if (!is_integer(value)) v.failures.emplace_back(f.mu, value);
    }
    v.pass = v.integral_input && v.failures.empty();
    return v;
}

// ---------------------------------------------------------------------------
// Hand-derived conditions in tangent Chern numbers c_{i1}...c_{ik}

struct TangentCongruence {
    std::string text;
    PartitionMap coeffs;  // tangent chern-product partition -> integer coefficient
    BigInt modulus;
};

/// The classical lists for n <= 4.
inline std::vector<TangentCongruence> listed_congruences(int n) {
    auto P = [](std::initializer_list<int> p) { return Partition(std::vector<int>(p)); };
    switch (n) {
        case 1: return {{"c1 = 0 mod 2", {{P({1}), 1}}, 2}};
        case 2: return {{"c2 + c1^2 = 0 mod 12", {{P({2}), 1}, {P({1, 1}), 1}}, 12}};
        case 3:
            return {{"c1c2 = 0 mod 24", {{P({2, 1}), 1}}, 24},
                    {"c3 = 0 mod 2", {{P({3}), 1}}, 2},
                    {"c1^3 = 0 mod 2", {{P({1, 1, 1}), 1}}, 2}};
        case 4:
            return {{"-c4 + c1c3 + 3c2^2 + 4c1^2c2 - c1^4 = 0 mod 720",
                     {{P({4}), -1}, {P({3, 1}), 1}, {P({2, 2}), 3}, {P({2, 1, 1}), 4}, {P({1, 1, 1, 1}), -1}},
                     720},
                    {"c1^2c2 + 2c1^4 = 0 mod 12", {{P({2, 1, 1}), 1}, {P({1, 1, 1, 1}), 2}}, 12},
                    {"-2c4 + c1c3 = 0 mod 4", {{P({4}), -2}, {P({3, 1}), 1}}, 4}};
        default: throw std::invalid_argument("listed congruences exist for 1 <= n <= 4");
    }
}

/// The condition as a rational functional on the columns of a weight-n system.
inline std::vector<Rat> tangent_condition_row(const TangentCongruence& cond, int n) {
    auto columns = partitions_of(n);
    std::vector<Rat> row;
    for (const auto& kappa : columns) {
        ChernVector e = constant_vector(n, Frame::normal, ChernBasis::monomial, Rat(0));
        e.values[kappa] = 1;
        ChernVector tan = converted(e, Frame::tangent, ChernBasis::chern_product);
        Rat v = 0;
        for (const auto& [lambda, a] : cond.coeffs) v += a * tan[lambda];
        row.push_back(v / Rat(cond.modulus));
    }
    return row;
}

inline Lattice lattice_of(const std::vector<TangentCongruence>& conds, int n) {
    RatMatrix rows;
    for (const auto& c : conds) rows.push_back(tangent_condition_row(c, n));
    return integral_solutions(rows, partitions_of(n).size());
}

struct LatticeComparison {
    bool generated_within_listed = false;  // every generated solution meets the listed conditions
    bool listed_within_generated = false;
    bool equal() const { return generated_within_listed && listed_within_generated; }
};

inline LatticeComparison compare_with_listed(const CongruenceSystem& sys) {
    Lattice listed = lattice_of(listed_congruences(sys.weight), sys.weight);
    return {listed.contains(sys.lattice), sys.lattice.contains(listed)};
}

}  // namespace thetacob
