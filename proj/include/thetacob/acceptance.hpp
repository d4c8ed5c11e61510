#pragma once

// Acceptance criteria 1-9 as self-contained checks, shared by the acceptance
// binary and `thetacob selftest`. Every check is deterministic.

#include "thetacob/congruences.hpp"
#include "thetacob/genera.hpp"
#include "thetacob/landweber_novikov.hpp"
#include "thetacob/multi_series.hpp"
#include "thetacob/poly_parser.hpp"
#include "thetacob/weierstrass.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace thetacob {

struct CriterionResult {
    std::string id;
    std::string title;
    int checks = 0;
    std::vector<std::string> failures;
    /// Informational lines; never affect the verdict.
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
};

namespace detail {

class Recorder {
  public:
    explicit Recorder(CriterionResult& r) : r_(r) {}
    void expect(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) r_.failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        bool ok = actual == expected;
        ++r_.checks;
        if (!ok) {
            std::ostringstream os;
            os << what << ": got " << show(actual) << ", expected " << show(expected);
            r_.failures.push_back(os.str());
        }
    }
    void note(std::string s) { r_.notes.push_back(std::move(s)); }

  private:
    static std::string show(const GradedPoly& p) { return to_string(p); }
    static std::string show(const Rat& q) { return to_string(q); }
    static std::string show(const BigInt& q) { return q.str(); }
    template <class T>
    static std::string show(const T& x) {
        std::ostringstream os;
        os << x;
        return os.str();
    }
    CriterionResult& r_;
};

inline GradedPoly random_poly(std::mt19937& rng, int max_weight, int terms) {
    std::uniform_int_distribution<int> weight(1, max_weight), num(-6, 6), den(1, 5);
    GradedPoly p(Rat(num(rng)));
    for (int i = 0; i < terms; ++i) {
        auto parts = partitions_of(weight(rng));
        p.add_term(parts[rng() % parts.size()], Rat(num(rng), den(rng)));
    }
    return p;
}

inline bool positive_integral(const GradedPoly& p) {
    if (p.is_zero()) return false;
    for (const auto& [m, c] : p.terms())
        if (!is_integer(c) || c <= 0) return false;
    return true;
}

}  // namespace detail

inline CriterionResult acceptance_dual_classes() {
    CriterionResult r{"1", "dual classes v1..v5, series and Jacobi-Trudi routes"};
    detail::Recorder rec(r);
    auto series = v_classes(12);
    auto det = v_classes_jacobi_trudi(12);
    const std::vector<std::string> printed{
        "t1",
        "-t2 + 3/2*t1^2",
        "t3 - 4*t1*t2 + 3*t1^3",
        "-t4 + 5*t1*t3 - 15*t1^2*t2 + 10/3*t2^2 + 15/2*t1^4",
        "t5 - 6*t1*t4 + 30*t1*t2^2 - 60*t1^3*t2 - 10*t2*t3 + 45/2*t1^2*t3 + 45/2*t1^5"};
    for (int n = 1; n <= 5; ++n) {
        rec.equal(series[n], parse_poly(printed[n - 1]), "v" + std::to_string(n) + " by series inversion");
        rec.equal(det[n], parse_poly(printed[n - 1]), "v" + std::to_string(n) + " by determinant");
    }
    for (int n = 6; n <= 12; ++n) rec.equal(series[n], det[n], "v" + std::to_string(n) + " routes agree");
    return r;
}

inline CriterionResult acceptance_genus_tables() {
    CriterionResult r{"2", "Todd, Euler and L genus tables"};
    detail::Recorder rec(r);
    auto todd = todd_genus(), euler = euler_genus(), l = l_genus();
    for (int n = 1; n <= 12; ++n) {
        Rat sign = n % 2 ? Rat(-1) : Rat(1);
        rec.equal(genus_of_theta(todd, n), sign, "Td(Theta^" + std::to_string(n) + ")");
        rec.equal(genus_of_theta(euler, n), sign * Rat(factorial(n + 1)), "chi(Theta^" + std::to_string(n) + ")");
    }
    rec.equal(genus_of_theta(l, 2), Rat(-2), "signature(Theta^2)");
    auto v = v_classes(12);
    for (int n = 1; n <= 12; ++n)
        rec.equal(genus_of_poly(todd, v[n]), Rat(n + 1) * bernoulli(n), "Td(v" + std::to_string(n) + ")");
    auto cp = cp_classes(10);
    for (int n = 1; n <= 10; ++n) {
        rec.equal(genus_of_poly(todd, cp[n]), Rat(1), "Td(CP^" + std::to_string(n) + ")");
        rec.equal(genus_of_poly(euler, cp[n]), Rat(n + 1), "chi(CP^" + std::to_string(n) + ")");
        if (n % 2 == 0) rec.equal(genus_of_poly(l, cp[n]), Rat(1), "L(CP^" + std::to_string(n) + ")");
    }
    return r;
}

/// The statements as printed. S_(1)(v1) = -2 contradicts v1 = t1 together
/// with S_(1)(t1) = 2, and the S_(2) formula holds for even n only, so this
/// criterion reports those sub-checks as failures.
inline CriterionResult acceptance_landweber_novikov() {
    CriterionResult r{"3", "Landweber-Novikov suite (statements as printed)"};
    detail::Recorder rec(r);
    auto v = v_classes(9);
    rec.equal(ln_apply({1}, v[1]), GradedPoly(-2), "S(1)(v1) = -2");
    for (int n = 2; n <= 9; ++n) rec.expect(ln_apply({1}, v[n]).is_zero(), "S(1)(v" + std::to_string(n) + ") = 0");
    for (int n = 2; n <= 9; ++n)
        rec.equal(ln_apply({2}, v[n]), Rat(-n * (n + 1)) * theta(n - 2), "S(2)(v" + std::to_string(n) + ")");
    const int order = 10;
    PolySeries b = beta(order);
    for (int k = 1; k <= 4; ++k)
        rec.expect(ln_apply_series({k}, b) == pow(b, k + 1), "S(" + std::to_string(k) + ")(beta) = beta^" + std::to_string(k + 1));
    auto w = w_classes(8);
    for (int n = 2; n <= 8; ++n) rec.equal(ln_apply({1}, w[n]), theta(n - 1), "S(1)(w" + std::to_string(n) + ")");
    for (int n = 1; n <= 9; ++n) rec.equal(ln_apply({n}, theta(n)), GradedPoly(Rat(factorial(n + 1))), "S(" + std::to_string(n) + ")(t" + std::to_string(n) + ")");

    // Sign-consistent values: S_(1)(v1) = 2 and S_(2)(v_n) = (-1)^{n+1} n(n+1) t_{n-2}.
    bool consistent = ln_apply({1}, v[1]) == GradedPoly(2);
    for (int n = 2; n <= 9; ++n)
        consistent = consistent && ln_apply({2}, v[n]) == Rat(n % 2 ? n * (n + 1) : -n * (n + 1)) * theta(n - 2);
    rec.note(std::string("sign-consistent variant S(1)(v1) = 2, S(2)(vn) = (-1)^(n+1) n(n+1) t(n-2): ") +
             (consistent ? "holds" : "FAILS"));
    return r;
}

inline CriterionResult acceptance_integrality() {
    CriterionResult r{"4", "integrality and positivity"};
    detail::Recorder rec(r);
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            rec.expect(detail::positive_integral(theta_intersection(n, k)),
                       "[Theta_" + std::to_string(k) + "^" + std::to_string(n - k) + "] positive integral");
    auto v = v_classes(10);
    for (int n = 1; n <= 10; ++n) rec.expect(is_integral(hurwitz_form(v[n], n)), "y" + std::to_string(n) + " integral");
    for (int n = 2; n <= 20; n += 2)
        rec.expect(is_integer(theta_signature(n)), "signature formula at n = " + std::to_string(n));
    return r;
}

inline CriterionResult acceptance_duality() {
    CriterionResult r{"5", "duality and quantisation"};
    detail::Recorder rec(r);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                rec.equal(dual_pairing(lambda, mu), Rat(lambda == mu ? 1 : 0),
                          "<" + to_string(lambda) + ", " + to_string(mu) + ">");
    std::mt19937 rng(5150);
    for (int i = 0; i < 50; ++i) {
        GradedPoly p = detail::random_poly(rng, 6, 4);
        rec.equal(dequantize(quantize(p)), p, "dequantize(quantize(x))");
    }
    for (int i = 0; i < 15; ++i) {
        GradedPoly a = detail::random_poly(rng, 3, 3), b = detail::random_poly(rng, 3, 3);
        rec.expect(quantize(a * b) == quantize(a) * quantize(b), "quantize(" + to_string(a * b) + ") multiplicative");
    }
    return r;
}

inline CriterionResult acceptance_formal_group() {
    CriterionResult r{"6", "formal group law axioms"};
    detail::Recorder rec(r);
    using Bi = BiTruncSeries<GradedPoly>;
    using Tri = MultiSeries<GradedPoly, 3>;
    {
        const int order = 8;
        PolySeries b = beta(order);
        auto f = formal_group_law(b, order);
        Bi u = Bi::variable(0, order), zero(order);
        rec.expect((substitute<GradedPoly, 2, 2>(f, {u, zero}) - u).is_zero(), "F(u, 0) = u");
        rec.expect((f.permuted({1, 0}) - f).is_zero(), "F(u, v) = F(v, u)");
        Bi lhs = substitute<GradedPoly, 2, 2>(f, {Bi::lift(b, 0, order), Bi::lift(b, 1, order)});
        Bi rhs = compose(b, Bi::variable(0, order) + Bi::variable(1, order));
        rec.expect((lhs - rhs).is_zero(), "F(beta(z), beta(w)) = beta(z + w) to order 8");
    }
    {
        const int order = 6;
        auto f = formal_group_law(beta(order), order);
        Tri u = Tri::variable(0, order), v = Tri::variable(1, order), w = Tri::variable(2, order);
        Tri left = substitute<GradedPoly, 2, 3>(f, {substitute<GradedPoly, 2, 3>(f, {u, v}), w});
        Tri right = substitute<GradedPoly, 2, 3>(f, {u, substitute<GradedPoly, 2, 3>(f, {v, w})});
        rec.expect((left - right).is_zero(), "associativity to total order 6");
    }
    return r;
}

inline CriterionResult acceptance_congruences() {
    CriterionResult r{"7", "Chern-number congruences"};
    detail::Recorder rec(r);
    for (int n = 1; n <= 3; ++n)
        rec.expect(compare_with_listed(congruence_system(n)).equal(),
                   "generated lattice equals listed conditions at n = " + std::to_string(n));
    rec.expect(compare_with_listed(congruence_system(4)).generated_within_listed,
               "listed functionals contained in generated system at n = 4");
    for (int n = 1; n <= 4; ++n) {
        auto verdict = check_chern_vector(theta_tangent_vector(n), congruence_system(n));
        rec.expect(verdict.pass, "Theta^" + std::to_string(n) + " passes");
        rec.equal(verdict.values.front().second, Rat(n % 2 ? -1 : 1), "Todd(Theta^" + std::to_string(n) + ")");
    }
    return r;
}

inline CriterionResult acceptance_topology() {
    CriterionResult r{"8", "Betti numbers, Euler characteristic, scaling"};
    detail::Recorder rec(r);
    rec.equal(theta_invariants(2).betti[2], BigInt(16), "b2(Theta^2)");
    for (int n = 1; n <= 6; ++n) {
        auto inv = theta_invariants(n);
        for (int j = 0; j < n; ++j)
            rec.equal(inv.betti[j], binomial(2 * n + 2, j), "b" + std::to_string(j) + "(Theta^" + std::to_string(n) + ")");
        rec.equal(inv.betti[n], factorial(n + 1) + BigInt(n) * catalan(n + 1), "middle Betti number of Theta^" + std::to_string(n));
        BigInt chi = 0;
        for (int j = 0; j <= 2 * n; ++j) chi += j % 2 ? -inv.betti[j] : inv.betti[j];
        rec.equal(chi, inv.euler, "alternating Betti sum of Theta^" + std::to_string(n));
        rec.equal(Rat(chi), genus_of_theta(euler_genus(), n), "Euler genus of Theta^" + std::to_string(n));
        for (int k = 1; k <= 3; ++k) {
            auto scaled = theta_invariants(n, k);
            const std::string tag = "Theta^" + std::to_string(n) + "(" + std::to_string(k) + ")";
            rec.equal(decompose(scaled.tangent), theta_k_class(n, k), tag + " class");
            rec.equal(theta_k_class(n, k), Rat(ipow(BigInt(k), n + 1)) * theta(n), tag + " = k^(n+1) t_n");
            rec.equal(theta_k_class(n, k), Rat(k) * psi_on_class(k, theta(n)), tag + " = k Psi^k(t_n)");
        }
    }
    return r;
}

inline CriterionResult acceptance_weierstrass() {
    CriterionResult r{"9", "lemniscatic Weierstrass checks"};
    detail::Recorder rec(r);
    VerifyOptions opt;
    opt.lemniscatic = true;
    for (const auto& c : weierstrass_verify(lemniscatic_lattice(1.0), opt)) {
        std::ostringstream os;
        os << c.name << " residual " << c.residual << " (tol " << c.tolerance << ")";
        rec.expect(c.pass(), os.str());
    }
    return r;
}

struct AcceptanceEntry {
    std::string id;
    std::function<CriterionResult()> run;
};

inline const std::vector<AcceptanceEntry>& acceptance_criteria() {
    static const std::vector<AcceptanceEntry> all{
        {"1", acceptance_dual_classes},  {"2", acceptance_genus_tables}, {"3", acceptance_landweber_novikov},
        {"4", acceptance_integrality},   {"5", acceptance_duality},      {"6", acceptance_formal_group},
        {"7", acceptance_congruences},   {"8", acceptance_topology},     {"9", acceptance_weierstrass}};
    return all;
}

/// One line per criterion: "[PASS] 3 title (k checks)", failures and notes indented below.
inline std::string format_result(const CriterionResult& r, bool verbose = true) {
    std::ostringstream os;
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " (" << r.checks << " checks";
    if (!r.pass()) os << ", " << r.failures.size() << " failed";
    os << ")\n";
    if (verbose) {
        for (const auto& f : r.failures) os << "    failed: " << f << "\n";
        for (const auto& n : r.notes) os << "    note: " << n << "\n";
    }
    return os.str();
}

}  // namespace thetacob
