#pragma once

// Hirzebruch genera on the theta ring and the topological invariants of the
// theta divisors Theta^n(k).
//
// A genus with characteristic series Q(z), Q_0 = 1, sends beta(z) to z/Q(z),
// so t_n -> (n+1)! [z^{n+1}] z/Q(z) = (n+1)! [z^n] 1/Q(z).

#include "thetacob/cobordism.hpp"

#include <optional>

namespace thetacob {

using RatSeries = TruncSeries<Rat>;

struct GenusSpec {
    RatSeries Q;
    std::string name;

    /// 1/Q, whose z^n coefficient gives the value on t_n after (n+1)!.
    RatSeries reciprocal() const { return inverse(Q); }
    /// Largest n with t_n in range.
    int max_weight() const { return Q.order(); }
};

inline GenusSpec custom_genus(const std::vector<Rat>& coeffs, std::string name = "custom") {
    if (coeffs.empty() || coeffs[0] != 1) throw std::invalid_argument("genus series needs Q_0 = 1");
    RatSeries q(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) q[static_cast<int>(i)] = coeffs[i];
    return GenusSpec{q, std::move(name)};
}

/// Q = z/(1 - e^{-z}) = sum (-1)^n B_n z^n/n!.
inline GenusSpec todd_genus(int order = 32) {
    std::vector<Rat> c;
    for (int n = 0; n <= order; ++n) c.push_back((n % 2 ? Rat(-1) : Rat(1)) * bernoulli(n) / Rat(factorial(n)));
    return custom_genus(c, "todd");
}

/// Q = z/tanh z = sum 2^{2k} B_{2k} z^{2k}/(2k)!.
inline GenusSpec l_genus(int order = 32) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (int n = 0; n <= order; n += 2) c[n] = Rat(ipow(BigInt(2), n)) * bernoulli(n) / Rat(factorial(n));
    return custom_genus(c, "l");
}

/// Q = 1 + z.
inline GenusSpec euler_genus(int order = 32) {
    std::vector<Rat> c(order + 1, Rat(0));
    c[0] = 1;
    if (order >= 1) c[1] = 1;
    return custom_genus(c, "euler");
}

inline GenusSpec genus_by_name(const std::string& name, int order = 32) {
    if (name == "todd") return todd_genus(order);
    if (name == "l" || name == "l_genus" || name == "signature") return l_genus(order);
    if (name == "euler") return euler_genus(order);
    throw std::invalid_argument("unknown genus '" + name + "' (expected todd, l or euler)");
}

namespace detail {
inline void check_genus_range(const GenusSpec& g, int n) {
    if (n < 0) throw std::invalid_argument("genus of a negative-weight generator");
    if (n > g.max_weight())
        throw truncation_error("genus " + g.name + ": t_" + std::to_string(n) + " needs Q to order " +
                               std::to_string(n) + ", have " + std::to_string(g.max_weight()));
}
}  // namespace detail

inline Rat genus_of_theta(const GenusSpec& g, int n) {
    detail::check_genus_range(g, n);
    return g.reciprocal()[n] * Rat(factorial(n + 1));
}

/// Image of p under t_n -> genus_of_theta(g, n).
inline Rat genus_of_poly(const GenusSpec& g, const GradedPoly& p) {
    detail::check_genus_range(g, std::max(p.max_generator(), 0));
    RatSeries r = g.reciprocal();
    return substitute(p, [&](int n) -> std::optional<Rat> { return r[n] * Rat(factorial(n + 1)); });
}

// ---------------------------------------------------------------------------
// Theta^n(k): zero locus of a generic section of L^k on A^{n+1}

/// 2^{n+2} (2^{n+2} - 1) B_{n+2}/(n+2), the signature of Theta^n for even n.
inline Rat theta_signature(int n) {
    BigInt two = ipow(BigInt(2), n + 2);
    return Rat(two * (two - 1)) * bernoulli(n + 2) / Rat(n + 2);
}

struct ThetaInvariants {
    int n = 0;
    int k = 1;
    std::vector<BigInt> betti;
    BigInt euler;
    std::optional<Rat> signature;
    ChernVector tangent;
    ChernVector normal;
};

/// b_j = binom(2n+2, j) off the middle, b_n from the Euler characteristic
/// (-1)^n k^{n+1} (n+1)!; Chern numbers scale by k^{n+1}.
inline ThetaInvariants theta_invariants(int n, int k = 1) {
    if (n < 1) throw std::invalid_argument("theta invariants need n >= 1");
    if (k < 1) throw std::invalid_argument("theta invariants need k >= 1");
    ThetaInvariants r;
    r.n = n;
    r.k = k;
    BigInt scale = ipow(BigInt(k), n + 1);
    r.betti.resize(2 * n + 1);
    for (int j = 0; j < n; ++j) r.betti[j] = r.betti[2 * n - j] = binomial(2 * n + 2, j);
    r.betti[n] = scale * factorial(n + 1) + binomial(2 * n + 2, n + 1) / (n + 2) * n;
    r.euler = scale * factorial(n + 1) * (n % 2 ? -1 : 1);
    if (n % 2 == 0) r.signature = Rat(scale) * theta_signature(n);
    r.tangent = theta_tangent_vector(n);
    r.normal = theta_normal_vector(n);
    for (auto* c : {&r.tangent, &r.normal})
        for (auto& [lambda, v] : c->values) v *= Rat(scale);
    return r;
}

/// [Theta^n(k)] = k^{n+1} t_n.
inline GradedPoly theta_k_class(int n, int k) { return theta(n) * Rat(ipow(BigInt(k), n + 1)); }

}  // namespace thetacob
