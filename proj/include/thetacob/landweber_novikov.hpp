#pragma once

// Landweber-Novikov operations on the theta ring.
//
// S_(k)(t_n) = (n+1)! [z^{n+1}] beta(z)^{k+1} for k <= n and 0 for k > n;
// S_lambda(t_n) = 0 unless lambda has one part. Products follow the Cartan
// rule S_lambda(xy) = sum over distinct splits lambda = (l1, l2) of
// S_l1(x) S_l2(y), and everything extends linearly.

#include "thetacob/cobordism.hpp"

#include <mutex>
#include <set>

namespace thetacob {

/// [Theta_k^{n-k}] = S_(k)(t_n); cached.
inline GradedPoly theta_intersection(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("theta intersection needs n, k >= 0");
    if (k == 0) return theta(n);
    if (k > n) return GradedPoly();
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GradedPoly> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    GradedPoly value = residue_extract(beta(n + 1), n, k);
    std::lock_guard lock(mutex);
    return cache.try_emplace({n, k}, std::move(value)).first->second;
}

namespace detail {

/// S_lambda(t^mu): each factor t_{mu_i} receives at most one part of lambda;
/// each distinct assignment is counted once.
inline GradedPoly ln_apply_monomial(const std::map<int, int>& remaining, const std::vector<int>& factors,
                                    std::size_t i, const GradedPoly& acc) {
    if (i == factors.size()) {
        for (const auto& [part, count] : remaining)
            if (count) return GradedPoly();
        return acc;
    }
    int left = 0;
    for (const auto& [part, count] : remaining) left += count;
    GradedPoly total;
    if (static_cast<int>(factors.size() - i) > left)
        total += ln_apply_monomial(remaining, factors, i + 1, acc * theta(factors[i]));
    for (const auto& [part, count] : remaining) {
        if (!count || part > factors[i]) continue;
        auto next = remaining;
        --next[part];
        total += ln_apply_monomial(next, factors, i + 1, acc * theta_intersection(factors[i], part));
    }
    return total;
}

}  // namespace detail

/// S_lambda(p). S_empty is the identity.
inline GradedPoly ln_apply(const Partition& lambda, const GradedPoly& p) {
    if (lambda.empty()) return p;
    auto remaining = lambda.multiplicities();
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.weight() < lambda.weight() || m.length() < lambda.length()) continue;
        r += detail::ln_apply_monomial(remaining, m.parts(), 0, GradedPoly(c));
    }
    return r;
}

/// Coefficientwise action on a series with theta-ring coefficients; z is
/// ordinary cohomology and is left fixed.
inline PolySeries ln_apply_series(const Partition& lambda, const PolySeries& f) {
    PolySeries r(f.order());
    for (int m = 0; m <= f.order(); ++m) r[m] = ln_apply(lambda, f[m]);
    return r;
}

/// aug(S_lambda(t^mu)) / (mu+1)!; the Kronecker delta by duality.
inline Rat dual_pairing(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("dual pairing needs partitions of equal weight");
    return aug(ln_apply(lambda, monomial(mu))) / Rat(partition_factorial(mu));
}

// ---------------------------------------------------------------------------
// Quantisation

/// Element of Theta_U (x) S*, with S^lambda already replaced by
/// sigma(S^lambda) = t'^lambda/(lambda+1)!. Keys are (t-monomial, t'-monomial).
class TensorElement {
  public:
    using Key = std::pair<Monomial, Monomial>;
    /// Heavier t side first, then reverse-lex on each side.
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            ReverseLexOrder r;
            if (a.first != b.first) return r(a.first, b.first);
            return r(a.second, b.second);
        }
    };

    void add_term(const Monomial& left, const Monomial& right, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({left, right}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    /// p (x) t'^mu scaled by c.
    void add_product(const GradedPoly& p, const Monomial& right, const Rat& c) {
        for (const auto& [m, a] : p.terms()) add_term(m, right, a * c);
    }

    const std::map<Key, Rat, KeyOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const TensorElement&) const = default;

    friend TensorElement operator+(TensorElement a, const TensorElement& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
        return a;
    }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, -c);
        return a;
    }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first.merged(kb.first), ka.second.merged(kb.second), ca * cb);
        return r;
    }

    /// (t-weight, t'-weight) pairs present.
    std::set<std::pair<int, int>> bidegrees() const {
        std::set<std::pair<int, int>> s;
        for (const auto& [k, c] : terms_) s.emplace(k.first.weight(), k.second.weight());
        return s;
    }

  private:
    std::map<Key, Rat, KeyOrder> terms_;
};

inline std::string to_string(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1) out += to_string(mag) + "*";
        out += monomial_string(k.first, "t") + " ⊗ " + monomial_string(k.second, "t'");
        first = false;
    }
    return out;
}

/// The non-zero S_lambda(x) for all partitions lambda (the empty one first).
inline std::vector<std::pair<Partition, GradedPoly>> ln_orbit(const GradedPoly& x) {
    std::vector<std::pair<Partition, GradedPoly>> out;
    int top = std::max(x.max_weight(), 0);
    for (const auto& lambda : partitions_up_to(top)) {
        GradedPoly s = ln_apply(lambda, x);
        if (!s.is_zero()) out.emplace_back(lambda, std::move(s));
    }
    return out;
}

/// q(x) = sum_lambda S_lambda(x) (x) t'^lambda/(lambda+1)!.
inline TensorElement quantize(const GradedPoly& x) {
    TensorElement r;
    for (const auto& [lambda, s] : ln_orbit(x)) r.add_product(s, lambda, Rat(1) / Rat(partition_factorial(lambda)));
    return r;
}

/// aug on the t side, t' -> t on the other.
inline GradedPoly dequantize(const TensorElement& x) {
    GradedPoly r;
    for (const auto& [k, c] : x.terms())
        if (k.first.empty()) r.add_term(k.second, c);
    return r;
}

// ---------------------------------------------------------------------------
// Formal vector fields on Diff_1

/// S_(k) for k in {1, 2} as the derivation alpha_j -> (j-k+1) alpha_{j-k}
/// (alpha_0 = 1) on Q[alpha_1..alpha_N]. Polynomials reuse GradedPoly with
/// generator j standing for alpha_j.
struct Diff1Field {
    int k = 1;

    GradedPoly image_of_generator(int j) const {
        if (j < k) return GradedPoly();
        return Rat(j - k + 1) * GradedPoly::gen(j - k);
    }

    GradedPoly operator()(const GradedPoly& p, int truncation) const {
        if (k != 1 && k != 2) throw std::invalid_argument("Diff1 fields are S_(1) and S_(2)");
        GradedPoly r;
        for (int j = 1; j <= truncation; ++j) {
            GradedPoly d = partial(p, j);
            if (!d.is_zero()) r += image_of_generator(j) * d;
        }
        return r;
    }
};

/// [S_(1), S_(2)](alpha_j) for 1 <= j <= N.
inline std::vector<GradedPoly> diff1_commutator(int truncation) {
    Diff1Field s1{1}, s2{2};
    std::vector<GradedPoly> out;
    for (int j = 1; j <= truncation; ++j) {
        GradedPoly a = GradedPoly::gen(j);
        out.push_back(s1(s2(a, truncation), truncation) - s2(s1(a, truncation), truncation));
    }
    return out;
}

}  // namespace thetacob
