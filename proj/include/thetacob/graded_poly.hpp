#pragma once

// The polynomial ring Q[t1, t2, ...] with t_n of weight n. A monomial is stored
// as the multiset of its generator indices (a Partition); the unit monomial is
// the empty multiset. The index 0 is identified with the unit, so t0 == 1.

#include "thetacob/partition.hpp"
#include "thetacob/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace thetacob {

using Monomial = Partition;

/// Raised by substitute() when the assignment does not cover a generator.
class missing_assignment : public std::invalid_argument {
  public:
    explicit missing_assignment(int index)
        : std::invalid_argument("no value assigned to generator t" + std::to_string(index)),
          index_(index) {}
    int index() const { return index_; }

  private:
    int index_;
};

class GradedPoly {
  public:
    /// Terms in graded-lex order: heavier monomials first, then reverse-lex.
    using TermMap = std::map<Monomial, Rat, ReverseLexOrder>;

    GradedPoly() = default;
    GradedPoly(int c) { add_term({}, Rat(c)); }  // NOLINT: implicit scalar lift
    GradedPoly(const Rat& c) { add_term({}, c); }  // NOLINT
    GradedPoly(const Monomial& m, const Rat& c) { add_term(m, c); }

    /// The generator t_n; t_0 is the unit.
    static GradedPoly gen(int n) {
        if (n < 0) throw std::invalid_argument("negative generator index");
        if (n == 0) return GradedPoly(1);
        return GradedPoly(Monomial{n}, Rat(1));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    GradedPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator-(GradedPoly a) { return a *= Rat(-1); }
    friend GradedPoly operator*(GradedPoly a, const Rat& s) { return a *= s; }
    friend GradedPoly operator*(const Rat& s, GradedPoly a) { return a *= s; }
    friend GradedPoly operator/(GradedPoly a, const Rat& s) {
        if (s == 0) throw std::domain_error("division by zero");
        return a *= Rat(1) / s;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.merged(mb), ca * cb);
        return r;
    }

    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

    /// Weight of the heaviest term; -1 for the zero polynomial.
    int max_weight() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }
    int min_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

    /// Largest generator index occurring (0 if none).
    int max_generator() const {
        int g = 0;
        for (const auto& [m, c] : terms_)
            if (!m.empty()) g = std::max(g, m[0]);
        return g;
    }

    GradedPoly homogeneous_component(int w) const {
        GradedPoly r;
        for (const auto& [m, c] : terms_)
            if (m.weight() == w) r.terms_.emplace(m, c);
        return r;
    }

    bool is_homogeneous_of(int w) const {
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return false;
        return true;
    }

    /// Applies an integer weight-dependent scale: sum c * f(weight) * m.
    template <class F>
    GradedPoly map_by_weight(F&& f) const {
        GradedPoly r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * f(m.weight()));
        return r;
    }

  private:
    TermMap terms_;
};

inline GradedPoly pow(const GradedPoly& p, int e) {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    GradedPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

/// The monomial t^mu = prod t_{mu_j}.
inline GradedPoly monomial(const Partition& mu) { return GradedPoly(mu, Rat(1)); }

/// Augmentation: the coefficient of the unit monomial.
inline Rat aug(const GradedPoly& p) { return p.coefficient({}); }

/// True iff every coefficient is an integer.
inline bool is_integral(const GradedPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!is_integer(c)) return false;
    return true;
}

/// Image under the ring homomorphism t_n -> phi(n). phi returns nullopt for
/// generators it does not cover.
inline Rat substitute(const GradedPoly& p, const std::function<std::optional<Rat>(int)>& phi) {
    std::map<int, Rat> cache;
    auto value = [&](int n) -> const Rat& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        auto v = phi(n);
        if (!v) throw missing_assignment(n);
        return cache.emplace(n, *v).first->second;
    };
    Rat total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat term = c;
        for (int idx : m.parts()) term *= value(idx);
        total += term;
    }
    return total;
}

inline Rat substitute(const GradedPoly& p, const std::map<int, Rat>& phi) {
    return substitute(p, [&](int n) -> std::optional<Rat> {
        auto it = phi.find(n);
        if (it == phi.end()) return std::nullopt;
        return it->second;
    });
}

/// Ring endomorphism t_n -> images(n) (images are polynomials).
inline GradedPoly substitute_poly(const GradedPoly& p,
                                  const std::function<GradedPoly(int)>& images) {
    std::map<int, GradedPoly> cache;
    GradedPoly total;
    for (const auto& [m, c] : p.terms()) {
        GradedPoly term(c);
        for (int idx : m.parts()) {
            auto it = cache.find(idx);
            if (it == cache.end()) it = cache.emplace(idx, images(idx)).first;
            term *= it->second;
        }
        total += term;
    }
    return total;
}

/// Formal partial derivative with respect to t_n.
inline GradedPoly partial(const GradedPoly& p, int n) {
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        int mult = 0;
        std::vector<int> rest;
        bool removed = false;
        for (int idx : m.parts()) {
            if (idx == n) {
                ++mult;
                if (!removed) {
                    removed = true;
                    continue;
                }
            }
            rest.push_back(idx);
        }
        if (mult) r.add_term(Monomial(std::move(rest)), c * mult);
    }
    return r;
}

/// "t1^2*t3" with indices ascending; the unit monomial renders as "1".
inline std::string monomial_string(const Monomial& m, const std::string& var = "t") {
    if (m.empty()) return "1";
    std::string s;
    auto mult = m.multiplicities();  // ascending by index
    bool first = true;
    for (const auto& [idx, e] : mult) {
        if (!first) s += '*';
        first = false;
        s += var + std::to_string(idx);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

/// Canonical rendering, e.g. "-t2 + 3/2*t1^2". Terms are sorted graded-lex
/// descending; unit coefficients are omitted; the zero polynomial is "0".
inline std::string to_string(const GradedPoly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.empty()) {
            s += to_string(mag);
        } else {
            if (mag != 1) s += to_string(mag) + '*';
            s += monomial_string(m, var);
        }
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << to_string(p); }

}  // namespace thetacob
