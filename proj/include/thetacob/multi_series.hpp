#pragma once

// Power series in V formal variables truncated by total degree, and the formal
// group law F(u, v) = beta(beta^{-1}(u) + beta^{-1}(v)).

#include "thetacob/series.hpp"

#include <array>
#include <map>
#include <numeric>

namespace thetacob {

template <class C, std::size_t V>
class MultiSeries {
  public:
    using Exponent = std::array<int, V>;
    using Traits = coeff_traits<C>;

    explicit MultiSeries(int order = 0) : order_(order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static MultiSeries variable(std::size_t i, int order) {
        MultiSeries s(order);
        Exponent e{};
        e.at(i) = 1;
        if (order >= 1) s.terms_.emplace(e, C(1));
        return s;
    }
    static MultiSeries constant(const C& c, int order) {
        MultiSeries s(order);
        s.add_term(Exponent{}, c);
        return s;
    }
    /// f(x_i) as a series in all V variables.
    static MultiSeries lift(const TruncSeries<C>& f, std::size_t i, int order) {
        MultiSeries s(order);
        for (int m = 0; m <= std::min(order, f.order()); ++m) {
            Exponent e{};
            e.at(i) = m;
            s.add_term(e, f[m]);
        }
        return s;
    }

    static int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

    int order() const { return order_; }
    const std::map<Exponent, C>& terms() const { return terms_; }

    C coefficient(const Exponent& e) const {
        if (degree(e) > order_) throw truncation_error("multivariate coefficient beyond truncation order");
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const Exponent& e, const C& c) {
        if (degree(e) > order_ || Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const MultiSeries& o) const { return order_ == o.order_ && terms_ == o.terms_; }

    MultiSeries truncated(int order) const {
        MultiSeries r(order);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    MultiSeries& operator+=(const MultiSeries& o) {
        if (o.order_ < order_) *this = truncated(o.order_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiSeries& operator-=(const MultiSeries& o) {
        if (o.order_ < order_) *this = truncated(o.order_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r(std::min(a.order_, b.order_));
        for (const auto& [ea, ca] : a.terms_) {
            int da = degree(ea);
            if (da > r.order_) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + degree(eb) > r.order_) continue;
                Exponent e;
                for (std::size_t i = 0; i < V; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiSeries scaled(const C& c) const {
        MultiSeries r(order_);
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }

    /// Permutes variables: result variable perm[i] receives this series' variable i.
    MultiSeries permuted(const std::array<std::size_t, V>& perm) const {
        MultiSeries r(order_);
        for (const auto& [e, c] : terms_) {
            Exponent p{};
            for (std::size_t i = 0; i < V; ++i) p[perm[i]] = e[i];
            r.add_term(p, c);
        }
        return r;
    }

  private:
    int order_;
    std::map<Exponent, C> terms_;
};

template <class C>
using BiTruncSeries = MultiSeries<C, 2>;

/// f(X) = sum f_k X^k for a multivariate X with zero constant term.
template <class C, std::size_t V>
MultiSeries<C, V> compose(const TruncSeries<C>& f, const MultiSeries<C, V>& x) {
    if (!coeff_traits<C>::is_zero(x.coefficient({}))) throw composition_domain_error("inner series must have zero constant term");
    int n = std::min(f.order(), x.order());
    MultiSeries<C, V> result = MultiSeries<C, V>::constant(f[0], n);
    MultiSeries<C, V> power = MultiSeries<C, V>::constant(C(1), n);
    MultiSeries<C, V> inner = x.truncated(n);
    for (int k = 1; k <= n; ++k) {
        power = power * inner;
        if (coeff_traits<C>::is_zero(f[k])) continue;
        result += power.scaled(f[k]);
    }
    return result;
}

/// F(X_1, ..., X_V) for series X_i in W variables, each with zero constant term.
template <class C, std::size_t V, std::size_t W>
MultiSeries<C, W> substitute(const MultiSeries<C, V>& f, const std::array<MultiSeries<C, W>, V>& xs) {
    int n = f.order();
    for (const auto& x : xs) {
        if (!coeff_traits<C>::is_zero(x.coefficient({}))) throw composition_domain_error("substituted series must have zero constant term");
        n = std::min(n, x.order());
    }
    // powers[i][k] = xs[i]^k
    std::array<std::vector<MultiSeries<C, W>>, V> powers;
    for (std::size_t i = 0; i < V; ++i) {
        powers[i].push_back(MultiSeries<C, W>::constant(C(1), n));
        MultiSeries<C, W> xi = xs[i].truncated(n);
        for (int k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * xi);
    }
    MultiSeries<C, W> result(n);
    for (const auto& [e, c] : f.terms()) {
        if (MultiSeries<C, V>::degree(e) > n) continue;
        MultiSeries<C, W> term = MultiSeries<C, W>::constant(c, n);
        for (std::size_t i = 0; i < V; ++i)
            if (e[i]) term = term * powers[i][e[i]];
        result += term;
    }
    return result;
}

/// F(u, v) = exp_series(log_series(u) + log_series(v)) to total order N, where
/// log_series is the compositional inverse of exp_series.
template <class C>
BiTruncSeries<C> formal_group_law(const TruncSeries<C>& exp_series, int order) {
    if (order > exp_series.order()) throw truncation_error("formal group law order exceeds the series truncation");
    TruncSeries<C> e = exp_series.truncated(order);
    TruncSeries<C> l = revert(e);
    auto x = BiTruncSeries<C>::lift(l, 0, order) + BiTruncSeries<C>::lift(l, 1, order);
    return compose(e, x);
}

}  // namespace thetacob
