#pragma once

// Truncated power series sum_{m=0}^{N} f_m z^m over an exact coefficient ring
// (Rat or GradedPoly). Operations never look past the truncation order; binary
// operations truncate to the smaller order of their operands.

#include "thetacob/graded_poly.hpp"
#include "thetacob/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetacob {

class series_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised by inverse() when the constant term is not an invertible scalar.
class non_invertible_series : public series_error {
  public:
    using series_error::series_error;
};

/// Raised by compose() when the inner series has a nonzero constant term.
class composition_domain_error : public series_error {
  public:
    using series_error::series_error;
};

/// Raised by revert() unless f = z + O(z^2).
class not_normalized_error : public series_error {
  public:
    using series_error::series_error;
};

class truncation_error : public series_error {
  public:
    using series_error::series_error;
};

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rat> {
    static bool is_zero(const Rat& c) { return c == 0; }
    static std::optional<Rat> scalar_value(const Rat& c) { return c; }
    static std::string render(const Rat& c) { return to_string(c); }
    static bool single_term(const Rat&) { return true; }
};

template <>
struct coeff_traits<GradedPoly> {
    static bool is_zero(const GradedPoly& c) { return c.is_zero(); }
    static std::optional<Rat> scalar_value(const GradedPoly& c) {
        if (c.max_weight() > 0) return std::nullopt;
        return aug(c);
    }
    static std::string render(const GradedPoly& c) { return to_string(c); }
    static bool single_term(const GradedPoly& c) { return c.size() <= 1; }
};

template <class C>
class TruncSeries {
  public:
    using Traits = coeff_traits<C>;

    TruncSeries() : coeffs_(1) {}
    explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}
    TruncSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static TruncSeries constant(const C& c, int order) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncSeries identity(int order) {
        TruncSeries s(order);
        if (order >= 1) s.coeffs_[1] = C(1);
        return s;
    }
    /// z^k truncated at `order`.
    static TruncSeries monomial(int k, int order) {
        TruncSeries s(order);
        if (k <= order) s.coeffs_[k] = C(1);
        return s;
    }
    /// Exponential-generating-function form: f_m = a_m / m!.
    static TruncSeries from_egf(const std::vector<C>& a) {
        TruncSeries s(static_cast<int>(a.size()) - 1);
        for (std::size_t m = 0; m < a.size(); ++m) s.coeffs_[m] = a[m] * (Rat(1) / Rat(factorial(static_cast<int>(m))));
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](int m) const { return coeffs_.at(m); }
    C& operator[](int m) { return coeffs_.at(m); }

    /// Coefficient of z^m; m must not exceed the truncation order.
    const C& coefficient(int m) const {
        if (m < 0 || m > order())
            throw truncation_error("coefficient z^" + std::to_string(m) + " beyond truncation order " +
                                   std::to_string(order()));
        return coeffs_[m];
    }

    /// m! times the coefficient of z^m.
    C egf_coefficient(int m) const { return coefficient(m) * Rat(factorial(m)); }

    TruncSeries truncated(int order) const {
        TruncSeries r(order);
        for (int m = 0; m <= std::min(order, this->order()); ++m) r.coeffs_[m] = coeffs_[m];
        return r;
    }

    /// Optional grading contract: f_m homogeneous of weight m - shift.
    const std::optional<int>& grade_shift() const { return grade_shift_; }
    TruncSeries& set_grade_shift(std::optional<int> s) {
        grade_shift_ = s;
        return *this;
    }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return Traits::is_zero(c); });
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        truncate_to(o.order());
        for (int m = 0; m <= order(); ++m) coeffs_[m] += o.coeffs_[m];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        truncate_to(o.order());
        for (int m = 0; m <= order(); ++m) coeffs_[m] -= o.coeffs_[m];
        return *this;
    }
    TruncSeries& operator*=(const Rat& s) {
        for (auto& c : coeffs_) c = c * s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) { return a *= Rat(-1); }
    friend TruncSeries operator*(TruncSeries a, const Rat& s) { return a *= s; }
    friend TruncSeries operator*(const Rat& s, TruncSeries a) { return a *= s; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (Traits::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (Traits::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Multiplies every coefficient by the ring element c.
    TruncSeries scaled(const C& c) const {
        TruncSeries r(order());
        for (int m = 0; m <= order(); ++m) r.coeffs_[m] = coeffs_[m] * c;
        return r;
    }

    /// z^k * f, keeping the truncation order.
    TruncSeries shifted_up(int k) const {
        TruncSeries r(order());
        for (int m = 0; m + k <= order(); ++m) r.coeffs_[m + k] = coeffs_[m];
        return r;
    }

    /// f / z^k; requires f_0 .. f_{k-1} = 0. The order drops by k.
    TruncSeries shifted_down(int k) const {
        for (int m = 0; m < k && m <= order(); ++m)
            if (!Traits::is_zero(coeffs_[m])) throw series_error("series not divisible by z^" + std::to_string(k));
        if (k > order()) throw truncation_error("shift exceeds truncation order");
        TruncSeries r(order() - k);
        for (int m = k; m <= order(); ++m) r.coeffs_[m - k] = coeffs_[m];
        return r;
    }

    /// Checks the grade_shift contract (true when no contract is set).
    bool grading_consistent() const;

  private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        return order;
    }
    void truncate_to(int n) {
        if (n < order()) coeffs_.resize(n + 1);
    }

    std::vector<C> coeffs_;
    std::optional<int> grade_shift_;
};

template <>
inline bool TruncSeries<Rat>::grading_consistent() const {
    return true;
}

template <>
inline bool TruncSeries<GradedPoly>::grading_consistent() const {
    if (!grade_shift_) return true;
    for (int m = 0; m <= order(); ++m)
        if (!coeffs_[m].is_homogeneous_of(m - *grade_shift_)) return false;
    return true;
}

/// Multiplicative inverse; f_0 must be a nonzero scalar.
template <class C>
TruncSeries<C> inverse(const TruncSeries<C>& f) {
    using Traits = coeff_traits<C>;
    auto c0 = Traits::scalar_value(f[0]);
    if (!c0 || *c0 == 0) throw non_invertible_series("constant term is not an invertible scalar");
    Rat inv0 = Rat(1) / *c0;
    int n = f.order();
    TruncSeries<C> g(n);
    g[0] = C(inv0);
    for (int m = 1; m <= n; ++m) {
        C acc{};
        for (int k = 1; k <= m; ++k)
            if (!Traits::is_zero(f[k]) && !Traits::is_zero(g[m - k])) acc += f[k] * g[m - k];
        g[m] = acc * (-inv0);
    }
    return g;
}

/// f^k for any integer k (negative k requires an invertible constant term).
template <class C>
TruncSeries<C> pow(const TruncSeries<C>& f, int k) {
    if (k < 0) return pow(inverse(f), -k);
    TruncSeries<C> r = TruncSeries<C>::constant(C(1), f.order());
    TruncSeries<C> base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

/// f(g(z)); requires g_0 = 0.
template <class C>
TruncSeries<C> compose(const TruncSeries<C>& f, const TruncSeries<C>& g) {
    using Traits = coeff_traits<C>;
    if (!Traits::is_zero(g[0])) throw composition_domain_error("inner series must have zero constant term");
    int n = std::min(f.order(), g.order());
    TruncSeries<C> result = TruncSeries<C>::constant(f[0], n);
    TruncSeries<C> power = TruncSeries<C>::constant(C(1), n);
    TruncSeries<C> inner = g.truncated(n);
    for (int k = 1; k <= n; ++k) {
        power = power * inner;
        if (Traits::is_zero(f[k])) continue;
        result += power.scaled(f[k]);
    }
    return result;
}

/// Compositional inverse g of f = z + O(z^2), solved order by order:
/// g_m = -sum_{k=2}^{m} f_k [z^m] g^k, with [z^m] g^k built from g_1..g_{m-1}.
template <class C>
TruncSeries<C> revert(const TruncSeries<C>& f) {
    using Traits = coeff_traits<C>;
    int n = f.order();
    if (!Traits::is_zero(f[0])) throw not_normalized_error("revert: constant term must vanish");
    if (n >= 1) {
        auto c1 = Traits::scalar_value(f[1]);
        if (!c1 || *c1 != 1) throw not_normalized_error("revert: linear coefficient must be 1");
    }
    TruncSeries<C> g(n);
    if (n == 0) return g;
    g[1] = C(1);
    // powers[k][m] = [z^m] g^k
    std::vector<std::vector<C>> powers(n + 1, std::vector<C>(n + 1));
    powers[0][0] = C(1);
    powers[1][1] = C(1);
    for (int m = 2; m <= n; ++m) {
        C acc{};
        for (int k = 2; k <= m; ++k) {
            C pk{};
            for (int j = 1; j <= m - k + 1; ++j) {
                if (Traits::is_zero(g[j]) || Traits::is_zero(powers[k - 1][m - j])) continue;
                pk += g[j] * powers[k - 1][m - j];
            }
            powers[k][m] = pk;
            if (!Traits::is_zero(f[k]) && !Traits::is_zero(pk)) acc += f[k] * pk;
        }
        g[m] = -acc;
        powers[1][m] = g[m];
    }
    return g;
}

/// Formal derivative; the order drops by one.
template <class C>
TruncSeries<C> derivative(const TruncSeries<C>& f) {
    if (f.order() == 0) return TruncSeries<C>(0);
    TruncSeries<C> d(f.order() - 1);
    for (int m = 1; m <= f.order(); ++m) d[m - 1] = f[m] * Rat(m);
    return d;
}

/// log f for f_0 = 1.
template <class C>
TruncSeries<C> log(const TruncSeries<C>& f) {
    auto c0 = coeff_traits<C>::scalar_value(f[0]);
    if (!c0 || *c0 != 1) throw series_error("log: constant term must be 1");
    int n = f.order();
    TruncSeries<C> r(n);
    if (n == 0) return r;
    TruncSeries<C> q = derivative(f) * inverse(f.truncated(n - 1));
    for (int m = 1; m <= n; ++m) r[m] = q[m - 1] * (Rat(1) / Rat(m));
    return r;
}

/// exp g for g_0 = 0, via E_m = (1/m) sum_{k=1}^m k g_k E_{m-k}.
template <class C>
TruncSeries<C> exp(const TruncSeries<C>& g) {
    using Traits = coeff_traits<C>;
    if (!Traits::is_zero(g[0])) throw series_error("exp: constant term must vanish");
    int n = g.order();
    TruncSeries<C> e(n);
    e[0] = C(1);
    for (int m = 1; m <= n; ++m) {
        C acc{};
        for (int k = 1; k <= m; ++k)
            if (!Traits::is_zero(g[k]) && !Traits::is_zero(e[m - k])) acc += g[k] * e[m - k] * Rat(k);
        e[m] = acc * (Rat(1) / Rat(m));
    }
    return e;
}

/// (n+1)! [z^{n+1}] f^{k+1}: the residue (n+1)!/(2 pi i) \oint f^{k+1} dz / z^{n+2}.
template <class C>
C residue_extract(const TruncSeries<C>& f, int n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("residue_extract: negative index");
    if (n + 1 > f.order())
        throw truncation_error("residue_extract: z^" + std::to_string(n + 1) + " beyond truncation order " +
                               std::to_string(f.order()));
    return pow(f.truncated(n + 1), k + 1)[n + 1] * Rat(factorial(n + 1));
}

/// "z + 1/2*t1*z^2 + (...)*z^3"; multi-term coefficients are parenthesised.
template <class C>
std::string to_string(const TruncSeries<C>& f, const std::string& var = "z") {
    using Traits = coeff_traits<C>;
    std::string s;
    bool first = true;
    for (int m = 0; m <= f.order(); ++m) {
        const C& c = f[m];
        if (Traits::is_zero(c)) continue;
        std::string body = Traits::render(c);
        bool negative = false;
        if (Traits::single_term(c) && body[0] == '-') {
            negative = true;
            body = body.substr(1);
        }
        std::string zpart = m == 0 ? "" : (m == 1 ? var : var + "^" + std::to_string(m));
        std::string term;
        if (!Traits::single_term(c)) term = "(" + body + ")" + (zpart.empty() ? "" : "*" + zpart);
        else if (zpart.empty()) term = body;
        else if (body == "1") term = zpart;
        else term = body + "*" + zpart;
        if (first) s += negative ? "-" + term : term;
        else s += (negative ? " - " : " + ") + term;
        first = false;
    }
    if (first) s = "0";
    s += " + O(" + var + "^" + std::to_string(f.order() + 1) + ")";
    return s;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const TruncSeries<C>& f) {
    return os << to_string(f);
}

}  // namespace thetacob
