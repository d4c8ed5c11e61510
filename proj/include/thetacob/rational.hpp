#pragma once

// Exact integers and rationals plus the small combinatorial number suppliers
// (factorials, binomials, Bernoulli and Catalan numbers) used everywhere else.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetacob {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Canonical exact rational: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mp::number<mp::cpp_rational_backend, mp::et_off>;

inline BigInt numerator_of(const Rat& r) { return BigInt(mp::numerator(r)); }
inline BigInt denominator_of(const Rat& r) { return BigInt(mp::denominator(r)); }

inline bool is_integer(const Rat& r) { return mp::denominator(r) == 1; }

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const BigInt& i) { return i.str(); }

/// Parses "a" or "a/b" (optional leading sign, decimal digits only).
inline Rat parse_rat(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("malformed rational: '" + text + "'");
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(parse_int(text.substr(0, slash))) / Rat(den);
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline BigInt ipow(const BigInt& base, int e) {
    if (e < 0) throw std::domain_error("negative exponent");
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline Rat rpow(const Rat& base, int e) {
    if (e < 0) return Rat(1) / rpow(base, -e);
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// C_n = binom(2n, n) / (n + 1).
inline BigInt catalan(int n) {
    if (n < 0) throw std::domain_error("catalan of negative index");
    return binomial(2 * n, n) / (n + 1);
}

namespace detail {

// Akiyama–Tanigawa produces B_1 = +1/2; the sign is flipped on read.
struct BernoulliTable {
    std::mutex mu;
    std::vector<Rat> values;

    Rat get(int n) {
        std::lock_guard<std::mutex> lock(mu);
        if (static_cast<int>(values.size()) <= n) extend(n);
        return values[n];
    }

  private:
    void extend(int n) {
        int target = n + 1;
        values.clear();
        std::vector<Rat> a(target);
        for (int m = 0; m < target; ++m) {
            a[m] = Rat(1) / Rat(m + 1);
            for (int j = m; j >= 1; --j) a[j - 1] = Rat(j) * (a[j - 1] - a[j]);
            values.push_back(a[0]);
        }
    }
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace detail

/// Bernoulli number B_n with B_1 = -1/2.
inline Rat bernoulli(int n) {
    if (n < 0) throw std::domain_error("bernoulli of negative index");
    Rat b = detail::bernoulli_table().get(n);
    return n == 1 ? Rat(-b) : b;
}

}  // namespace thetacob
