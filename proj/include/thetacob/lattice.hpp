#pragma once

// Integer lattices in Z^p: Hermite and Smith normal forms, membership and
// containment, and the lattice cut out by rational functionals.

#include "thetacob/matrix.hpp"

#include <algorithm>
#include <tuple>

namespace thetacob {

using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;

namespace detail {

/// (g, x, y) with g = gcd(a, b) >= 0 and x a + y b = g.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt a, BigInt b) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline void axpy_row(IntVector& target, const BigInt& s, const IntVector& source) {
    if (s == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] += s * source[j];
}

}  // namespace detail

/// Row Hermite normal form: zero rows dropped, pivots positive and strictly
/// moving right, entries above each pivot reduced into [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix a) {
    if (a.empty()) return a;
    const std::size_t cols = a.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            auto [g, x, y] = detail::extended_gcd(a[row][col], a[i][col]);
            BigInt u = a[row][col] / g, v = a[i][col] / g;
            IntVector top(cols), bottom(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                top[j] = x * a[row][j] + y * a[i][j];
                bottom[j] = u * a[i][j] - v * a[row][j];
            }
            a[row] = std::move(top);
            a[i] = std::move(bottom);
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (auto& e : a[row]) e = -e;
        for (std::size_t i = 0; i < row; ++i)
            detail::axpy_row(a[i], -detail::floor_div(a[i][col], a[row][col]), a[row]);
        ++row;
    }
    a.resize(row);
    return a;
}

/// Non-zero invariant factors d_1 | d_2 | ... of an integer matrix.
inline std::vector<BigInt> elementary_divisors(IntMatrix a) {
    std::vector<BigInt> out;
    if (a.empty()) return out;
    const std::size_t rows = a.size(), cols = a.front().size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
            if (pi == rows) {
                for (auto& d : out) d = abs(d);
                return out;
            }
            std::swap(a[t], a[pi]);
            for (auto& r : a) std::swap(r[t], r[pj]);
            const BigInt p = a[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                detail::axpy_row(a[i], -(a[i][t] / p), a[t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                BigInt q = a[t][j] / p;
                if (q != 0)
                    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            detail::axpy_row(a[t], BigInt(1), a[bad]);
        }
        out.push_back(abs(a[t][t]));
    }
    return out;
}

/// Sublattice of Z^p stored by its row Hermite basis.
struct Lattice {
    std::size_t ambient = 0;
    IntMatrix basis;

    static Lattice spanned_by(const IntMatrix& generators, std::size_t ambient) {
        return Lattice{ambient, hermite_normal_form(generators)};
    }
    static Lattice full(std::size_t p) {
        IntMatrix id(p, IntVector(p, 0));
        for (std::size_t i = 0; i < p; ++i) id[i][i] = 1;
        return Lattice{p, id};
    }

    std::size_t rank() const { return basis.size(); }

    bool contains(IntVector v) const {
        if (v.size() != ambient) throw std::invalid_argument("lattice membership: dimension mismatch");
        for (const auto& row : basis) {
            std::size_t col = 0;
            while (row[col] == 0) ++col;
            for (std::size_t j = 0; j < col; ++j)
                if (v[j] != 0) return false;
            if (v[col] % row[col] != 0) return false;
            detail::axpy_row(v, -(v[col] / row[col]), row);
        }
        return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
    }

    /// this contains other.
    bool contains(const Lattice& other) const {
        return std::all_of(other.basis.begin(), other.basis.end(), [&](const IntVector& v) { return contains(v); });
    }

    bool operator==(const Lattice& o) const { return ambient == o.ambient && basis == o.basis; }

    /// Invariant factors of Z^p / L (full-rank lattices only).
    std::vector<BigInt> elementary_divisors() const { return thetacob::elementary_divisors(basis); }
};

inline BigInt common_denominator(const RatMatrix& m) {
    BigInt d = 1;
    for (const auto& row : m)
        for (const auto& c : row) d = boost::multiprecision::lcm(d, denominator_of(c));
    return d;
}

/// {x in Z^p : f(x) in Z for every row f}. The dual lattice is spanned by the
/// rows and the unit vectors; with D clearing denominators and B the Hermite
/// basis of D times that span, the answer is spanned by the columns of D B^{-1}.
inline Lattice integral_solutions(const RatMatrix& functionals, std::size_t p) {
    RatMatrix all = functionals;
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<Rat> e(p, Rat(0));
        e[i] = 1;
        all.push_back(std::move(e));
    }
    for (const auto& row : all)
        if (row.size() != p) throw std::invalid_argument("functional has the wrong length");
    BigInt d = common_denominator(all);
    IntMatrix scaled;
    for (const auto& row : all) {
        IntVector r;
        for (const auto& c : row) r.push_back(numerator_of(c * Rat(d)));
        scaled.push_back(std::move(r));
    }
    IntMatrix b = hermite_normal_form(scaled);
    RatMatrix br(p, std::vector<Rat>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) br[i][j] = Rat(b[i][j]);
    RatMatrix inv = inverse(br);
    IntMatrix gens(p, IntVector(p));
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < p; ++i) {
            Rat v = inv[i][j] * Rat(d);
            if (!is_integer(v)) throw std::logic_error("integral_solutions: non-integral basis vector");
            gens[j][i] = numerator_of(v);
        }
    return Lattice::spanned_by(gens, p);
}

}  // namespace thetacob
