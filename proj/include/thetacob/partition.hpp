#pragma once

#include "thetacob/rational.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetacob {

/// Weakly decreasing tuple of positive integers. The empty partition is allowed.
///
/// The same type doubles as a multiset of generator indices (a monomial key)
/// in the graded ring.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool is_one_part() const { return parts_.size() == 1; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Multiset union.
    Partition merged(const Partition& other) const {
        std::vector<int> all = parts_;
        all.insert(all.end(), other.parts_.begin(), other.parts_.end());
        return Partition(std::move(all));
    }

    /// Multiplicity of each part value.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    /// Lexicographic on the descending part sequence.
    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// Orders partitions of equal weight so that (n) comes first and (1,...,1) last.
/// Mixed weights sort by weight descending first.
struct ReverseLexOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa > wb;
        return a > b;
    }
};

/// "2,1" form; the empty partition renders as "".
inline std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("malformed partition: '" + text + "'");
        for (char c : cur)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    if (text.empty()) return {};
    for (char c : text) {
        if (c == ' ') continue;
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return Partition(std::move(parts));
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// All partitions with weight in [0, n], ordered by weight ascending then reverse-lex.
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto ps = partitions_of(w);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// (lambda + 1)! = prod (i_j + 1)!.
inline BigInt partition_factorial(const Partition& p) {
    BigInt r = 1;
    for (int part : p.parts()) r *= factorial(part + 1);
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << to_string(p) << ")"; }

}  // namespace thetacob
