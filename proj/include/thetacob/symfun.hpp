#pragma once

// Symmetric functions of a fixed weight in the m/e/h/p bases, the involution
// p_k -> -p_k, and Chern-number vectors viewed as linear functionals on them.
//
// Internally everything pivots through the power-sum basis, where the
// involution is diagonal.

#include "thetacob/matrix.hpp"
#include "thetacob/partition.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace thetacob {

enum class SymBasis { monomial = 0, elementary = 1, complete = 2, power_sum = 3 };

inline char basis_letter(SymBasis b) {
    switch (b) {
        case SymBasis::monomial: return 'm';
        case SymBasis::elementary: return 'e';
        case SymBasis::complete: return 'h';
        case SymBasis::power_sum: return 'p';
    }
    return '?';
}

inline SymBasis parse_sym_basis(char c) {
    switch (c) {
        case 'm': return SymBasis::monomial;
        case 'e': return SymBasis::elementary;
        case 'h': return SymBasis::complete;
        case 'p': return SymBasis::power_sum;
        default: throw std::invalid_argument(std::string("unknown symmetric-function basis '") + c + "'");
    }
}

using PartitionMap = std::map<Partition, Rat, ReverseLexOrder>;

/// Conversion tables for one weight. Row lambda of to_p[b] expands b_lambda in p.
struct SymTables {
    int weight = 0;
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::array<RatMatrix, 4> to_p;
    std::array<RatMatrix, 4> from_p;

    std::size_t dim() const { return parts.size(); }
    std::size_t at(const Partition& p) const {
        auto it = index.find(p);
        if (it == index.end()) throw std::invalid_argument("partition " + to_string(p) + " has the wrong weight");
        return it->second;
    }
    /// Row lambda expands from_lambda in the target basis.
    RatMatrix transition(SymBasis from, SymBasis to) const {
        return multiply(to_p[static_cast<int>(from)], from_p[static_cast<int>(to)]);
    }
    /// Matrix of p_k -> -p_k acting on basis b (row lambda = image of b_lambda).
    RatMatrix involution(SymBasis b) const {
        RatMatrix d = identity_matrix(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (parts[i].length() % 2) d[i][i] = -1;
        return multiply(multiply(to_p[static_cast<int>(b)], d), from_p[static_cast<int>(b)]);
    }
};

namespace detail {

/// z_mu = prod i^{m_i} m_i!.
inline BigInt z_factor(const Partition& mu) {
    BigInt z = 1;
    for (const auto& [part, mult] : mu.multiplicities()) z *= ipow(BigInt(part), mult) * factorial(mult);
    return z;
}

inline PartitionMap multiply_p(const PartitionMap& a, const PartitionMap& b) {
    PartitionMap r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            Rat& slot = r[pa.merged(pb)];
            slot += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

/// e_k (signed) or h_k in the p basis.
inline PartitionMap one_part_in_p(int k, bool elementary) {
    PartitionMap r;
    for (const auto& mu : partitions_of(k)) {
        Rat c = Rat(1) / Rat(z_factor(mu));
        if (elementary && (k - mu.length()) % 2) c = -c;
        r[mu] = c;
    }
    return r;
}

/// Coefficient of x^lambda in p_mu: counts maps from the parts of mu onto the
/// slots of lambda with matching block sums.
inline long long p_to_m_entry(const Partition& mu, const Partition& lambda) {
    const auto& lp = lambda.parts();
    std::size_t slots = lp.size();
    std::vector<std::size_t> radix(slots);
    std::size_t states = 1;
    for (std::size_t j = 0; j < slots; ++j) {
        radix[j] = states;
        states *= static_cast<std::size_t>(lp[j] + 1);
    }
    std::vector<long long> cur(states, 0), next(states);
    cur[0] = 1;
    for (int part : mu.parts()) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t s = 0; s < states; ++s) {
            if (!cur[s]) continue;
            for (std::size_t j = 0; j < slots; ++j) {
                int filled = static_cast<int>((s / radix[j]) % static_cast<std::size_t>(lp[j] + 1));
                if (filled + part <= lp[j]) next[s + static_cast<std::size_t>(part) * radix[j]] += cur[s];
            }
        }
        std::swap(cur, next);
    }
    return cur[states - 1];
}

inline std::shared_ptr<const SymTables> build_sym_tables(int n) {
    auto t = std::make_shared<SymTables>();
    t->weight = n;
    t->parts = partitions_of(n);
    for (std::size_t i = 0; i < t->parts.size(); ++i) t->index[t->parts[i]] = i;
    std::size_t d = t->parts.size();

    auto to_row = [&](const PartitionMap& expansion) {
        std::vector<Rat> row(d, Rat(0));
        for (const auto& [mu, c] : expansion) row[t->at(mu)] = c;
        return row;
    };

    std::vector<PartitionMap> e_k(n + 1), h_k(n + 1);
    for (int k = 1; k <= n; ++k) {
        e_k[k] = one_part_in_p(k, true);
        h_k[k] = one_part_in_p(k, false);
    }
    RatMatrix e_rows, h_rows;
    for (const auto& lambda : t->parts) {
        PartitionMap e{{Partition{}, Rat(1)}}, h{{Partition{}, Rat(1)}};
        for (int part : lambda.parts()) {
            e = multiply_p(e, e_k[part]);
            h = multiply_p(h, h_k[part]);
        }
        e_rows.push_back(to_row(e));
        h_rows.push_back(to_row(h));
    }

    RatMatrix p_in_m(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p_in_m[i][j] = Rat(p_to_m_entry(t->parts[i], t->parts[j]));

    t->to_p[static_cast<int>(SymBasis::power_sum)] = identity_matrix(d);
    t->from_p[static_cast<int>(SymBasis::power_sum)] = identity_matrix(d);
    t->from_p[static_cast<int>(SymBasis::monomial)] = p_in_m;
    t->to_p[static_cast<int>(SymBasis::monomial)] = inverse(p_in_m);
    t->to_p[static_cast<int>(SymBasis::elementary)] = e_rows;
    t->from_p[static_cast<int>(SymBasis::elementary)] = inverse(e_rows);
    t->to_p[static_cast<int>(SymBasis::complete)] = h_rows;
    t->from_p[static_cast<int>(SymBasis::complete)] = inverse(h_rows);
    return t;
}

}  // namespace detail

/// Cached per weight; safe to call concurrently.
inline std::shared_ptr<const SymTables> sym_tables(int n) {
    if (n < 0) throw std::domain_error("negative symmetric-function weight");
    static std::mutex mutex;
    static std::unordered_map<int, std::shared_ptr<const SymTables>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto built = detail::build_sym_tables(n);
    std::lock_guard lock(mutex);
    return cache.try_emplace(n, std::move(built)).first->second;
}

/// A homogeneous symmetric function of weight n written in one basis.
struct SymFunExpr {
    SymBasis basis = SymBasis::power_sum;
    int weight = 0;
    PartitionMap terms;

    static SymFunExpr element(SymBasis b, const Partition& lambda) {
        return SymFunExpr{b, lambda.weight(), PartitionMap{{lambda, Rat(1)}}};
    }

    Rat coefficient(const Partition& lambda) const {
        auto it = terms.find(lambda);
        return it == terms.end() ? Rat(0) : it->second;
    }

    bool operator==(const SymFunExpr& o) const {
        return basis == o.basis && weight == o.weight && terms == o.terms;
    }
};

namespace detail {
inline std::vector<Rat> sym_vector(const SymFunExpr& x, const SymTables& t) {
    std::vector<Rat> v(t.dim(), Rat(0));
    for (const auto& [lambda, c] : x.terms) v[t.at(lambda)] = c;
    return v;
}

inline SymFunExpr sym_from_vector(SymBasis b, const SymTables& t, const std::vector<Rat>& v) {
    SymFunExpr r{b, t.weight, {}};
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r.terms[t.parts[i]] = v[i];
    return r;
}

/// Row vector times matrix.
inline std::vector<Rat> apply_rows(const std::vector<Rat>& v, const RatMatrix& m) {
    std::vector<Rat> r(m.empty() ? 0 : m[0].size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (m[i][j] != 0) r[j] += v[i] * m[i][j];
    }
    return r;
}
}  // namespace detail

inline SymFunExpr convert_basis(const SymFunExpr& x, SymBasis target) {
    auto t = sym_tables(x.weight);
    auto v = detail::apply_rows(detail::sym_vector(x, *t), t->transition(x.basis, target));
    return detail::sym_from_vector(target, *t, v);
}

/// Image under the ring involution p_k -> -p_k, in the input's basis.
inline SymFunExpr sign_involution(const SymFunExpr& x) {
    auto t = sym_tables(x.weight);
    auto v = detail::apply_rows(detail::sym_vector(x, *t), t->involution(x.basis));
    return detail::sym_from_vector(x.basis, *t, v);
}

/// Product computed in the p basis, returned in a's basis.
inline SymFunExpr operator*(const SymFunExpr& a, const SymFunExpr& b) {
    auto pa = convert_basis(a, SymBasis::power_sum), pb = convert_basis(b, SymBasis::power_sum);
    SymFunExpr prod{SymBasis::power_sum, a.weight + b.weight, detail::multiply_p(pa.terms, pb.terms)};
    return convert_basis(prod, a.basis);
}

inline std::string to_string(const SymFunExpr& x) {
    if (x.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : x.terms) {
        Rat mag = c < 0 ? Rat(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1) out += to_string(mag) + "*";
        out += basis_letter(x.basis);
        out += "[" + to_string(lambda) + "]";
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chern-number vectors

enum class Frame { tangent, normal };
enum class ChernBasis { monomial, chern_product };

inline const char* frame_name(Frame f) { return f == Frame::tangent ? "tangent" : "normal"; }
inline const char* chern_basis_name(ChernBasis b) {
    return b == ChernBasis::monomial ? "monomial" : "chern-product";
}

class incomplete_vector : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Values of a linear functional on weight-n symmetric functions: the value on
/// m_lambda (monomial basis) or on e_lambda = c_{i1}...c_{ik} (chern-product
/// basis). The normal frame evaluates the functional after p_k -> -p_k.
struct ChernVector {
    int weight = 0;
    Frame frame = Frame::tangent;
    ChernBasis basis = ChernBasis::monomial;
    PartitionMap values;

    Rat operator[](const Partition& p) const {
        auto it = values.find(p);
        if (it == values.end()) throw incomplete_vector("missing Chern number for partition " + to_string(p));
        return it->second;
    }
    bool operator==(const ChernVector&) const = default;
};

inline SymBasis sym_basis_of(ChernBasis b) {
    return b == ChernBasis::monomial ? SymBasis::monomial : SymBasis::elementary;
}

/// Keys must be exactly partitions_of(weight).
inline void validate(const ChernVector& c) {
    if (c.weight < 0) throw incomplete_vector("negative weight");
    auto parts = partitions_of(c.weight);
    if (c.values.size() != parts.size())
        throw incomplete_vector("Chern vector of weight " + std::to_string(c.weight) + " needs " +
                                std::to_string(parts.size()) + " entries, got " + std::to_string(c.values.size()));
    for (const auto& p : parts)
        if (!c.values.count(p)) throw incomplete_vector("missing Chern number for partition " + to_string(p));
}

inline ChernVector constant_vector(int n, Frame f, ChernBasis b, const Rat& value) {
    ChernVector c{n, f, b, {}};
    for (const auto& p : partitions_of(n)) c.values[p] = value;
    return c;
}

inline bool is_integral(const ChernVector& c) {
    for (const auto& [p, v] : c.values)
        if (!is_integer(v)) return false;
    return true;
}

namespace detail {
/// new value on lambda = sum_kappa m[lambda][kappa] * old value on kappa.
inline ChernVector apply_functional_map(const ChernVector& c, const RatMatrix& m, const SymTables& t) {
    ChernVector r{c.weight, c.frame, c.basis, {}};
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Rat v = 0;
        for (std::size_t k = 0; k < t.dim(); ++k)
            if (m[i][k] != 0) v += m[i][k] * c[t.parts[k]];
        r.values[t.parts[i]] = v;
    }
    return r;
}
}  // namespace detail

inline ChernVector to_basis(const ChernVector& c, ChernBasis target) {
    validate(c);
    if (c.basis == target) return c;
    auto t = sym_tables(c.weight);
    auto r = detail::apply_functional_map(c, t->transition(sym_basis_of(target), sym_basis_of(c.basis)), *t);
    r.basis = target;
    return r;
}

inline ChernVector chern_product_to_monomial(const ChernVector& c) {
    if (c.basis != ChernBasis::chern_product) throw std::invalid_argument("expected a chern-product vector");
    return to_basis(c, ChernBasis::monomial);
}

inline ChernVector monomial_to_chern_product(const ChernVector& c) {
    if (c.basis != ChernBasis::monomial) throw std::invalid_argument("expected a monomial vector");
    return to_basis(c, ChernBasis::chern_product);
}

/// Exchanges tangent and normal frames; involutive.
inline ChernVector switch_frame(const ChernVector& c) {
    validate(c);
    auto t = sym_tables(c.weight);
    auto r = detail::apply_functional_map(c, t->involution(sym_basis_of(c.basis)), *t);
    r.frame = c.frame == Frame::tangent ? Frame::normal : Frame::tangent;
    return r;
}

inline ChernVector tangent_to_normal(const ChernVector& c) {
    if (c.frame != Frame::tangent) throw std::invalid_argument("expected a tangent-frame vector");
    return switch_frame(c);
}

inline ChernVector normal_to_tangent(const ChernVector& c) {
    if (c.frame != Frame::normal) throw std::invalid_argument("expected a normal-frame vector");
    return switch_frame(c);
}

inline ChernVector converted(const ChernVector& c, Frame frame, ChernBasis basis) {
    ChernVector r = c.frame == frame ? c : switch_frame(c);
    return to_basis(r, basis);
}

/// Chern numbers of a product manifold; both inputs share a frame. The result
/// is in the monomial basis, where c_lambda(A x B) = sum over distinct splits
/// lambda = lambda1 u lambda2 with |lambda1| = dim A.
inline ChernVector product_vector(const ChernVector& a, const ChernVector& b) {
    if (a.frame != b.frame) throw std::invalid_argument("product of Chern vectors in different frames");
    ChernVector am = to_basis(a, ChernBasis::monomial), bm = to_basis(b, ChernBasis::monomial);
    ChernVector r{a.weight + b.weight, a.frame, ChernBasis::monomial, {}};
    for (const auto& lambda : partitions_of(r.weight)) {
        Rat v = 0;
        auto mult = lambda.multiplicities();
        std::vector<std::pair<int, int>> entries(mult.begin(), mult.end());
        std::vector<int> left, right;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == entries.size()) {
                Partition l(left), rr(right);
                if (l.weight() == a.weight) v += am[l] * bm[rr];
                return;
            }
            auto [part, count] = entries[i];
            for (int take = 0; take <= count; ++take) {
                for (int j = 0; j < take; ++j) left.push_back(part);
                for (int j = take; j < count; ++j) right.push_back(part);
                self(self, i + 1);
                left.resize(left.size() - take);
                right.resize(right.size() - (count - take));
            }
        };
        rec(rec, 0);
        r.values[lambda] = v;
    }
    return r;
}

}  // namespace thetacob
