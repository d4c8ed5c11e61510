#pragma once

// Weierstrass sigma, zeta and wp in double precision, the doubly periodic
// harmonic function xi(z) = zeta(z) + a z + b conj(z), and the sections built
// from them on products of an elliptic curve.
//
// Evaluation goes through the Jacobi theta function theta_1(v | tau) in a
// Gauss-reduced basis (w1, w2), tau = w2/w1 with |Re tau| <= 1/2, |tau| >= 1,
// so the nome q = e^{i pi tau} has |q| <= e^{-pi sqrt(3)/2}. With v = pi z/(2 w1):
//   sigma(z) = (2 w1/pi) e^{eta1 z^2/(2 w1)} theta_1(v)/theta_1'(0)
//   zeta(z)  = eta1 z/w1 + (pi/(2 w1)) theta_1'(v)/theta_1(v)
//   wp(z)    = -eta1/w1 - (pi/(2 w1))^2 (log theta_1)''(v)
// where eta1 = -(pi^2/(12 w1)) theta_1'''(0)/theta_1'(0).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetacob {

using cplx = std::complex<double>;

class weierstrass_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class degenerate_lattice : public weierstrass_error {
  public:
    using weierstrass_error::weierstrass_error;
};
class pole_error : public weierstrass_error {
  public:
    using weierstrass_error::weierstrass_error;
};
class convergence_error : public weierstrass_error {
  public:
    using weierstrass_error::weierstrass_error;
};

struct WeierstrassTolerances {
    double legendre = 1e-10;
    double periodicity = 1e-8;
    double half_period = 1e-8;
    double root = 1e-6;
    double dedupe = 1e-5;
    double pole = 1e-10;  // relative to |w1|
};

namespace detail {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

struct ThetaJet {
    cplx value, d1, d2, d3;
};

/// theta_1(v | tau) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) v) and three v-derivatives.
inline ThetaJet theta1_jet(cplx v, cplx tau) {
    ThetaJet r{};
    const cplx ipt = kI * kPi * tau;
    double previous = INFINITY;
    for (int n = 0; n < 400; ++n) {
        const double h = n + 0.5;
        const cplx coeff = std::exp(ipt * (h * h)) * (n % 2 ? -2.0 : 2.0);
        const double k = 2.0 * n + 1.0;
        const cplx s = std::sin(k * v), c = std::cos(k * v);
        const cplx t0 = coeff * s, t1 = coeff * c * k, t2 = -coeff * s * (k * k), t3 = -coeff * c * (k * k * k);
        r.value += t0;
        r.d1 += t1;
        r.d2 += t2;
        r.d3 += t3;
        const double size = std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3);
        const double total = std::abs(r.value) + std::abs(r.d1) + std::abs(r.d2) + std::abs(r.d3);
        if (size < previous && size <= 1e-18 * total) return r;
        previous = size;
    }
    throw convergence_error("theta series did not converge");
}

/// sum_{n>=1} n^p x^n/(1 - x^n).
inline cplx lambert_sum(int p, cplx x) {
    cplx s = 0;
    cplx xn = 1;
    for (int n = 1; n < 2000; ++n) {
        xn *= x;
        const cplx term = std::pow(double(n), p) * xn / (1.0 - xn);
        s += term;
        if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(s))) return s;
    }
    throw convergence_error("Eisenstein q-series did not converge");
}

}  // namespace detail

/// Period lattice 2 omega1 Z + 2 omega2 Z with derived constants.
struct WeierstrassLattice {
    cplx omega1, omega2;
    cplx w1, w2, tau;        // reduced basis of the same lattice
    cplx eta1_r, eta2_r;     // zeta(w1), zeta(w2)
    cplx theta1_prime_zero;  // theta_1'(0 | tau)
    cplx eta1, eta2;         // zeta(omega1), zeta(omega2)
    cplx g2, g3;
    cplx a, b;               // xi coefficients
    WeierstrassTolerances tol;

    cplx omega3() const { return omega1 + omega2; }
    std::array<cplx, 3> half_periods() const { return {omega1, omega2, omega1 + omega2}; }
    double legendre_residual() const {
        return std::abs(eta1 * omega2 - eta2 * omega1 - detail::kI * (detail::kPi / 2));
    }
    /// max over k of |a omega_k + b conj(omega_k) + eta_k|.
    double linear_system_residual() const {
        return std::max(std::abs(a * omega1 + b * std::conj(omega1) + eta1),
                        std::abs(a * omega2 + b * std::conj(omega2) + eta2));
    }
};

namespace detail {

struct Reduced {
    cplx z0;
    long m = 0, n = 0;  // z = z0 + 2 m w1 + 2 n w2
};

/// Real coordinates (x, y) with z = 2 x w1 + 2 y w2.
inline std::pair<double, double> cell_coordinates(cplx z, cplx w1, cplx tau) {
    const cplx s = z / (2.0 * w1);
    const double y = s.imag() / tau.imag();
    return {s.real() - y * tau.real(), y};
}

/// Points within two periods of the origin are evaluated directly; farther
/// points are moved by whole periods first.
inline Reduced reduce(cplx z, const WeierstrassLattice& L) {
    auto [x, y] = cell_coordinates(z, L.w1, L.tau);
    if (std::abs(x) <= 2.0 && std::abs(y) <= 2.0) return {z, 0, 0};
    const long m = std::lround(x), n = std::lround(y);
    return {z - 2.0 * double(m) * L.w1 - 2.0 * double(n) * L.w2, m, n};
}

inline void check_pole(cplx z0, const WeierstrassLattice& L, const char* what) {
    auto [x, y] = cell_coordinates(z0, L.w1, L.tau);
    const cplx nearest = 2.0 * std::round(x) * L.w1 + 2.0 * std::round(y) * L.w2;
    if (std::abs(z0 - nearest) < L.tol.pole * std::abs(L.w1))
        throw pole_error(std::string(what) + ": argument is a lattice point");
}

inline ThetaJet jet_at(cplx z0, const WeierstrassLattice& L) {
    return theta1_jet(kPi * z0 / (2.0 * L.w1), L.tau);
}

inline cplx zeta_direct(cplx z0, const WeierstrassLattice& L, cplx eta1_r) {
    const ThetaJet t = jet_at(z0, L);
    return eta1_r * z0 / L.w1 + (kPi / (2.0 * L.w1)) * t.d1 / t.value;
}

/// eta(2 m w1 + 2 n w2) = 2 m eta1 + 2 n eta2.
inline cplx period_eta(const Reduced& r, const WeierstrassLattice& L) {
    return 2.0 * double(r.m) * L.eta1_r + 2.0 * double(r.n) * L.eta2_r;
}

/// sigma(z0 + lambda) = eps e^{eta(lambda)(z0 + lambda/2)} sigma(z0), eps = -1 unless lambda/2 is a period.
inline cplx sigma_shift_factor(const Reduced& r, const WeierstrassLattice& L) {
    const cplx half = double(r.m) * L.w1 + double(r.n) * L.w2;
    const double eps = (r.m % 2 == 0 && r.n % 2 == 0) ? 1.0 : -1.0;
    return eps * std::exp(period_eta(r, L) * (r.z0 + half));
}

}  // namespace detail

inline cplx zeta_w(cplx z, const WeierstrassLattice& L) {
    auto r = detail::reduce(z, L);
    detail::check_pole(r.z0, L, "zeta");
    return detail::zeta_direct(r.z0, L, L.eta1_r) + detail::period_eta(r, L);
}

inline cplx wp(cplx z, const WeierstrassLattice& L) {
    auto r = detail::reduce(z, L);
    detail::check_pole(r.z0, L, "wp");
    const auto t = detail::jet_at(r.z0, L);
    const cplx k = detail::kPi / (2.0 * L.w1);
    const cplx l1 = t.d1 / t.value;
    return -L.eta1_r / L.w1 - k * k * (t.d2 / t.value - l1 * l1);
}

inline cplx wp_prime(cplx z, const WeierstrassLattice& L) {
    auto r = detail::reduce(z, L);
    detail::check_pole(r.z0, L, "wp'");
    const auto t = detail::jet_at(r.z0, L);
    const cplx k = detail::kPi / (2.0 * L.w1);
    const cplx l1 = t.d1 / t.value, l2 = t.d2 / t.value, l3 = t.d3 / t.value;
    return -k * k * k * (l3 - 3.0 * l1 * l2 + 2.0 * l1 * l1 * l1);
}

inline cplx sigma_w(cplx z, const WeierstrassLattice& L) {
    auto r = detail::reduce(z, L);
    const auto t = detail::jet_at(r.z0, L);
    const cplx base = (2.0 * L.w1 / detail::kPi) * std::exp(L.eta1_r * r.z0 * r.z0 / (2.0 * L.w1)) * t.value /
                      L.theta1_prime_zero;
    return base * detail::sigma_shift_factor(r, L);
}

/// sigma'(z) = sigma(z) zeta(z); entire.
inline cplx sigma_prime_w(cplx z, const WeierstrassLattice& L) {
    auto r = detail::reduce(z, L);
    const auto t = detail::jet_at(r.z0, L);
    const cplx pre = (2.0 * L.w1 / detail::kPi) * std::exp(L.eta1_r * r.z0 * r.z0 / (2.0 * L.w1)) / L.theta1_prime_zero;
    const cplx s0 = pre * t.value;
    const cplx ds0 = pre * (L.eta1_r * r.z0 / L.w1 * t.value + (detail::kPi / (2.0 * L.w1)) * t.d1);
    return detail::sigma_shift_factor(r, L) * (ds0 + detail::period_eta(r, L) * s0);
}

inline WeierstrassLattice lattice_init(cplx omega1, cplx omega2, WeierstrassTolerances tol = {}) {
    using detail::kPi;
    if (!std::isfinite(omega1.real()) || !std::isfinite(omega1.imag()) || !std::isfinite(omega2.real()) ||
        !std::isfinite(omega2.imag()) || std::abs(omega1) == 0.0)
        throw degenerate_lattice("half-periods must be finite and non-zero");
    if (!((omega2 / omega1).imag() > 1e-12)) throw degenerate_lattice("need Im(omega2/omega1) > 0");
    WeierstrassLattice L;
    L.tol = tol;
    L.omega1 = omega1;
    L.omega2 = omega2;
    cplx w1 = omega1, w2 = omega2;
    for (int iter = 0;; ++iter) {
        if (iter > 200) throw degenerate_lattice("basis reduction did not terminate");
        w2 -= std::round((w2 / w1).real()) * w1;
        if (std::abs(w2 / w1) < 1.0 - 1e-14) {
            cplx t = w1;
            w1 = w2;
            w2 = -t;
            continue;
        }
        break;
    }
    L.w1 = w1;
    L.w2 = w2;
    L.tau = w2 / w1;
    const auto t0 = detail::theta1_jet(0.0, L.tau);
    L.theta1_prime_zero = t0.d1;
    L.eta1_r = -(kPi * kPi / (12.0 * w1)) * t0.d3 / t0.d1;
    L.eta2_r = detail::zeta_direct(w2, L, L.eta1_r);
    L.eta1 = zeta_w(omega1, L);
    L.eta2 = zeta_w(omega2, L);
    const cplx x = std::exp(2.0 * kPi * detail::kI * L.tau);
    const cplx e4 = 1.0 + 240.0 * detail::lambert_sum(3, x), e6 = 1.0 - 504.0 * detail::lambert_sum(5, x);
    L.g2 = (4.0 * std::pow(kPi, 4) / 3.0) * e4 / std::pow(2.0 * w1, 4);
    L.g3 = (8.0 * std::pow(kPi, 6) / 27.0) * e6 / std::pow(2.0 * w1, 6);
    const cplx det = omega1 * std::conj(omega2) - omega2 * std::conj(omega1);
    L.a = -(L.eta1 * std::conj(omega2) - L.eta2 * std::conj(omega1)) / det;
    L.b = (L.eta1 * omega2 - L.eta2 * omega1) / det;
    if (L.legendre_residual() > tol.legendre)
        throw convergence_error("Legendre residual " + std::to_string(L.legendre_residual()) +
                                " exceeds tolerance");
    return L;
}

inline WeierstrassLattice lemniscatic_lattice(double omega = 1.0, WeierstrassTolerances tol = {}) {
    return lattice_init(cplx(omega, 0.0), cplx(0.0, omega), tol);
}

inline cplx xi(cplx z, const WeierstrassLattice& L) { return zeta_w(z, L) + L.a * z + L.b * std::conj(z); }

/// sigma(z) xi(z), finite at the lattice points.
inline cplx sigma_xi(cplx z, const WeierstrassLattice& L) {
    return sigma_prime_w(z, L) + sigma_w(z, L) * (L.a * z + L.b * std::conj(z));
}

/// Real Jacobian of xi: |a - wp(z)|^2 - |b|^2.
inline double xi_jacobian(cplx z, const WeierstrassLattice& L) {
    return std::norm(L.a - wp(z, L)) - std::norm(L.b);
}

/// Jacobian signs at omega1, omega2, omega1 + omega2.
inline std::array<int, 3> xi_jacobian_signs(const WeierstrassLattice& L) {
    std::array<int, 3> s{};
    auto hp = L.half_periods();
    for (int k = 0; k < 3; ++k) {
        double j = xi_jacobian(hp[k], L);
        s[k] = j > 0 ? 1 : (j < 0 ? -1 : 0);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Zeros of xi - c

struct RootSearch {
    int grid = 12;
    int max_iterations = 80;
    double residual = 1e-12;
    double dedupe = 1e-5;
};

/// Distance between z1 and z2 modulo the lattice.
inline double lattice_distance(cplx z1, cplx z2, const WeierstrassLattice& L) {
    auto [x, y] = detail::cell_coordinates(z1 - z2, L.w1, L.tau);
    const cplx d = z1 - z2 - 2.0 * std::round(x) * L.w1 - 2.0 * std::round(y) * L.w2;
    double best = std::abs(d);
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) best = std::min(best, std::abs(d + 2.0 * double(i) * L.w1 + 2.0 * double(j) * L.w2));
    return best;
}

/// Representative of z in the cell {2 x omega1 + 2 y omega2 : 0 <= x, y < 1}.
inline cplx to_fundamental_cell(cplx z, const WeierstrassLattice& L) {
    auto [x, y] = detail::cell_coordinates(z, L.omega1, L.omega2 / L.omega1);
    x -= std::floor(x + 1e-12);
    y -= std::floor(y + 1e-12);
    return 2.0 * x * L.omega1 + 2.0 * y * L.omega2;
}

/// Distinct solutions of xi(z) = c in the fundamental cell by multi-start Newton
/// on the real 2D system, sorted by (x, y) cell coordinates.
inline std::vector<cplx> xi_roots(const WeierstrassLattice& L, cplx c = 0.0, RootSearch opt = {}) {
    std::vector<cplx> roots;
    for (int i = 0; i < opt.grid; ++i)
        for (int j = 0; j < opt.grid; ++j) {
            cplx z = 2.0 * L.omega1 * ((i + 0.5) / opt.grid) + 2.0 * L.omega2 * ((j + 0.5) / opt.grid);
            try {
                cplx f = xi(z, L) - c;
                for (int it = 0; it < opt.max_iterations && std::abs(f) > opt.residual; ++it) {
                    // Solve A d + b conj(d) = -f with A = a - wp(z).
                    const cplx A = L.a - wp(z, L);
                    const double J = std::norm(A) - std::norm(L.b);
                    if (J == 0.0) break;
                    const cplx step = (-f * std::conj(A) + L.b * std::conj(f)) / J;
                    double scale = 1.0;
                    cplx next = z + step, fn = xi(next, L) - c;
                    while (std::abs(fn) > std::abs(f) && scale > 1e-6) {
                        scale /= 2;
                        next = z + scale * step;
                        fn = xi(next, L) - c;
                    }
                    z = next;
                    f = fn;
                }
                if (std::abs(f) > opt.residual * 1e3) continue;
            } catch (const pole_error&) {
                continue;
            }
            z = to_fundamental_cell(z, L);
            bool seen = false;
            for (const auto& r : roots) seen = seen || lattice_distance(r, z, L) < opt.dedupe;
            if (!seen) roots.push_back(z);
        }
    std::sort(roots.begin(), roots.end(), [&](cplx p, cplx q) {
        auto a = detail::cell_coordinates(p, L.omega1, L.omega2 / L.omega1);
        auto b = detail::cell_coordinates(q, L.omega1, L.omega2 / L.omega1);
        return a < b;
    });
    return roots;
}

// ---------------------------------------------------------------------------
// Sections on E^{n+1}

/// phi_0 = sigma^2, phi_1 = sigma(z + omega)^2 e^{-2 zeta(omega) z} for a half-period omega.
inline cplx phi_eps(cplx z, int eps, cplx omega, const WeierstrassLattice& L) {
    if (eps == 0) {
        const cplx s = sigma_w(z, L);
        return s * s;
    }
    if (eps != 1) throw std::invalid_argument("phi_eps needs eps in {0, 1}");
    const cplx s = sigma_w(z + omega, L);
    return s * s * std::exp(-2.0 * zeta_w(omega, L) * z);
}

/// One coefficient a_IJ of the section family; I and J are index bitmasks over
/// coordinates 0..n, and (I, J) names the same coefficient as (J, I).
struct SectionCoefficient {
    unsigned I = 0, J = 0;
    cplx value;
};

class malformed_table : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline void validate_section_table(const std::vector<SectionCoefficient>& table, std::size_t factors) {
    if (factors == 0 || factors > 31) throw malformed_table("section needs 1..31 coordinates");
    const unsigned all = (1u << factors) - 1u;
    std::map<std::pair<unsigned, unsigned>, int> seen;
    for (const auto& c : table) {
        if (c.I & c.J) throw malformed_table("a_IJ needs disjoint I and J");
        if (!(c.I | c.J)) throw malformed_table("a_IJ with I and J both empty");
        if ((c.I | c.J) & ~all) throw malformed_table("a_IJ index beyond the number of coordinates");
        if (seen[{std::min(c.I, c.J), std::max(c.I, c.J)}]++) throw malformed_table("a_IJ listed twice");
    }
}

/// S(u, a) = S_0(u) + sum over unordered {I, J} of a_IJ S_0(u) (xi_I(u) + xi_J(u)),
/// S_0 = prod sigma(u_i), xi_I = prod_{i in I} xi(u_i), xi_empty = 0.
inline cplx section_eval(const std::vector<cplx>& u, const std::vector<SectionCoefficient>& table,
                         const WeierstrassLattice& L) {
    validate_section_table(table, u.size());
    std::vector<cplx> s(u.size()), sx;
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = sigma_w(u[i], L);
    cplx s0 = 1.0;
    for (const auto& v : s) s0 *= v;
    if (table.empty()) return s0;
    for (const auto& v : u) sx.push_back(sigma_xi(v, L));
    auto s0_xi = [&](unsigned mask) -> cplx {
        if (!mask) return 0.0;
        cplx p = 1.0;
        for (std::size_t i = 0; i < u.size(); ++i) p *= (mask >> i) & 1u ? sx[i] : s[i];
        return p;
    };
    cplx total = s0;
    for (const auto& c : table) total += c.value * (s0_xi(c.I) + s0_xi(c.J));
    return total;
}

/// Phi_c(u) = sum_eps c_eps prod_k phi_{eps_k}(u_k); eps is a bitmask over coordinates.
inline cplx phi_section(const std::vector<cplx>& u, const std::map<unsigned, cplx>& c, cplx omega,
                        const WeierstrassLattice& L) {
    std::vector<std::array<cplx, 2>> phi;
    for (const auto& v : u) phi.push_back({phi_eps(v, 0, omega, L), phi_eps(v, 1, omega, L)});
    cplx total = 0;
    for (const auto& [eps, coeff] : c) {
        if (u.size() < 32 && (eps >> u.size())) throw malformed_table("eps mask beyond the number of coordinates");
        cplx p = coeff;
        for (std::size_t k = 0; k < u.size(); ++k) p *= phi[k][(eps >> k) & 1u];
        total += p;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Residual report

struct ResidualCheck {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass() const { return residual <= tolerance; }
};

namespace detail {

/// Deterministic points of the fundamental cell away from the lattice points.
inline std::vector<cplx> sample_points(const WeierstrassLattice& L, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < count) {
        cplx z = 2.0 * u(rng) * L.omega1 + 2.0 * u(rng) * L.omega2;
        if (lattice_distance(z, 0.0, L) > 0.1 * std::abs(L.w1)) out.push_back(z);
    }
    return out;
}

inline double relative(cplx value, cplx reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace detail

/// Lemniscatic value e = wp(omega) = Gamma(1/4)^4/(32 pi omega^2).
inline double lemniscatic_e(double omega = 1.0) {
    return std::pow(std::tgamma(0.25), 4) / (32.0 * detail::kPi * omega * omega);
}

struct VerifyOptions {
    bool lemniscatic = false;
    double omega = 1.0;  // lemniscatic scale
    cplx exterior_c{6.0, 0.0};
    int periodicity_points = 100;
    int section_points = 50;
};

inline std::vector<ResidualCheck> weierstrass_verify(const WeierstrassLattice& L, const VerifyOptions& opt = {}) {
    using detail::kPi;
    const auto& tol = L.tol;
    std::vector<ResidualCheck> out;
    auto add = [&](std::string name, double residual, double t) { out.push_back({std::move(name), residual, t}); };

    add("legendre", L.legendre_residual(), tol.legendre);
    add("linear_system", L.linear_system_residual(), tol.legendre);
    auto hp = L.half_periods();
    for (int k = 0; k < 3; ++k) add("xi_half_period_" + std::to_string(k + 1), std::abs(xi(hp[k], L)), tol.half_period);
    for (int k = 0; k < 3; ++k)
        add("wp_prime_half_period_" + std::to_string(k + 1),
            std::abs(wp_prime(hp[k], L)) / std::max(1.0, std::abs(wp(hp[k], L))), tol.half_period);

    auto pts = detail::sample_points(L, opt.periodicity_points, 20240u);
    double zeta_r = 0, sigma_r = 0, xi_r = 0, odd_r = 0, ode_r = 0;
    const std::array<cplx, 2> om{L.omega1, L.omega2}, et{L.eta1, L.eta2};
    for (const auto& z : pts) {
        for (int k = 0; k < 2; ++k) {
            zeta_r = std::max(zeta_r, std::abs(zeta_w(z + 2.0 * om[k], L) - zeta_w(z, L) - 2.0 * et[k]));
            sigma_r = std::max(sigma_r, detail::relative(sigma_w(z + 2.0 * om[k], L),
                                                         -sigma_w(z, L) * std::exp(2.0 * et[k] * (z + om[k]))));
            xi_r = std::max(xi_r, std::abs(xi(z + 2.0 * om[k], L) - xi(z, L)));
        }
        odd_r = std::max(odd_r, std::abs(xi(-z, L) + xi(z, L)));
        const cplx p = wp(z, L), dp = wp_prime(z, L);
        const double scale = std::abs(4.0 * p * p * p) + std::abs(L.g2 * p) + std::abs(L.g3);
        ode_r = std::max(ode_r, std::abs(dp * dp - (4.0 * p * p * p - L.g2 * p - L.g3)) / scale);
    }
    add("zeta_quasi_periodicity", zeta_r, tol.periodicity);
    add("sigma_quasi_periodicity", sigma_r, tol.periodicity);
    add("xi_double_periodicity", xi_r, tol.periodicity);
    add("xi_odd", odd_r, tol.periodicity);
    add("wp_differential_equation", ode_r, tol.periodicity);

    double phi_r = 0;
    for (const auto& z : detail::sample_points(L, opt.section_points, 4099u))
        for (int eps = 0; eps <= 1; ++eps)
            for (const auto& w : hp)
                for (int k = 0; k < 2; ++k)
                    phi_r = std::max(phi_r, detail::relative(phi_eps(z + 2.0 * om[k], eps, w, L),
                                                             phi_eps(z, eps, w, L) * std::exp(4.0 * et[k] * (z + om[k]))));
    add("phi_quasi_periodicity", phi_r, tol.periodicity);

    // Every half-period is a root; a generic lattice may add pairs of roots of
    // opposite index, so only the index sum is fixed.
    auto roots = xi_roots(L, 0.0, RootSearch{12, 80, 1e-12, tol.dedupe});
    double found_r = 0;
    for (const auto& h : hp) {
        double best = INFINITY;
        for (const auto& r : roots) best = std::min(best, lattice_distance(r, h, L));
        found_r = std::max(found_r, best);
    }
    add("xi_half_periods_among_roots", found_r, tol.root);
    int index_sum = 0;
    for (const auto& r : roots) index_sum += xi_jacobian(r, L) > 0 ? 1 : -1;
    add("xi_root_index_sum", std::abs(index_sum - 1), 0.0);

    if (opt.lemniscatic) {
        const double w = opt.omega;
        add("eta1_minus_pi_over_4w", std::abs(L.eta1 - kPi / (4.0 * w)), 1e-9);
        add("a_zero", std::abs(L.a), 1e-9);
        add("b_plus_pi_over_4w2", std::abs(L.b + kPi / (4.0 * w * w)), 1e-9);
        add("g3_zero", std::abs(L.g3), 1e-9);
        add("wp_omega_gamma", std::abs(wp(w, L) - lemniscatic_e(w)), 1e-7);
        const auto signs = xi_jacobian_signs(L);
        add("jacobian_signs", signs == std::array<int, 3>{1, 1, -1} ? 0.0 : 1.0, 0.0);
        add("lemniscatic_margin", lemniscatic_e(w) > kPi / (4.0 * w * w) ? 0.0 : 1.0, 0.0);
        double root_r = roots.size() == 3 ? found_r : INFINITY;
        add("xi_exactly_three_roots_at_half_periods", root_r, tol.root);
        auto outer = xi_roots(L, opt.exterior_c, RootSearch{12, 80, 1e-12, tol.dedupe});
        add("exterior_single_root", outer.size() == 1 ? 0.0 : double(outer.size()), 0.0);
    }
    return out;
}

}  // namespace thetacob
