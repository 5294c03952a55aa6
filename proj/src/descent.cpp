#include "congruent/descent.hpp"

#include <numeric>
#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace congruent {

std::string to_string(Isogeny iso) { return iso == Isogeny::phi ? "phi" : "psi"; }

CurvePair CurvePair::make(u64 k) {
    if (k == 0) throw std::invalid_argument("CurvePair: k must be positive");
    if (k > (u64{1} << 31)) throw std::invalid_argument("CurvePair: k too large for 64-bit torsor constants");
    CurvePair c{k, factor(k), {}, {}};
    if (!c.factorization.squarefree()) throw std::invalid_argument("CurvePair: k = " + std::to_string(k) + " is not squarefree");
    const i64 ks = static_cast<i64>(k);
    c.e_coeffs = {0, -ks * ks};
    c.ehat_coeffs = {0, k % 2 ? 4 * ks * ks : ks * ks / 4};
    return c;
}

i64 CurvePair::torsor_constant(Isogeny iso) const {
    const i64 ks = static_cast<i64>(k);
    if (iso == Isogeny::psi) return -ks * ks;
    return k % 2 ? 4 * ks * ks : (ks / 2) * (ks / 2);
}

Torsor Torsor::make(const CurvePair& curve, Isogeny iso, i64 b1) {
    const i64 c = curve.torsor_constant(iso);
    if (b1 == 0 || squarefree_part(b1) != b1 || c % b1 != 0)
        throw std::invalid_argument("Torsor: b1 = " + std::to_string(b1) + " is not a squarefree divisor of " +
                                    std::to_string(c));
    return {iso, b1, c / b1};
}

std::string Torsor::str() const {
    return "T^(" + to_string(isogeny) + ")(" + std::to_string(b1) + "): N^2 = " + std::to_string(b1) + " M^4 " +
           (b2 < 0 ? "- " : "+ ") + std::to_string(b2 < 0 ? -b2 : b2) + " e^4";
}

bool on_torsor(const Torsor& t, const TorsorPoint& pt) {
    if (pt.N == 0 && pt.M == 0 && pt.e == 0) return false;
    mpz_class M = static_cast<long>(pt.M), e = static_cast<long>(pt.e), N = static_cast<long>(pt.N);
    mpz_class M2 = M * M, e2 = e * e;
    return N * N == mpz_class(static_cast<long>(t.b1)) * M2 * M2 + mpz_class(static_cast<long>(t.b2)) * e2 * e2;
}

std::vector<Torsor> enumerate_torsors(const CurvePair& curve, Isogeny iso) {
    const i64 c = curve.torsor_constant(iso);
    std::vector<u64> primes;
    for (const auto& pp : factor(static_cast<u64>(c < 0 ? -c : c)).factors) primes.push_back(pp.prime);
    std::vector<i64> divisors{1};
    for (u64 p : primes) {
        const std::size_t n = divisors.size();
        for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * static_cast<i64>(p));
    }
    std::sort(divisors.begin(), divisors.end());
    std::vector<Torsor> out;
    for (i64 d : divisors) {
        out.push_back(Torsor::make(curve, iso, d));
        if (iso == Isogeny::psi) out.push_back(Torsor::make(curve, iso, -d));
    }
    return out;
}

// --- local solvability -------------------------------------------------------

namespace {

unsigned valuation(const mpz_class& x, u64 q) {
    if (x == 0) return std::numeric_limits<unsigned>::max();
    mpz_class r = abs(x);
    unsigned v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), q)) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), q);
        ++v;
    }
    return v;
}

// Is the nonzero integer x a square in Q_q?
bool is_qadic_square(const mpz_class& x, u64 q) {
    unsigned v = valuation(x, q);
    if (v % 2) return false;
    mpz_class u = x;
    for (unsigned i = 0; i < v; ++i) mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), q);
    if (q == 2) return mpz_fdiv_ui(u.get_mpz_t(), 8) == 1;
    return mpz_legendre(u.get_mpz_t(), mpz_class(static_cast<unsigned long>(q)).get_mpz_t()) == 1;
}

constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

unsigned add_sat(unsigned a, unsigned b) { return (a == kInfinity || b == kInfinity) ? kInfinity : a + b; }

// Decides whether c4 x^4 + c0 takes a value in Q_q^2 (zero included) for some
// x in the residue class x0 + q^n Z_q, by refining the class until the
// value's square class is constant on it.
class QuarticSolver {
public:
    QuarticSolver(i64 c4, i64 c0, u64 q, unsigned depth_cap)
        : c4_(static_cast<long>(c4)), c0_(static_cast<long>(c0)), q_(q), cap_(depth_cap) {}

    bool solve(const mpz_class& x0, unsigned n) const {
        if (n > cap_)
            throw std::logic_error("locally_solvable: refinement depth exceeded the cap for q = " + std::to_string(q_));
        const mpz_class x2 = x0 * x0;
        const mpz_class value = c4_ * x2 * x2 + c0_;
        if (value == 0 || is_qadic_square(value, q_)) return true;
        const unsigned lambda = valuation(value, q_);
        // Taylor coefficients of c4 (x0 + h)^4 about x0 for h^1..h^4.
        const std::array<mpz_class, 4> taylor = {4 * c4_ * x2 * x0, 6 * c4_ * x2, 4 * c4_ * x0, c4_};
        unsigned m = kInfinity;
        for (unsigned j = 0; j < 4; ++j) m = std::min(m, add_sat(valuation(taylor[j], q_), (j + 1) * n));
        const unsigned mu = valuation(taylor[0], q_);
        // Hensel: a simple root lies within q^(lambda - mu) of x0.
        if (mu != kInfinity && lambda > 2 * mu && lambda - mu >= n) return true;
        if (lambda < m) {
            // Every value in the class is q^lambda times a unit congruent to
            // value / q^lambda modulo q^(m - lambda).
            if (lambda % 2) return false;
            if (q_ != 2 || m - lambda >= 3) return false;
        }
        mpz_class step;
        mpz_ui_pow_ui(step.get_mpz_t(), q_, n);
        for (u64 r = 0; r < q_; ++r)
            if (solve(x0 + step * static_cast<unsigned long>(r), n + 1)) return true;
        return false;
    }

private:
    mpz_class c4_, c0_;
    u64 q_;
    unsigned cap_;
};

}  // namespace

bool locally_solvable_at(const Torsor& t, u64 q) {
    const mpz_class c = mpz_class(static_cast<long>(t.b1)) * static_cast<long>(t.b2);
    const unsigned L = valuation(16 * c * c, q) + 3;
    const unsigned cap = 2 * L + 8;
    // Primitive (M, e): either e is a unit (x = M/e in Z_q) or M is a unit
    // and q | e (t = e/M in qZ_q).
    if (QuarticSolver(t.b1, t.b2, q, cap).solve(0, 0)) return true;
    return QuarticSolver(t.b2, t.b1, q, cap).solve(0, 1);
}

bool locally_solvable(const Torsor& t) {
    if (t.b1 < 0 && t.b2 < 0) return false;
    const i64 c = t.b1 * t.b2;
    std::vector<u64> primes{2};
    for (const auto& pp : factor(static_cast<u64>(c < 0 ? -c : c)).factors)
        if (pp.prime != 2) primes.push_back(pp.prime);
    return std::all_of(primes.begin(), primes.end(), [&](u64 q) { return locally_solvable_at(t, q); });
}

SquareClassGroup selmer_group(const CurvePair& curve, Isogeny iso) {
    std::vector<i64> classes;
    for (const Torsor& t : enumerate_torsors(curve, iso))
        if (locally_solvable(t)) classes.push_back(t.b1);
    return SquareClassGroup::from_elements(classes);
}

// --- point search ------------------------------------------------------------

namespace {

struct SearchTable {
    std::vector<i128> fourth;
    i128 b1, b2;

    SearchTable(const Torsor& t, u64 height) : b1(t.b1), b2(t.b2) {
        const long double bound = static_cast<long double>(height) * height * height * height *
                                  (std::abs(static_cast<long double>(t.b1)) + std::abs(static_cast<long double>(t.b2)));
        if (bound > 1.0e37L) throw std::overflow_error("search_points: height too large for 128-bit search");
        fourth.resize(height + 1);
        for (u64 i = 0; i <= height; ++i) {
            const i128 s = static_cast<i128>(i) * i;
            fourth[i] = s * s;
        }
    }

    std::optional<TorsorPoint> test(u64 M, u64 e) const {
        if (std::gcd(M, e) != 1) return std::nullopt;
        const i128 v = b1 * fourth[M] + b2 * fourth[e];
        u128 root = 0;
        if (!is_square(v, &root)) return std::nullopt;
        return TorsorPoint{static_cast<i64>(root), static_cast<i64>(M), static_cast<i64>(e)};
    }

    // First point on the shell max(M, e) = h in (M, e) order.
    std::optional<TorsorPoint> shell(u64 h) const {
        for (u64 M = 0; M < h; ++M)
            if (auto p = test(M, h)) return p;
        for (u64 e = 0; e <= h; ++e)
            if (auto p = test(h, e)) return p;
        return std::nullopt;
    }
};

}  // namespace

std::optional<TorsorPoint> search_points_serial(const Torsor& t, u64 height) {
    if (height == 0) throw std::invalid_argument("search_points: height must be >= 1");
    const SearchTable table(t, height);
    for (u64 h = 1; h <= height; ++h)
        if (auto p = table.shell(h)) return p;
    return std::nullopt;
}

std::optional<TorsorPoint> search_points(const Torsor& t, u64 height) {
    if (height == 0) throw std::invalid_argument("search_points: height must be >= 1");
    const SearchTable table(t, height);
    // Shells are processed in bands so that an early hit stops the scan; the
    // smallest shell with a hit wins, which keeps the result deterministic.
    constexpr u64 kBand = 64;
    for (u64 lo = 1; lo <= height; lo += kBand) {
        const u64 hi = std::min(height, lo + kBand - 1);
        const long long count = static_cast<long long>(hi - lo + 1);
        std::vector<std::optional<TorsorPoint>> hits(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) hits[static_cast<std::size_t>(i)] = table.shell(lo + static_cast<u64>(i));
        for (const auto& h : hits)
            if (h) return h;
    }
    return std::nullopt;
}

// --- rank bookkeeping --------------------------------------------------------

void finalize_ranks(DescentReport& r) {
    const int found = static_cast<int>(r.w_phi_found.dim() + r.w_psi_found.dim());
    r.rank_lower = std::max(0, found - 2);
    r.rank_upper = static_cast<int>(r.selmer_phi.dim() + r.selmer_psi.dim()) - 2 -
                   static_cast<int>(r.sha_phi_lb.dim() + r.sha_psi_lb.dim());
    if (r.rank_lower > r.rank_upper)
        throw std::logic_error("descent for k = " + std::to_string(r.k) + ": found points contradict the Sha bounds");
    r.sha2_dim.reset();
    r.noncongruent.reset();
    if (r.rank_upper == 0) {
        r.sha2_dim = static_cast<int>(r.sha_phi_lb.dim() + r.sha_psi_lb.dim());
        r.noncongruent = true;
    } else if (r.rank_lower > 0) {
        r.noncongruent = false;
    }
}

}  // namespace congruent
