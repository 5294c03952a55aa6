#include "congruent/quad_rings.hpp"

#include <array>
#include <optional>
#include <vector>

namespace congruent {

namespace {

i64 narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string("QuadInt overflow in ") + what);
    return static_cast<i64>(v);
}

// round(num / den) with ties away from zero; den != 0.
i128 round_quotient(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 twice = 2 * num + (num >= 0 ? den : -den);
    return twice / (2 * den);
}

void require_same_ring(const QuadInt& x, const QuadInt& y) {
    if (x.ring() != y.ring()) throw std::invalid_argument("QuadInt: mixed rings");
}

}  // namespace

std::string to_string(RingTag r) {
    switch (r) {
        case RingTag::gaussian: return "Z[i]";
        case RingTag::sqrt2: return "Z[sqrt2]";
        case RingTag::sqrt_minus2: return "Z[sqrt-2]";
    }
    return "?";
}

i64 QuadInt::norm() const {
    i128 n = static_cast<i128>(a_) * a_ - static_cast<i128>(omega_square(ring_)) * b_ * b_;
    return narrow(n, "norm");
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x, y);
    return {x.ring_, narrow(static_cast<i128>(x.a_) + y.a_, "+"), narrow(static_cast<i128>(x.b_) + y.b_, "+")};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x, y);
    const i128 w2 = omega_square(x.ring_);
    i128 a = static_cast<i128>(x.a_) * y.a_ + w2 * static_cast<i128>(x.b_) * y.b_;
    i128 b = static_cast<i128>(x.a_) * y.b_ + static_cast<i128>(x.b_) * y.a_;
    return {x.ring_, narrow(a, "*"), narrow(b, "*")};
}

bool QuadInt::divisible_by(const QuadInt& y) const {
    require_same_ring(*this, y);
    if (y.is_zero()) throw std::domain_error("QuadInt: division by zero");
    const i128 w2 = omega_square(ring_);
    // x * conj(y) / N(y)
    i128 ta = static_cast<i128>(a_) * y.a_ - w2 * static_cast<i128>(b_) * y.b_;
    i128 tb = static_cast<i128>(b_) * y.a_ - static_cast<i128>(a_) * y.b_;
    i128 n = y.norm();
    return ta % n == 0 && tb % n == 0;
}

QuadInt QuadInt::round_div(const QuadInt& y) const {
    require_same_ring(*this, y);
    if (y.is_zero()) throw std::domain_error("QuadInt: division by zero");
    const i128 w2 = omega_square(ring_);
    i128 ta = static_cast<i128>(a_) * y.a_ - w2 * static_cast<i128>(b_) * y.b_;
    i128 tb = static_cast<i128>(b_) * y.a_ - static_cast<i128>(a_) * y.b_;
    i128 n = y.norm();
    return {ring_, narrow(round_quotient(ta, n), "round_div"), narrow(round_quotient(tb, n), "round_div")};
}

std::string QuadInt::str() const {
    const char* w = ring_ == RingTag::gaussian ? "i" : ring_ == RingTag::sqrt2 ? "sqrt2" : "sqrt-2";
    std::string s = std::to_string(a_);
    s += b_ < 0 ? " - " : " + ";
    s += std::to_string(b_ < 0 ? -b_ : b_);
    s += w;
    return s;
}

QuadInt ring_gcd(QuadInt x, QuadInt y) {
    require_same_ring(x, y);
    while (!y.is_zero()) {
        QuadInt r = x - x.round_div(y) * y;
        x = y;
        y = r;
    }
    return x;
}

namespace {

bool splits(u64 p, RingTag ring) {
    switch (ring) {
        case RingTag::gaussian: return p % 4 == 1;
        case RingTag::sqrt2: return p % 8 == 1 || p % 8 == 7;
        case RingTag::sqrt_minus2: return p % 8 == 1 || p % 8 == 3;
    }
    return false;
}

std::optional<QuadInt> exhaustive_split(u64 p, RingTag ring) {
    const i64 w2 = omega_square(ring);
    const i64 target = static_cast<i64>(p);
    // a^2 - w2 b^2 = +-p; for Z[sqrt2] the fundamental domain of the unit
    // action contains a solution with b^2 <= p.
    for (i64 b = 0; static_cast<u64>(b) * static_cast<u64>(b) <= 2 * p; ++b) {
        for (i64 s : {target, -target}) {
            i128 a2 = static_cast<i128>(s) + static_cast<i128>(w2) * b * b;
            u128 root = 0;
            if (a2 >= 0 && is_square(a2, &root)) return QuadInt(ring, static_cast<i64>(root), b);
            if (ring != RingTag::sqrt2) break;
        }
    }
    return std::nullopt;
}

}  // namespace

QuadInt split_prime(u64 p, RingTag ring) {
    if (!is_prime(p)) throw std::invalid_argument("split_prime: " + std::to_string(p) + " is not prime");
    if (p == 2) {
        switch (ring) {
            case RingTag::gaussian: return {ring, 1, 1};
            case RingTag::sqrt2: return {ring, 0, 1};
            case RingTag::sqrt_minus2: return {ring, 0, 1};
        }
    }
    if (!splits(p, ring)) throw Inert("split_prime: " + std::to_string(p) + " is inert in " + to_string(ring));
    const i64 r = static_cast<i64>(sqrt_mod(omega_square(ring), p));
    QuadInt g = ring_gcd(QuadInt(ring, static_cast<i64>(p), 0), QuadInt(ring, r, 1));
    i64 n = g.norm();
    if (n == static_cast<i64>(p) || (ring == RingTag::sqrt2 && n == -static_cast<i64>(p))) return g;
    if (p < 1000000)
        if (auto e = exhaustive_split(p, ring)) return *e;
    throw SplitFailed("split_prime: could not split " + std::to_string(p) + " in " + to_string(ring));
}

bool is_primary(const QuadInt& x) {
    QuadInt shifted = x - QuadInt(x.ring(), 1, 0);
    switch (x.ring()) {
        case RingTag::gaussian: return shifted.divisible_by(QuadInt(x.ring(), 2, 2));
        case RingTag::sqrt2:
        case RingTag::sqrt_minus2: return shifted.divisible_by(QuadInt(x.ring(), 0, 2));
    }
    return false;
}

namespace {

// Units of Z[sqrt2] as +-eps^n, in the documented search order.
std::vector<std::pair<int, QuadInt>> sqrt2_units(int max_exponent) {
    std::vector<std::pair<int, QuadInt>> out;
    const QuadInt eps = fundamental_unit_sqrt2();
    const QuadInt eps_inv(RingTag::sqrt2, -1, 1);
    QuadInt pos(RingTag::sqrt2, 1, 0), neg(RingTag::sqrt2, 1, 0);
    out.emplace_back(0, pos);
    for (int n = 1; n <= max_exponent; ++n) {
        pos = pos * eps;
        neg = neg * eps_inv;
        out.emplace_back(n, pos);
        out.emplace_back(-n, neg);
    }
    return out;
}

// Candidates u * base for every base, u = +-eps^n by increasing |n|; the
// accepted one with smallest |n|, then positive rational part, then positive
// w-part wins.
std::optional<QuadInt> best_associate(const std::vector<QuadInt>& bases, bool (*accept)(const QuadInt&)) {
    const RingTag ring = bases.front().ring();
    std::vector<std::pair<int, QuadInt>> units;
    if (ring == RingTag::sqrt2) {
        units = sqrt2_units(8);
    } else if (ring == RingTag::gaussian) {
        units = {{0, QuadInt(ring, 1, 0)}, {0, QuadInt(ring, 0, 1)}};
    } else {
        units = {{0, QuadInt(ring, 1, 0)}};
    }
    std::optional<QuadInt> best;
    int best_abs = 0;
    auto better = [](const QuadInt& x, const QuadInt& y) {
        // positive rational part first, then positive w-part
        if ((x.a() > 0) != (y.a() > 0)) return x.a() > 0;
        return x.b() > 0 && y.b() <= 0;
    };
    for (const auto& [n, u] : units) {
        int abs_n = n < 0 ? -n : n;
        if (best && abs_n > best_abs) break;
        for (const QuadInt& base : bases)
            for (const QuadInt& cand : {u * base, -(u * base)}) {
                if (!accept(cand)) continue;
                if (!best || better(cand, *best)) {
                    best = cand;
                    best_abs = abs_n;
                }
            }
    }
    return best;
}

bool is_one_mod4(const QuadInt& x) {
    i64 a = x.a() - 1;
    return a % 4 == 0 && x.b() % 4 == 0;
}

}  // namespace

QuadInt primary_associate(const QuadInt& alpha) {
    if (alpha.norm() % 2 == 0)
        throw NoPrimaryAssociate("primary_associate: " + alpha.str() + " has even norm");
    if (auto r = best_associate({alpha, alpha.conjugate()}, &is_primary)) return *r;
    throw NoPrimaryAssociate("primary_associate: no primary associate of " + alpha.str());
}

QuadInt primary_mod4(const QuadInt& alpha) {
    if (alpha.ring() != RingTag::sqrt2) throw std::invalid_argument("primary_mod4: Z[sqrt2] only");
    if (alpha.norm() % 2 == 0) throw NoPrimaryAssociate("primary_mod4: even norm");
    if (auto r = best_associate({alpha}, &is_one_mod4)) return *r;
    throw NoPrimaryAssociate("primary_mod4: no associate = 1 mod 4 of " + alpha.str());
}

Sign ring_symbol(const QuadInt& alpha, const QuadInt& beta) {
    require_same_ring(alpha, beta);
    i64 n = beta.norm();
    u64 q = static_cast<u64>(n < 0 ? -n : n);
    if (q % 2 == 0 || !is_prime(q))
        throw CompositeModulus("ring_symbol: modulus " + beta.str() + " does not have odd prime norm");
    // beta = a + b w = 0 in the residue field gives w = -a / b.
    const u64 root = mulmod(mod(-beta.a(), q), invmod(beta.b(), q), q);
    const u64 image = (mod(alpha.a(), q) + mulmod(mod(alpha.b(), q), root, q)) % q;
    if (image == 0) throw NotCoprime("ring_symbol: " + alpha.str() + " is divisible by " + beta.str());
    return jacobi(static_cast<i64>(image), static_cast<i64>(q));
}

QuadInt primary_prime(u64 p, RingTag ring) { return primary_associate(split_prime(p, ring)); }

Sign symbol_capital(u64 p, u64 l, RingTag ring) {
    if (p == l || p % 8 != 1 || l % 8 != 1 || !is_prime(p) || !is_prime(l))
        throw UndefinedSymbol("symbol_capital: need distinct primes p = l = 1 mod 8");
    if (jacobi(static_cast<i64>(p), static_cast<i64>(l)).is_minus())
        throw UndefinedSymbol("symbol_capital: (p/l) = -1");
    return ring_symbol(primary_prime(p, ring), primary_prime(l, ring));
}

}  // namespace congruent
