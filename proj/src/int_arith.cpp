#include "congruent/int_arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace congruent {

Sign Sign::from_int(int v) {
    if (v == 1) return plus();
    if (v == -1) return minus();
    throw std::invalid_argument("Sign::from_int: value " + std::to_string(v) + " is not +1/-1");
}

i64 FactoredInteger::value() const {
    i64 v = 1;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.exponent; ++i) v *= static_cast<i64>(f.prime);
    return sign.value() * v;
}

bool FactoredInteger::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

std::vector<u64> FactoredInteger::primes() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod(i64 a, u64 m) {
    i64 r = static_cast<i64>(static_cast<i128>(a) % static_cast<i128>(m));
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

Bezout ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

u64 invmod(i64 a, u64 m) {
    auto [g, x, y] = ext_gcd(static_cast<i64>(mod(a, m)), static_cast<i64>(m));
    (void)y;
    if (g != 1) throw NotCoprime("invmod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
    return mod(x, m);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for n < 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 sqrt_mod(i64 a_signed, u64 p) {
    u64 a = mod(a_signed, p);
    if (p == 2 || a == 0) return a;
    if (powmod(a, (p - 1) / 2, p) != 1)
        throw UndefinedSymbol("sqrt_mod: " + std::to_string(a_signed) + " is not a QR mod " + std::to_string(p));
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 isqrt(u128 n) {
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

// Quadratic-residue bitmaps used to reject most non-squares before isqrt.
struct SquareFilter {
    bool mod64[64]{}, mod63[63]{}, mod65[65]{}, mod11[11]{};
    SquareFilter() {
        for (unsigned i = 0; i < 64; ++i) mod64[i * i % 64] = true;
        for (unsigned i = 0; i < 63; ++i) mod63[i * i % 63] = true;
        for (unsigned i = 0; i < 65; ++i) mod65[i * i % 65] = true;
        for (unsigned i = 0; i < 11; ++i) mod11[i * i % 11] = true;
    }
};

const SquareFilter kSquareFilter;

}  // namespace

bool is_square(i128 n, u128* root) {
    if (n < 0) return false;
    const u128 u = static_cast<u128>(n);
    if (!kSquareFilter.mod64[static_cast<unsigned>(u & 63)]) return false;
    const u64 r = static_cast<u64>(u % (63ull * 65 * 11));
    if (!kSquareFilter.mod63[r % 63] || !kSquareFilter.mod65[r % 65] || !kSquareFilter.mod11[r % 11])
        return false;
    u128 s = isqrt(u);
    if (s * s != u) return false;
    if (root) *root = s;
    return true;
}

Sign jacobi(i64 a_signed, i64 n_signed) {
    if (n_signed <= 0 || n_signed % 2 == 0)
        throw NonOddModulus("jacobi: modulus " + std::to_string(n_signed) + " is not an odd positive integer");
    u64 n = static_cast<u64>(n_signed);
    u64 a = mod(a_signed, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    if (n != 1)
        throw NotCoprime("jacobi: gcd(" + std::to_string(a_signed) + ", " + std::to_string(n_signed) + ") > 1");
    return Sign::from_int(t);
}

namespace {

Sign pm_one(u64 r, u64 p, const char* what) {
    if (r == 1) return Sign::plus();
    if (r == p - 1) return Sign::minus();
    throw UndefinedSymbol(std::string(what) + ": power residue is not +-1 mod " + std::to_string(p));
}

void require_prime_class(u64 p, u64 residue, u64 modulus, const char* what) {
    if (p % modulus != residue || !is_prime(p))
        throw BadResidueClass(std::string(what) + ": " + std::to_string(p) + " is not a prime = " +
                              std::to_string(residue) + " mod " + std::to_string(modulus));
}

}  // namespace

Sign quartic_symbol(i64 a, u64 l) {
    require_prime_class(l, 1, 4, "quartic_symbol");
    if (mod(a, l) == 0 || jacobi(a, static_cast<i64>(l)).is_minus())
        throw UndefinedSymbol("quartic_symbol: (" + std::to_string(a) + "/" + std::to_string(l) + ") != +1");
    return pm_one(powmod(mod(a, l), (l - 1) / 4, l), l, "quartic_symbol");
}

Sign octic_minus4(u64 p) {
    require_prime_class(p, 1, 8, "octic_minus4");
    return pm_one(powmod(mod(-4, p), (p - 1) / 8, p), p, "octic_minus4");
}

std::pair<Sign, Sign> half_symbols(u64 l) {
    require_prime_class(l, 1, 8, "half_symbols");
    Sign two_l = quartic_symbol(2, l);
    Sign l_two = pm_one(powmod(l - 1, (l - 1) / 8, l), l, "half_symbols");
    return {two_l, l_two};
}

namespace {

u64 pollard_brent(u64 n, u64 c, u64 budget) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1, steps = 0;
    const u64 m = 128;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
            steps += m;
        }
        r <<= 1;
        if (steps > budget) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(u64 n, std::vector<u64>& out, u64 budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 c = 1; c < 64; ++c) {
        u64 d = pollard_brent(n, c, budget);
        if (d != 0 && d != n) {
            factor_into(d, out, budget);
            factor_into(n / d, out, budget);
            return;
        }
    }
    throw FactorBudgetExceeded("factor: could not split " + std::to_string(n));
}

}  // namespace

FactoredInteger factor(u64 k, u64 max_rho_iterations) {
    FactoredInteger result;
    if (k == 0) throw std::invalid_argument("factor: k must be >= 1");
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= k; p += (p == 2 ? 1 : 2)) {
        while (k % p == 0) {
            primes.push_back(p);
            k /= p;
        }
    }
    if (k > 1) factor_into(k, primes, max_rho_iterations);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!result.factors.empty() && result.factors.back().prime == p)
            ++result.factors.back().exponent;
        else
            result.factors.push_back({p, 1});
    }
    return result;
}

i64 squarefree_part(i64 n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero has no square class");
    FactoredInteger f = factor(static_cast<u64>(n < 0 ? -n : n));
    i64 s = n < 0 ? -1 : 1;
    for (const auto& pp : f.factors)
        if (pp.exponent % 2 == 1) s *= static_cast<i64>(pp.prime);
    return s;
}

std::vector<u64> primes_in_class(u64 lo, u64 hi, u64 residue, u64 modulus) {
    std::vector<u64> out;
    if (hi <= 2) return out;
    std::vector<bool> composite(hi, false);
    for (u64 i = 2; i * i < hi; ++i)
        if (!composite[i])
            for (u64 j = i * i; j < hi; j += i) composite[j] = true;
    for (u64 n = std::max<u64>(lo, 2); n < hi; ++n)
        if (!composite[n] && n % modulus == residue % modulus) out.push_back(n);
    return out;
}

}  // namespace congruent
