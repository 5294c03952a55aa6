#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace congruent {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Error hierarchy. Every symbol and criterion reports failure through one of
// these; no function encodes "undefined" as a 0 return value.
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCoprime : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct NonOddModulus : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct UndefinedSymbol : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct BadResidueClass : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct FactorBudgetExceeded : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

/// A value in {+1, -1}.
class Sign {
public:
    constexpr Sign() = default;

    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }

    /// Throws std::invalid_argument unless v is +1 or -1.
    static Sign from_int(int v);

    constexpr int value() const { return value_; }
    constexpr bool is_plus() const { return value_ == 1; }
    constexpr bool is_minus() const { return value_ == -1; }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.value_ * b.value_); }
    constexpr Sign operator-() const { return Sign(-value_); }
    friend constexpr bool operator==(Sign, Sign) = default;

    /// "+1" / "-1".
    std::string str() const { return value_ > 0 ? "+1" : "-1"; }

private:
    constexpr explicit Sign(int v) : value_(v) {}
    int value_ = 1;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Signed integer together with its complete factorisation.
/// Primes are strictly increasing.
struct FactoredInteger {
    Sign sign;
    std::vector<PrimePower> factors;

    i64 value() const;
    bool squarefree() const;
    std::vector<u64> primes() const;
};

// --- modular helpers -------------------------------------------------------

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
/// Reduce a into [0, m).
u64 mod(i64 a, u64 m);
i64 gcd(i64 a, i64 b);
/// Modular inverse; throws NotCoprime if gcd(a, m) != 1.
u64 invmod(i64 a, u64 m);
/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct Bezout {
    i64 g, x, y;
};
Bezout ext_gcd(i64 a, i64 b);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);
/// Square root of a modulo an odd prime p (Tonelli-Shanks); a must be a QR.
u64 sqrt_mod(i64 a, u64 p);
/// Floor of the square root.
u64 isqrt(u64 n);
u128 isqrt(u128 n);
/// True iff n >= 0 is a perfect square; fills root when non-null.
bool is_square(i128 n, u128* root = nullptr);

// --- residue symbols -------------------------------------------------------

/// Jacobi symbol (a/n) for odd n >= 1.
/// Throws NonOddModulus for even n, NotCoprime when gcd(a, n) > 1.
Sign jacobi(i64 a, i64 n);

/// Biquadratic residue symbol (a/l)_4 = a^((l-1)/4) mod l for a prime
/// l = 1 mod 4. Defined only when (a/l) = +1; otherwise UndefinedSymbol.
Sign quartic_symbol(i64 a, u64 l);

/// Rational octic symbol (-4/p)_8 = (-4)^((p-1)/8) mod p, p = 1 mod 8.
/// Computed by exponentiation; the identity with half_symbols is a test.
Sign octic_minus4(u64 p);

/// ((2/l)_4, (l/2)_4) for l = 1 mod 8, where (l/2)_4 := (-1/l)_8.
std::pair<Sign, Sign> half_symbols(u64 l);

/// Complete factorisation of k >= 1 by trial division and Pollard rho.
/// Throws FactorBudgetExceeded if rho does not split a composite within
/// max_rho_iterations steps.
FactoredInteger factor(u64 k, u64 max_rho_iterations = 1u << 22);

/// Signed squarefree part: the unique squarefree s with n / s a square.
i64 squarefree_part(i64 n);

/// Primes in [lo, hi) with p = residue (mod modulus).
std::vector<u64> primes_in_class(u64 lo, u64 hi, u64 residue, u64 modulus);

}  // namespace congruent
