#pragma once

#include <string>

#include "congruent/int_arith.hpp"

namespace congruent {

struct Inert : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct SplitFailed : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct NoPrimaryAssociate : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct CompositeModulus : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

/// One of the three norm-Euclidean rings Z[w] with w^2 = -1, 2, -2.
enum class RingTag { gaussian, sqrt2, sqrt_minus2 };

/// w^2 for the ring.
constexpr i64 omega_square(RingTag r) {
    switch (r) {
        case RingTag::gaussian: return -1;
        case RingTag::sqrt2: return 2;
        case RingTag::sqrt_minus2: return -2;
    }
    return 0;
}

std::string to_string(RingTag r);

/// a + b*w in one of the rings above. Values are kept in 64 bits; products
/// go through 128-bit intermediates.
class QuadInt {
public:
    QuadInt(RingTag ring, i64 a, i64 b) : ring_(ring), a_(a), b_(b) {}

    RingTag ring() const { return ring_; }
    i64 a() const { return a_; }
    i64 b() const { return b_; }
    /// a^2 - w^2 b^2.
    i64 norm() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadInt conjugate() const { return {ring_, a_, -b_}; }
    QuadInt operator-() const { return {ring_, -a_, -b_}; }
    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    friend bool operator==(const QuadInt&, const QuadInt&) = default;

    /// True iff y divides *this in the ring.
    bool divisible_by(const QuadInt& y) const;
    /// Nearest-lattice-point quotient; |N(x - q*y)| < |N(y)|.
    QuadInt round_div(const QuadInt& y) const;

    std::string str() const;

private:
    RingTag ring_;
    i64 a_;
    i64 b_;
};

/// The unit 1 + sqrt2.
inline QuadInt fundamental_unit_sqrt2() { return {RingTag::sqrt2, 1, 1}; }

/// Euclidean gcd in the ring (up to units).
QuadInt ring_gcd(QuadInt x, QuadInt y);

/// An element of norm +-p, found as gcd(p, r + w) with r^2 = w^2 mod p and
/// an exhaustive fallback for p < 10^6. Norm is exactly +p in Z[i] and
/// Z[sqrt-2]. Throws Inert when p does not split.
QuadInt split_prime(u64 p, RingTag ring);

/// True iff x = 1 modulo (2+2i), (2 sqrt2), (2 sqrt-2) respectively.
bool is_primary(const QuadInt& x);

/// The associate (or associate of the conjugate) of alpha that is primary.
/// Candidates are u * alpha and u * conj(alpha), with u = +-eps^n, |n| <= 8
/// in Z[sqrt2]. Among primary candidates the smallest |n| wins, then a
/// positive rational part, then a positive w-part. Throws NoPrimaryAssociate.
QuadInt primary_associate(const QuadInt& alpha);

/// Z[sqrt2] only: the associate of alpha that is = 1 mod 4, unique up to
/// eps^4. Used for elements of negative norm, where = 1 mod 2 sqrt2 leaves
/// a sign ambiguity in residue symbols.
QuadInt primary_mod4(const QuadInt& alpha);

/// Quadratic residue symbol [alpha/beta] for a prime element beta of odd
/// prime norm q: the Legendre symbol of the image of alpha in Z[w]/(beta) = F_q.
/// Throws CompositeModulus, NotCoprime.
Sign ring_symbol(const QuadInt& alpha, const QuadInt& beta);

/// [Pi/Lambda] in Z[sqrt2], [Pi*/Lambda*] in Z[sqrt-2] or [pi/lambda] in Z[i]
/// with primary elements of norm p and l. Requires p = l = 1 mod 8, p != l,
/// (p/l) = +1 (UndefinedSymbol otherwise).
Sign symbol_capital(u64 p, u64 l, RingTag ring);

/// Primary element of norm p in the ring (p = 1 mod 8 for all three rings).
QuadInt primary_prime(u64 p, RingTag ring);

}  // namespace congruent
