#include "doctest.h"

#include <cstdlib>

#include "congruent/quad_rings.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {

bool associated(const QuadInt& x, const QuadInt& y) { return x.divisible_by(y) && y.divisible_by(x); }

bool associated_up_to_conjugate(const QuadInt& x, const QuadInt& y) {
    return associated(x, y) || associated(x, y.conjugate());
}

std::vector<std::pair<u64, u64>> admissible_pairs(u64 bound) {
    std::vector<std::pair<u64, u64>> out;
    const auto ps = primes_in_class(3, bound, 1, 8);
    for (u64 p : ps)
        for (u64 l : ps)
            if (p != l && jacobi(static_cast<i64>(p), static_cast<i64>(l)).is_plus()) out.emplace_back(p, l);
    return out;
}

int oracle_symbol(const QuadInt& a, const QuadInt& b) {
    return oracle::ring_legendre(omega_square(a.ring()), a.a(), a.b(), b.a(), b.b(),
                                 static_cast<u64>(std::llabs(b.norm())));
}

}  // namespace

TEST_CASE("split_prime examples") {
    CHECK(associated_up_to_conjugate(split_prime(17, RingTag::gaussian), QuadInt(RingTag::gaussian, 1, 4)));
    CHECK(associated_up_to_conjugate(split_prime(17, RingTag::sqrt2), QuadInt(RingTag::sqrt2, 5, 2)));
    CHECK(associated_up_to_conjugate(split_prime(89, RingTag::gaussian), QuadInt(RingTag::gaussian, 5, 8)));
    CHECK_THROWS_AS(split_prime(7, RingTag::gaussian), Inert);
    CHECK_THROWS_AS(split_prime(5, RingTag::sqrt2), Inert);
    CHECK_THROWS_AS(split_prime(5, RingTag::sqrt_minus2), Inert);
}

TEST_CASE("split_prime norms against exhaustive representations") {
    for (u64 p : primes_in_class(3, 600, 1, 8)) {
        const i64 pi = static_cast<i64>(p);
        CHECK(split_prime(p, RingTag::gaussian).norm() == pi);
        CHECK(split_prime(p, RingTag::sqrt_minus2).norm() == pi);
        CHECK(std::llabs(split_prime(p, RingTag::sqrt2).norm()) == pi);
        CHECK_FALSE(oracle::representations(-1, pi, 25).empty());
    }
    for (u64 p : primes_in_class(3, 600, 7, 8)) CHECK(std::llabs(split_prime(p, RingTag::sqrt2).norm()) == static_cast<i64>(p));
    for (u64 p : primes_in_class(3, 600, 3, 8)) CHECK(split_prime(p, RingTag::sqrt_minus2).norm() == static_cast<i64>(p));
}

TEST_CASE("primary_associate examples") {
    CHECK(primary_associate(QuadInt(RingTag::gaussian, 1, 4)) == QuadInt(RingTag::gaussian, 1, 4));
    CHECK(primary_associate(QuadInt(RingTag::sqrt2, 5, 2)) == QuadInt(RingTag::sqrt2, 5, 2));
    CHECK(primary_associate(QuadInt(RingTag::sqrt_minus2, 3, 2)) == QuadInt(RingTag::sqrt_minus2, -3, 2));
    for (u64 p : primes_in_class(3, 2000, 1, 8))
        for (RingTag r : {RingTag::gaussian, RingTag::sqrt2, RingTag::sqrt_minus2}) {
            const QuadInt x = split_prime(p, r);
            const QuadInt y = primary_associate(x);
            CHECK(is_primary(y));
            CHECK(associated_up_to_conjugate(y, x));
        }
}

TEST_CASE("ring_symbol examples") {
    const QuadInt pi17 = primary_prime(17, RingTag::gaussian);
    const QuadInt la89 = primary_prime(89, RingTag::gaussian);
    const QuadInt one_plus_i(RingTag::gaussian, 1, 1);
    CHECK(ring_symbol(one_plus_i, pi17) == octic_minus4(17));
    CHECK(ring_symbol(one_plus_i, pi17) == Sign::minus());
    CHECK(ring_symbol(pi17, la89) == quartic_symbol(17, 89) * quartic_symbol(89, 17));
    CHECK(ring_symbol(pi17, la89) == Sign::minus());
    const QuadInt g(RingTag::gaussian, 3, 7);
    CHECK(ring_symbol(g * g, la89) == Sign::plus());
    CHECK_THROWS_AS(ring_symbol(pi17, QuadInt(RingTag::gaussian, 3, 0)), CompositeModulus);
    CHECK_THROWS_AS(ring_symbol(pi17 * la89, pi17), NotCoprime);
}

TEST_CASE("ring_symbol against the residue-field oracle") {
    for (u64 q : primes_in_class(3, 300, 1, 8))
        for (RingTag r : {RingTag::gaussian, RingTag::sqrt2, RingTag::sqrt_minus2}) {
            const QuadInt beta = split_prime(q, r);
            for (i64 a = -6; a <= 6; ++a)
                for (i64 b = -6; b <= 6; ++b) {
                    const QuadInt alpha(r, a, b);
                    const int expected = oracle_symbol(alpha, beta);
                    if (expected == 0)
                        CHECK_THROWS_AS(ring_symbol(alpha, beta), NotCoprime);
                    else
                        CHECK(ring_symbol(alpha, beta).value() == expected);
                }
        }
}

TEST_CASE("symbol_capital examples") {
    CHECK(symbol_capital(17, 89, RingTag::sqrt2) == Sign::plus());
    CHECK(symbol_capital(17, 137, RingTag::sqrt2) == Sign::minus());
    CHECK(symbol_capital(41, 113, RingTag::sqrt2) == Sign::plus());
    CHECK_THROWS_AS(symbol_capital(17, 41, RingTag::sqrt2), UndefinedSymbol);
}

TEST_CASE("identities over admissible pairs") {
    for (const auto& [p, l] : admissible_pairs(700)) {
        const Sign s2 = symbol_capital(p, l, RingTag::sqrt2);
        const Sign sm2 = symbol_capital(p, l, RingTag::sqrt_minus2);
        const Sign si = symbol_capital(p, l, RingTag::gaussian);
        const Sign burde = quartic_symbol(static_cast<i64>(p), l) * quartic_symbol(static_cast<i64>(l), p);
        CHECK(s2 * sm2 == burde);
        CHECK(si == burde);
        CHECK(s2 == symbol_capital(l, p, RingTag::sqrt2));
        CHECK(sm2 == symbol_capital(l, p, RingTag::sqrt_minus2));
        for (RingTag r : {RingTag::gaussian, RingTag::sqrt2, RingTag::sqrt_minus2}) {
            const QuadInt P = primary_prime(p, r), L = primary_prime(l, r);
            const Sign base = ring_symbol(P, L);
            CHECK(ring_symbol(P, L.conjugate()) == base);
            CHECK(ring_symbol(P.conjugate(), L) == base);
            CHECK(ring_symbol(P, L).value() == oracle_symbol(P, L));
        }
    }
}

TEST_CASE("rational numerators reduce to Legendre symbols") {
    for (u64 q : primes_in_class(3, 500, 1, 8))
        for (RingTag r : {RingTag::gaussian, RingTag::sqrt2, RingTag::sqrt_minus2})
            for (i64 a = 2; a < 40; ++a)
                if (a % static_cast<i64>(q) != 0)
                    CHECK(ring_symbol(QuadInt(r, a, 0), split_prime(q, r)) == jacobi(a, static_cast<i64>(q)));
}

TEST_CASE("the unit 1 + sqrt2 modulo p") {
    int n = 0;
    for (u64 p : primes_in_class(3, 10000, 1, 8)) {
        if (n++ == 100) break;
        CHECK(ring_symbol(fundamental_unit_sqrt2(), split_prime(p, RingTag::sqrt2)) == octic_minus4(p));
        CHECK(ring_symbol(QuadInt(RingTag::gaussian, 1, 1), primary_prime(p, RingTag::gaussian)) == octic_minus4(p));
    }
}

TEST_CASE("primary_mod4 for negative norms") {
    for (u64 l : primes_in_class(3, 1000, 7, 8)) {
        QuadInt x = split_prime(l, RingTag::sqrt2);
        if (x.norm() > 0) x = x * fundamental_unit_sqrt2();
        const QuadInt y = primary_mod4(x);
        CHECK(y.norm() == -static_cast<i64>(l));
        CHECK(oracle::reduce(y.a(), 4) == 1);
        CHECK(oracle::reduce(y.b(), 4) == 0);
        CHECK(associated(x, y));
    }
}
