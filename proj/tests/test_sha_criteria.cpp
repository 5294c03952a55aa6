#include "doctest.h"

#include <numeric>

#include "congruent/quad_rings.hpp"
#include "congruent/sha_criteria.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {

ResidueProfile prof(int a, int b, int c, int d, int e) {
    return ResidueProfile::from_signs(
        {Sign::from_int(a), Sign::from_int(b), Sign::from_int(c), Sign::from_int(d), Sign::from_int(e)});
}

SquareClassGroup G(std::initializer_list<i64> g) { return SquareClassGroup::generated_by(g); }

std::vector<std::pair<u64, u64>> pairs_mod8(u64 residue, u64 bound, int legendre) {
    std::vector<std::pair<u64, u64>> out;
    const auto ps = primes_in_class(3, bound, residue, 8);
    for (u64 p : ps)
        for (u64 l : ps)
            if (p < l && (legendre == 0 || jacobi(static_cast<i64>(p), static_cast<i64>(l)).value() == legendre))
                out.emplace_back(p, l);
    return out;
}

}  // namespace

TEST_CASE("residue_profile examples") {
    CHECK(residue_profile(17, 1361) == prof(1, 1, 1, -1, -1));
    CHECK(residue_profile(41, 769) == prof(1, 1, 1, 1, -1));
    CHECK(residue_profile(113, 569) == prof(-1, 1, 1, 1, 1));
    CHECK(residue_profile(17, 1361).str() == "+ + + - -");
    CHECK_THROWS_AS(residue_profile(17, 41), UndefinedSymbol);
    CHECK_THROWS_AS(residue_profile(17, 13), UndefinedSymbol);
}

TEST_CASE("residue_profile columns from direct exponentiation") {
    for (const auto& [p, l] : pairs_mod8(1, 800, 1)) {
        const ResidueProfile r = residue_profile(p, l);
        CHECK(r.l_p_4.value() == oracle::power_residue(static_cast<i64>(l), p, 4));
        CHECK(r.p_l_4.value() == oracle::power_residue(static_cast<i64>(p), l, 4));
        CHECK(r.m4_p_8.value() == oracle::power_residue(-4, p, 8));
        CHECK(r.m4_l_8.value() == oracle::power_residue(-4, l, 8));
    }
}

TEST_CASE("Table 1 examples") {
    const ResidueProfile r = residue_profile(17, 1361);
    CHECK_FALSE(table1_case_conditions({1, 'A', 'a'}, r));
    CHECK(table1_case_conditions({1, 'A', 'a'}, prof(1, 1, 1, 1, 1)));
    CHECK_FALSE(table1_case_conditions({2, 'B', 'b'}, r));
    CHECK(CaseLabel::all().size() == 8);
}

TEST_CASE("psi_obstruction examples") {
    CHECK(psi_obstruction(residue_profile(17, 1361), 17, 1361) == G({17}));
    CHECK(psi_obstruction(prof(1, 1, 1, 1, 1), 17, 1361) == SquareClassGroup());
}

TEST_CASE("Table 2 examples") {
    const ResidueProfile r = residue_profile(41, 769);
    CHECK(table2_conditions(PhiClass::p, r));
    CHECK_FALSE(table2_conditions(PhiClass::two, r));
    // [Pi/Lambda] = -1 and (-4/p)_8 = (-4/l)_8 = (p/l)_4 (l/p)_4.
    CHECK_FALSE(table2_conditions(PhiClass::two_pl, prof(-1, 1, 1, 1, 1)));
    CHECK_FALSE(table2_conditions(PhiClass::two_pl, prof(-1, -1, 1, -1, -1)));
}

TEST_CASE("phi_obstruction examples") {
    const SquareClassGroup whole41 = G({2, 41, 769});
    const PhiObstruction a = phi_obstruction(residue_profile(41, 769), 41, 769);
    CHECK(a.w_candidates == G({41}));
    CHECK(G({82, 769}).is_complement_of(a.w_candidates, whole41));
    CHECK(a.sha_phi.is_complement_of(a.w_candidates, whole41));

    const PhiObstruction b = phi_obstruction(residue_profile(17, 1361), 17, 1361);
    CHECK(b.w_candidates == SquareClassGroup());
    CHECK(b.sha_phi == G({2, 17, 1361}));

    const PhiObstruction c = phi_obstruction(residue_profile(113, 569), 113, 569);
    CHECK(c.w_candidates == G({113, 569}));
    CHECK(c.sha_phi == G({2}));
}

TEST_CASE("profile census") {
    int zero = 0, four = 0;
    for (const ResidueProfile& r : ResidueProfile::all()) {
        const int rank = 4 - static_cast<int>(psi_obstruction(r, 17, 89).dim() + phi_obstruction(r, 17, 89).sha_phi.dim());
        zero += rank == 0;
        four += rank == 4;
        CHECK(rank >= 0);
        CHECK(rank % 2 == 0);
    }
    CHECK(zero == 16);
    CHECK(four == 1);
}

TEST_CASE("prop15_conditions") {
    for (const auto& [p, l] : pairs_mod8(1, 700, 1)) {
        const ResidueProfile r = residue_profile(p, l);
        const auto c = prop15_conditions(factor(p * l), p);
        REQUIRE(c.size() == 4);
        CHECK(c[0].holds == r.m4_p_8.is_plus());
        CHECK(c[1].holds == (r.p_l_4 * r.l_p_4).is_plus());
        CHECK(c[2].holds == (r.m4_p_8 == r.l_p_4));
        CHECK(c[3].holds);
        if (table2_conditions(PhiClass::p, r))
            for (const auto& nc : c) CHECK(nc.holds);
        for (const auto& nc : prop15_conditions(factor(p * l), 1)) CHECK(nc.holds);
    }
    // Three primes, mutually quadratic residues.
    const auto ps = primes_in_class(3, 2000, 1, 8);
    bool found = false;
    for (std::size_t i = 0; i < ps.size() && !found; ++i)
        for (std::size_t j = i + 1; j < ps.size() && !found; ++j)
            for (std::size_t m = j + 1; m < ps.size() && !found; ++m) {
                const i64 a = static_cast<i64>(ps[i]), b = static_cast<i64>(ps[j]), c = static_cast<i64>(ps[m]);
                if (jacobi(a, b).is_plus() && jacobi(a, c).is_plus() && jacobi(b, c).is_plus()) {
                    found = true;
                    const FactoredInteger k = factor(ps[i] * ps[j] * ps[m]);
                    for (u64 A : {ps[i], ps[i] * ps[j], ps[i] * ps[j] * ps[m]})
                        CHECK(prop15_conditions(k, A).size() == 4);
                }
            }
    CHECK(found);
    CHECK_THROWS_AS(prop15_conditions(factor(17 * 41), 17), FamilyMismatch);
}

TEST_CASE("classify_table3 examples") {
    CHECK(classify_table3(17, 953).rank_bound == 0);
    const Classification a = classify_table3(41, 2273);
    CHECK(a.rank_bound == 4);
    CHECK(a.sha_phi == SquareClassGroup());
    CHECK(a.sha_psi == SquareClassGroup());
    const Classification b = classify_table3(97, 353);
    CHECK(b.rank_bound == 2);
    CHECK(b.w_phi_candidates == G({353}));
    CHECK(G({97, 706}).is_complement_of(b.w_phi_candidates, G({2, 97, 353})));
    const Classification c = classify_table3(17, 1361);
    REQUIRE(c.sha2_dim);
    CHECK(*c.sha2_dim == 4);
}

TEST_CASE("classify_minus") {
    int certified = 0, total = 0;
    for (const auto& [p, l] : pairs_mod8(1, 1000, -1)) {
        const Classification c = classify_minus(p, l);
        const i64 pl = static_cast<i64>(p * l);
        ++total;
        if ((octic_minus4(p) * octic_minus4(l)).is_minus()) {
            ++certified;
            CHECK(c.rank_bound == 0);
            CHECK(c.sha_phi == G({2, pl}));
        } else {
            CHECK(c.sha_phi == SquareClassGroup());
            CHECK(c.rank_bound == 2);
        }
    }
    CHECK(certified * 10 >= total * 4);
    CHECK_THROWS_AS(classify_minus(17, 89), FamilyMismatch);
}

TEST_CASE("classify_small_residues") {
    for (const auto& [p, l] : pairs_mod8(3, 500, 0)) CHECK(classify_small_residues(p, l).rank_bound == 0);
    for (const auto& [p, l] : pairs_mod8(5, 500, 1)) {
        const Classification c = classify_small_residues(p, l);
        if (quartic_symbol(static_cast<i64>(p), l) != quartic_symbol(static_cast<i64>(l), p)) CHECK(c.rank_bound == 0);
    }
    for (const auto& [p, l] : pairs_mod8(7, 500, 0)) {
        const Classification c = classify_small_residues(p, l);
        if (lagrange_77_symbol(p, l).is_minus()) {
            CHECK(c.rank_bound == 0);
            CHECK(c.sha_phi == G({2}));
        }
    }
    CHECK_THROWS_AS(classify_small_residues(17, 41), FamilyMismatch);
}

TEST_CASE("obstructed torsors have no small points") {
    // Certificates claim these torsors have no rational points at all; a
    // point at any height would refute them.
    for (const auto& [p, l] : pairs_mod8(5, 300, -1)) {
        const Classification c = classify_small_residues(p, l);
        if (c.sha_phi.size() == 1) continue;
        const CurvePair curve = CurvePair::make(p * l);
        for (i64 b1 : c.sha_phi.elements())
            if (b1 != 1) CHECK_FALSE(search_points(Torsor::make(curve, Isogeny::phi, b1), 60));
    }
    for (const auto& [p, l] : pairs_mod8(7, 300, 0)) {
        const Classification c = classify_small_residues(p, l);
        if (c.rank_bound != 0) continue;
        const CurvePair curve = CurvePair::make(p * l);
        CHECK_FALSE(search_points(Torsor::make(curve, Isogeny::phi, 2), 60));
        CHECK_FALSE(search_points(Torsor::make(curve, Isogeny::psi, static_cast<i64>(c.p)), 60));
    }
}

TEST_CASE("classify_2p") {
    const Classification a = classify_2p(41);
    CHECK(a.rank_bound == 0);
    CHECK(a.sha_phi == G({41}));
    CHECK(a.sha_psi == G({41}));
    const Classification b = classify_2p(17);
    CHECK(b.selmer_psi == G({-1, 2, 17}));
    CHECK(b.selmer_phi == G({17}));
    CHECK(b.rank_bound == 2);
    CHECK(classify_2p(73).rank_bound == 0);
    CHECK_THROWS_AS(classify_2p(13), FamilyMismatch);
}

TEST_CASE("closed-form Selmer groups agree with local solvability") {
    auto check = [](const Classification& c, u64 k) {
        const CurvePair curve = CurvePair::make(k);
        CHECK(c.selmer_psi == selmer_group(curve, Isogeny::psi));
        CHECK(c.selmer_phi == selmer_group(curve, Isogeny::phi));
    };
    int n = 0;
    for (const auto& [p, l] : pairs_mod8(1, 3000, -1))
        if (n++ < 20) check(classify_minus(p, l), p * l);
    for (u64 residue : {3, 5, 7}) {
        n = 0;
        for (const auto& [p, l] : pairs_mod8(residue, 3000, 0))
            if (n++ < 20) check(classify_small_residues(p, l), p * l);
    }
    n = 0;
    for (u64 p : primes_in_class(3, 3000, 1, 8))
        if (n++ < 20) check(classify_2p(p), 2 * p);
}

TEST_CASE("classify dispatch") {
    CHECK(classify(factor(4633))->family == Family::pl_11_plus);
    CHECK(classify(factor(17 * 41))->family == Family::pl_11_minus);
    CHECK(classify(factor(82))->family == Family::two_p);
    CHECK(classify(factor(33))->family == Family::pl_33);
    CHECK_FALSE(classify(factor(15)).has_value());
    CHECK_FALSE(classify(factor(7)).has_value());
}

TEST_CASE("prop11_check on brute-forced solutions") {
    const std::vector<u64> coeffs = {1, 5, 13, 17, 29, 37, 41};
    auto good = [](u64 n) {
        for (u64 q : factor(n).primes())
            if (q % 4 != 1) return false;
        return factor(n).squarefree();
    };
    int checked = 0;
    for (u64 A : coeffs)
        for (u64 B : coeffs) {
            if (std::gcd(A, B) != 1) continue;
            for (i64 x = 1; x <= 120; ++x)
                for (i64 y = 1; y <= 120; ++y) {
                    if (std::gcd(x, y) != 1) continue;
                    const i64 s = static_cast<i64>(A) * x * x + static_cast<i64>(B) * y * y;
                    const i64 t = static_cast<i64>(A) * x * x - static_cast<i64>(B) * y * y;
                    if (t <= 0) continue;
                    const u64 C = static_cast<u64>(squarefree_part(s)), D = static_cast<u64>(squarefree_part(t));
                    if (!good(C) || !good(D)) continue;
                    if (std::gcd(A * B, C * D) != 1 || std::gcd(C, D) != 1) continue;
                    const i64 v = static_cast<i64>(isqrt(static_cast<u64>(s) / C));
                    const i64 w = static_cast<i64>(isqrt(static_cast<u64>(t) / D));
                    Prop11Result r;
                    try {
                        r = prop11_check({A, B, C, D}, x, y, v, w);
                    } catch (const HypothesisViolated&) {
                        continue;
                    }
                    ++checked;
                    INFO("A B C D = " << A << " " << B << " " << C << " " << D << ", x y v w = " << x << " " << y
                                      << " " << v << " " << w);
                    CHECK(r.congruence);
                    CHECK(r.rel4);
                    if (r.rel5) CHECK(*r.rel5);
                }
        }
    CHECK(checked >= 20);
    CHECK(prop11_check({1, 1, 1, 1}, 1, 0, 1, 1).congruence);
    CHECK_THROWS_AS(prop11_check({1, 5, 13, 1}, 1, 1, 1, 1), HypothesisViolated);
}

TEST_CASE("lemma_witness_check against symbol_capital") {
    // Brute-force solutions: P and L are the squarefree parts of the two
    // quadratic forms, z and w the remaining square roots.
    auto admissible = [](i64 P, i64 L) {
        return P > 1 && L > 1 && P != L && P % 8 == 1 && L % 8 == 1 && is_prime(static_cast<u64>(P)) &&
               is_prime(static_cast<u64>(L)) && jacobi(P, L).is_plus();
    };
    auto split = [](i64 n) {
        const i64 P = squarefree_part(n);
        return std::make_pair(P, static_cast<i64>(isqrt(static_cast<u64>(n / P))));
    };
    int n12 = 0, n13 = 0;
    for (i64 x = 1; x <= 500; ++x)
        for (i64 y = 1; y <= 500; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const i64 a12 = 2 * y * y - x * x, b12 = x * x - y * y;
            if (a12 > 0 && b12 != 0) {
                const auto [P, z] = split(a12);
                const auto [L, w] = split(std::abs(b12));
                if (admissible(P, L)) {
                    ++n12;
                    CHECK(lemma_witness_check(12, static_cast<u64>(P), static_cast<u64>(L), x, y, z, w,
                                              b12 > 0 ? 1 : -1) ==
                          symbol_capital(static_cast<u64>(P), static_cast<u64>(L), RingTag::sqrt2));
                }
            }
            for (int eps : {1, -1}) {
                const i64 a13 = x * x + 2 * eps * y * y, b13 = x * x + eps * y * y;
                if (a13 <= 0 || b13 <= 0) continue;
                const auto [P, z] = split(a13);
                const auto [L, w] = split(b13);
                if (!admissible(P, L)) continue;
                ++n13;
                CHECK(lemma_witness_check(13, static_cast<u64>(P), static_cast<u64>(L), x, y, z, w, eps) ==
                      symbol_capital(static_cast<u64>(P), static_cast<u64>(L), RingTag::sqrt2));
            }
        }
    CHECK(n12 >= 20);
    CHECK(n13 >= 20);
    CHECK_THROWS_AS(lemma_witness_check(12, 17, 89, 1, 1, 1, 1, 1), HypothesisViolated);
}
