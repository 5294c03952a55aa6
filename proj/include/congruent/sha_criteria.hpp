#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "congruent/descent.hpp"
#include "congruent/int_arith.hpp"
#include "congruent/square_classes.hpp"

namespace congruent {

struct FamilyMismatch : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct InconsistentCriteria : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct HypothesisViolated : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

/// The five signs ([Pi/Lambda], (l/p)_4, (p/l)_4, (-4/p)_8, (-4/l)_8) for
/// p = l = 1 mod 8 with (p/l) = +1.
struct ResidueProfile {
    Sign pi_lambda, l_p_4, p_l_4, m4_p_8, m4_l_8;

    /// (-4/pl)_8, defined as the product of the two octic symbols.
    Sign m4_pl_8() const { return m4_p_8 * m4_l_8; }
    std::array<Sign, 5> signs() const { return {pi_lambda, l_p_4, p_l_4, m4_p_8, m4_l_8}; }
    static ResidueProfile from_signs(const std::array<Sign, 5>& s) { return {s[0], s[1], s[2], s[3], s[4]}; }
    /// All 32 profiles; the first sign varies slowest, + before -.
    static std::vector<ResidueProfile> all();

    friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;
    /// "+ + + - -".
    std::string str() const;
};

ResidueProfile residue_profile(u64 p, u64 l);

/// Divisibility case of a point on T^(psi)(p): N^2 = p M^4 - p l^2 e^4.
struct CaseLabel {
    int two_case;  // 1: 2 | e, 2: 2 | N
    char l_case;   // 'A': l does not divide MN, 'B': l | M
    char p_case;   // 'a': p | M^2 + l e^2, 'b': p | M^2 - l e^2

    static std::vector<CaseLabel> all();
    std::string str() const;
    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

bool table1_case_conditions(const CaseLabel& c, const ResidueProfile& profile);

/// <p> (given as the class p) when no row of Table 1 can hold, else {1}.
SquareClassGroup psi_obstruction(const ResidueProfile& profile, u64 p, u64 l);

/// Classes of the phi-Selmer group <2, p, l> other than 1.
enum class PhiClass { two, p, two_p, l, two_l, pl, two_pl };
std::vector<PhiClass> all_phi_classes();
i64 phi_class_value(PhiClass c, u64 p, u64 l);

bool table2_conditions(PhiClass b1, const ResidueProfile& profile);

struct PhiObstruction {
    SquareClassGroup w_candidates;
    SquareClassGroup sha_phi;
};

/// w_candidates: 1 and the classes whose Table 2 row holds (must be a
/// group, else InconsistentCriteria); sha_phi: a complement in <2, p, l>.
PhiObstruction phi_obstruction(const ResidueProfile& profile, u64 p, u64 l);

struct NamedCondition {
    std::string name;
    bool holds;
};

/// Necessary conditions (1)-(4) for T^(phi)(A) on E_k, k = A B a product of
/// distinct primes = 1 mod 8 that are pairwise quadratic residues, with
/// alpha the product of the primary Gaussian primes of norm p | A.
std::vector<NamedCondition> prop15_conditions(const FactoredInteger& k, u64 A);

enum class Family { pl_11_plus, pl_11_minus, pl_33, pl_55_plus, pl_55_minus, pl_77, two_p };

std::string to_string(Family f);

struct Classification {
    Family family;
    u64 p = 0, l = 0;
    std::optional<ResidueProfile> profile;
    SquareClassGroup selmer_psi, selmer_phi;
    SquareClassGroup sha_psi, sha_phi;
    SquareClassGroup w_phi_candidates;
    int rank_bound = 0;
    std::optional<int> sha2_dim;
    /// Necessary conditions recorded when no obstruction is certified.
    std::vector<NamedCondition> conditions;
};

Classification classify_table3(u64 p, u64 l);
Classification classify_minus(u64 p, u64 l);
Classification classify_small_residues(u64 p, u64 l);
Classification classify_2p(u64 p);

/// Recognise k as 2p or pl in one of the families above.
std::optional<Classification> classify(const FactoredInteger& k);

/// The two Prop 6 symbols for the non-trivial rows, under the conventions
/// documented in the implementation.
Sign lagrange_55_minus_symbol(u64 p, u64 l);
Sign lagrange_77_symbol(u64 p, u64 l);

struct QuadrupleABCD {
    u64 A, B, C, D;
};

struct Prop11Result {
    bool rel4;
    /// Undefined when 2 is a non-residue modulo some prime of CD.
    std::optional<bool> rel5;
    bool congruence;
};

/// Evaluates the relations of Prop 11 for a solution of
/// A x^2 + B y^2 = C v^2, A x^2 - B y^2 = D w^2. Throws HypothesisViolated
/// if the equations or the coprimality hypotheses fail.
Prop11Result prop11_check(const QuadrupleABCD& q, i64 x, i64 y, i64 v, i64 w);

/// Predicted [Pi/Lambda] from a solution of the Lemma 12 system
/// (x^2 - 2y^2 = -P z^2, x^2 - y^2 = eps L w^2) or the Lemma 13 system
/// (x^2 + 2 eps y^2 = P z^2, x^2 + eps y^2 = L w^2).
Sign lemma_witness_check(int kind, u64 P, u64 L, i64 x, i64 y, i64 z, i64 w, int eps);

/// A point on T^(psi)(p) split into the case equations.
struct CaseDecomposition {
    CaseLabel label;
    i64 M, e, m, a, b;  // m = M / l in case B, else 0
    QuadrupleABCD abcd;
    i64 x, y, v, w;     // Prop 11 variables
    struct Lemma {
        int kind;
        u64 P, L;
        i64 x, y, z, w;
        int eps;
    } lemma;
};

/// Throws HypothesisViolated if pt is not a primitive point on
/// N^2 = p M^4 - p l^2 e^4 or does not fit any case.
CaseDecomposition decompose_psi_point(u64 p, u64 l, const TorsorPoint& pt);

}  // namespace congruent
