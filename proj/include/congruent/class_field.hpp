#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congruent/int_arith.hpp"

namespace congruent {

struct BudgetExceeded : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct PreconditionUnmet : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};
struct NoRepresentation : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct Unit {
    mpz_class u, v;  // u + v sqrt(D)
    int norm;        // u^2 - D v^2 = +-1
};

/// Least unit > 1 of Z[sqrt D] from the continued fraction of sqrt D.
Unit fundamental_unit(u64 D);

/// A solution of x^2 - D y^2 = c with x, y >= 0 (smallest y found). For
/// |c| < sqrt D absence is certified by the convergents of two periods;
/// otherwise y is scanned up to y_budget and BudgetExceeded is thrown on
/// failure.
std::optional<std::pair<mpz_class, mpz_class>> pell_solvable(u64 D, i64 c, u64 y_budget = 1000000);

/// Binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
    i64 a, b, c;

    i64 discriminant() const { return b * b - 4 * a * c; }
    i64 evaluate(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
    std::string str() const;
};

/// Reduced indefinite form: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced(const QuadForm& f);
/// One step of the reduction operator (a proper equivalence).
QuadForm rho(const QuadForm& f);
/// A reduced form properly equivalent to f.
QuadForm reduce(QuadForm f);
/// Gauss/Dirichlet composition of two forms of the same discriminant (not reduced).
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// Strict (narrow) form class group of a positive nonsquare discriminant.
class FormClassGroup {
public:
    /// Throws BudgetExceeded above max_discriminant.
    explicit FormClassGroup(i64 discriminant, i64 max_discriminant = 80000);

    i64 discriminant() const { return disc_; }
    /// Strict class number h^+.
    std::size_t order() const { return cycles_.size(); }
    std::size_t identity() const { return identity_; }
    /// Class index of any primitive form of this discriminant.
    std::size_t class_of(const QuadForm& f) const;
    const QuadForm& representative(std::size_t cls) const { return cycles_[cls].front(); }
    const std::vector<QuadForm>& cycle(std::size_t cls) const { return cycles_[cls]; }

    std::size_t multiply(std::size_t x, std::size_t y) const;
    std::size_t inverse(std::size_t x) const;
    std::size_t power(std::size_t x, u64 n) const;
    std::size_t element_order(std::size_t x) const;
    /// Invariant factors n_1 | n_2 | ... with product h^+.
    std::vector<u64> invariant_factors() const;
    /// True iff the 2-Sylow subgroup is cyclic.
    bool two_sylow_cyclic() const;
    bool is_power(std::size_t x, u64 n) const;

private:
    i64 disc_;
    std::vector<std::vector<QuadForm>> cycles_;
    std::map<QuadForm, std::size_t> index_;
    std::size_t identity_ = 0;
};

/// Smallest odd positive value coprime to m represented by f (x, y coprime, small box).
i64 represented_coprime_value(const QuadForm& f, i64 m);

struct QuadFieldData {
    u64 l;
    u64 D;             // 2l
    i64 discriminant;  // 8l
    Unit eps;
    int norm_eps;
    u64 h;
    u64 h_plus;
    bool two_strict_principal;
};

QuadFieldData quad_field_data(u64 l);

struct ScholzPrediction {
    /// 0 for (2/l) = -1, else 1, 2 or 3.
    int case_number;
    std::optional<int> norm_eps;
    /// Expected h mod 4 and h^+ mod 8 where determined.
    std::optional<u64> h_mod4;
    std::optional<u64> h_plus_mod4;
    std::optional<u64> h_plus_mod8;
    /// Case (3): 4 | h and 8 | h^+.
    bool divisible_case = false;

    /// True iff the computed field data are consistent with the prediction.
    bool matches(const QuadFieldData& d) const;
};

/// Predictions of the class number cases from (2/l), (2/l)_4 and (l/2)_4.
/// Requires l prime = 1 mod 4 (BadResidueClass otherwise).
ScholzPrediction scholz_case(u64 l);

/// Whether the prime above 2 in Q(sqrt 2l) is principal in the strict sense,
/// via solvability of x^2 - 2l y^2 = 2. Requires l = 1 mod 8 and
/// (-4/l)_8 = -1 (PreconditionUnmet otherwise).
bool strict_two_principal(u64 l);

/// Whether the strict class of a prime ideal above p in Q(sqrt 2l) is a
/// fourth power, using the form (p, 2b, (b^2 - 2l)/p) of discriminant 8l.
bool fourth_power_class_test(u64 p, u64 l);

}  // namespace congruent
