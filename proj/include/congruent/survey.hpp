#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "congruent/descent.hpp"
#include "congruent/sha_criteria.hpp"

namespace congruent {

/// A family of k = pl (p < l, p = p_res, l = l_res mod 8) or k = 2p.
struct FamilySpec {
    bool two_p = false;
    int p_res = 1;
    int l_res = 1;
    std::optional<int> legendre;  // required value of (p/l)
    u64 bound = 10000;            // primes below bound
    std::optional<ResidueProfile> profile_filter;
    /// When positive, each row also runs a bounded point search (descend).
    u64 witness_height = 0;

    /// Throws std::invalid_argument for residues outside {1,3,5,7}, a bound
    /// below 3 or a profile filter outside the (1,1,+1) family.
    void validate() const;
    std::string str() const;
};

struct SurveyRow {
    u64 k = 0, p = 0, l = 0;
    std::string family;
    std::optional<ResidueProfile> profile;
    int rank_lower = 0;
    int rank_upper = 0;
    SquareClassGroup sha_phi, sha_psi;
    std::vector<Witness> witnesses;
};

struct SurveySummary {
    std::size_t rows = 0;
    std::size_t rank_zero = 0;
    double rank_zero_fraction = 0.0;
    std::map<int, std::size_t> by_rank_upper;
    std::map<std::string, std::size_t> by_profile;
};

struct SurveyResult {
    std::vector<SurveyRow> rows;  // sorted by k
    SurveySummary summary;
};

/// Prime pairs of the family, in enumeration order (p ascending, then l).
std::vector<std::pair<u64, u64>> family_pairs(const FamilySpec& spec);

/// Classifies every pair (OpenMP-parallel over pairs).
SurveyResult run_survey(const FamilySpec& spec);
/// Single-threaded reference for run_survey; same output.
SurveyResult run_survey_serial(const FamilySpec& spec);

/// Newline-delimited JSON: one object per row, then the summary object.
void write_ndjson(std::ostream& out, const SurveyResult& result);

/// Smallest pair (by pl, then p) of primes = 1 mod 8 with (p/l) = +1 and the
/// given profile, among pl <= max_product. Throws BudgetExceeded if none.
std::pair<u64, u64> smallest_example(const ResidueProfile& profile, u64 max_product = 1000000);
/// Smallest example for every profile realised with pl <= max_product.
std::map<std::string, std::pair<u64, u64>> smallest_examples(u64 max_product);

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool passed;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool passed() const;
    std::size_t failures() const;
};

/// Regression over the reference tables (profiles, Sha logic, symbol table,
/// [Lambda/Pi] list, k = 2p Selmer groups, Selmer table for p = l mod 8,
/// smallest examples).
VerificationReport verify_paper();

}  // namespace congruent
