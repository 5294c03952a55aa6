#include "congruent/survey.hpp"

#include <algorithm>
#include <set>

#include "congruent/class_field.hpp"
#include "congruent/json_io.hpp"
#include "congruent/quad_rings.hpp"
#include "congruent/reference_tables.hpp"

namespace congruent {

void FamilySpec::validate() const {
    auto ok = [](int r) { return r == 1 || r == 3 || r == 5 || r == 7; };
    if (!two_p && (!ok(p_res) || !ok(l_res)))
        throw std::invalid_argument("FamilySpec: residues must lie in {1, 3, 5, 7}");
    if (bound < 3) throw std::invalid_argument("FamilySpec: bound must be >= 3");
    if (legendre && *legendre != 1 && *legendre != -1) throw std::invalid_argument("FamilySpec: legendre must be +-1");
    if (profile_filter && (two_p || p_res != 1 || l_res != 1 || legendre.value_or(1) != 1))
        throw std::invalid_argument("FamilySpec: profile filter needs the family (1, 1) with (p/l) = +1");
}

std::string FamilySpec::str() const {
    if (two_p) return "k = 2p, p < " + std::to_string(bound);
    std::string s = "(" + std::to_string(p_res) + ", " + std::to_string(l_res) + ")";
    if (legendre) s += *legendre > 0 ? " (p/l) = +1" : " (p/l) = -1";
    return s + ", primes < " + std::to_string(bound);
}

std::vector<std::pair<u64, u64>> family_pairs(const FamilySpec& spec) {
    spec.validate();
    std::vector<std::pair<u64, u64>> out;
    if (spec.two_p) {
        for (u64 p : primes_in_class(3, spec.bound, 1, 8)) out.emplace_back(2, p);
        return out;
    }
    const auto ps = primes_in_class(3, spec.bound, static_cast<u64>(spec.p_res), 8);
    const auto ls = spec.p_res == spec.l_res ? ps : primes_in_class(3, spec.bound, static_cast<u64>(spec.l_res), 8);
    for (u64 p : ps)
        for (u64 l : ls) {
            if (l <= p) continue;
            if (spec.legendre &&
                jacobi(static_cast<i64>(p), static_cast<i64>(l)).value() != *spec.legendre)
                continue;
            out.emplace_back(p, l);
        }
    return out;
}

namespace {

std::optional<SurveyRow> survey_row(const FamilySpec& spec, u64 p, u64 l) {
    SurveyRow row;
    row.p = p;
    row.l = l;
    row.k = p * l;
    const FactoredInteger k = factor(row.k);
    std::optional<Classification> cls = classify(k);
    if (cls) {
        row.family = to_string(cls->family);
        row.profile = cls->profile;
        if (spec.profile_filter && (!row.profile || *row.profile != *spec.profile_filter)) return std::nullopt;
        row.sha_phi = cls->sha_phi;
        row.sha_psi = cls->sha_psi;
        row.rank_upper = cls->rank_bound;
    } else {
        row.family = "none";
        const CurvePair curve = CurvePair::make(row.k);
        row.rank_upper = static_cast<int>(selmer_group(curve, Isogeny::phi).dim() +
                                          selmer_group(curve, Isogeny::psi).dim()) - 2;
    }
    if (spec.witness_height > 0) {
        const DescentReport rep = descend(row.k, spec.witness_height);
        row.rank_lower = rep.rank_lower;
        row.rank_upper = rep.rank_upper;
        row.witnesses = rep.witnesses;
    }
    return row;
}

SurveyResult assemble(std::vector<std::optional<SurveyRow>>&& slots) {
    SurveyResult result;
    for (auto& s : slots)
        if (s) result.rows.push_back(std::move(*s));
    std::sort(result.rows.begin(), result.rows.end(),
              [](const SurveyRow& a, const SurveyRow& b) { return a.k != b.k ? a.k < b.k : a.p < b.p; });
    SurveySummary& sum = result.summary;
    sum.rows = result.rows.size();
    for (const SurveyRow& r : result.rows) {
        if (r.rank_upper == 0) ++sum.rank_zero;
        ++sum.by_rank_upper[r.rank_upper];
        if (r.profile) ++sum.by_profile[r.profile->str()];
    }
    sum.rank_zero_fraction = sum.rows ? static_cast<double>(sum.rank_zero) / static_cast<double>(sum.rows) : 0.0;
    return result;
}

}  // namespace

SurveyResult run_survey(const FamilySpec& spec) {
    const auto pairs = family_pairs(spec);
    std::vector<std::optional<SurveyRow>> slots(pairs.size());
    const long long n = static_cast<long long>(pairs.size());
    // Exceptions cannot leave an OpenMP region; capture the first one.
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
        try {
            const auto [p, l] = pairs[static_cast<std::size_t>(i)];
            slots[static_cast<std::size_t>(i)] = survey_row(spec, p, l);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return assemble(std::move(slots));
}

SurveyResult run_survey_serial(const FamilySpec& spec) {
    const auto pairs = family_pairs(spec);
    std::vector<std::optional<SurveyRow>> slots;
    slots.reserve(pairs.size());
    for (const auto& [p, l] : pairs) slots.push_back(survey_row(spec, p, l));
    return assemble(std::move(slots));
}

void write_ndjson(std::ostream& out, const SurveyResult& result) {
    for (const SurveyRow& row : result.rows) out << as_json(row).dump() << '\n';
    out << as_json(result.summary).dump() << '\n';
}

// --- smallest examples ---------------------------------------------------------

namespace {

std::vector<std::pair<u64, u64>> admissible_pairs_by_product(u64 max_product) {
    const auto primes = primes_in_class(3, max_product / 17 + 1, 1, 8);
    std::vector<std::pair<u64, u64>> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= max_product; ++j)
            if (jacobi(static_cast<i64>(primes[i]), static_cast<i64>(primes[j])).is_plus())
                pairs.emplace_back(primes[i], primes[j]);
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        const u64 ka = a.first * a.second, kb = b.first * b.second;
        return ka != kb ? ka < kb : a.first < b.first;
    });
    return pairs;
}

}  // namespace

std::pair<u64, u64> smallest_example(const ResidueProfile& profile, u64 max_product) {
    for (const auto& [p, l] : admissible_pairs_by_product(max_product))
        if (residue_profile(p, l) == profile) return {p, l};
    throw BudgetExceeded("smallest_example: no pair with profile " + profile.str() + " and pl <= " +
                         std::to_string(max_product));
}

std::map<std::string, std::pair<u64, u64>> smallest_examples(u64 max_product) {
    std::map<std::string, std::pair<u64, u64>> out;
    for (const auto& [p, l] : admissible_pairs_by_product(max_product)) {
        out.emplace(residue_profile(p, l).str(), std::make_pair(p, l));
        if (out.size() == 32) break;
    }
    return out;
}

// --- regression over the reference tables -----------------------------------------

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

ResidueProfile profile_of(const std::array<int, 5>& s) {
    std::array<Sign, 5> signs;
    for (int i = 0; i < 5; ++i) signs[i] = Sign::from_int(s[i]);
    return ResidueProfile::from_signs(signs);
}

SquareClassGroup group_of(const std::vector<std::string_view>& names, u64 p, u64 l) {
    std::vector<i64> gens;
    for (auto n : names) gens.push_back(reference::class_value(n, p, l));
    return SquareClassGroup::generated_by(gens);
}

std::string pair_str(u64 p, u64 l) { return "(" + std::to_string(p) + ", " + std::to_string(l) + ")"; }

void add(VerificationReport& r, std::string name, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    r.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
}

template <class F>
void guarded(VerificationReport& r, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        r.checks.push_back({name, "no error", std::string("error: ") + e.what(), false});
    }
}

}  // namespace

VerificationReport verify_paper() {
    VerificationReport report;
    const auto& table = reference::profile_table();

    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& row = table[i];
        const std::string tag = "profile table row " + std::to_string(i + 1) + " " + pair_str(row.p, row.l);
        guarded(report, tag, [&] {
            add(report, tag + ": residue profile", profile_of(row.signs).str(), residue_profile(row.p, row.l).str());
        });
        guarded(report, tag, [&] {
            const ResidueProfile prof = profile_of(row.signs);
            const SquareClassGroup psi = psi_obstruction(prof, row.p, row.l);
            const PhiObstruction phi = phi_obstruction(prof, row.p, row.l);
            const SquareClassGroup whole = SquareClassGroup::generated_by({2, static_cast<i64>(row.p), static_cast<i64>(row.l)});
            const SquareClassGroup listed_sha = group_of(row.sha_phi, row.p, row.l);
            const SquareClassGroup listed_w = group_of(row.w_phi, row.p, row.l);
            const std::string psi_listed = row.sha_psi == "p" ? "<" + std::to_string(row.p) + ">" : "1";
            add(report, tag + ": Sha[psi]", psi_listed, psi.str());
            add(report, tag + ": W(phi)", listed_w.str(), phi.w_candidates.str());
            add(report, tag + ": Sha[phi] complements W(phi)", "true",
                listed_sha.is_complement_of(phi.w_candidates, whole) ? "true" : "false");
            const int rank = 4 - static_cast<int>(psi.dim() + phi.sha_phi.dim());
            add(report, tag + ": rank bound", std::to_string(row.rank), std::to_string(rank));
        });
    }
    {
        int zero = 0, four = 0;
        for (const ResidueProfile& prof : ResidueProfile::all()) {
            const int rank = 4 - static_cast<int>(psi_obstruction(prof, 17, 89).dim() +
                                                  phi_obstruction(prof, 17, 89).sha_phi.dim());
            zero += rank == 0;
            four += rank == 4;
        }
        add(report, "profile census: rank 0 / rank 4 profiles", "16 / 1",
            std::to_string(zero) + " / " + std::to_string(four));
    }

    for (const auto& row : reference::symbol_table()) {
        const std::string tag = "symbol table k = " + std::to_string(row.k);
        guarded(report, tag, [&] {
            const ResidueProfile prof = residue_profile(row.p, row.l);
            const std::array<Sign, 5> computed = {prof.l_p_4, prof.p_l_4, prof.m4_p_8, prof.m4_l_8, prof.pi_lambda};
            std::string exp, got;
            for (int i = 0; i < 5; ++i) {
                exp += Sign::from_int(row.signs[i]).str() + " ";
                got += computed[i].str() + " ";
            }
            add(report, tag + ": k = pl", std::to_string(row.k), std::to_string(row.p * row.l));
            add(report, tag + ": symbols", exp, got);
        });
    }
    for (const auto& row : reference::lambda_pi_list()) {
        const std::string tag = "[Lambda/Pi] k = " + std::to_string(row.k);
        guarded(report, tag, [&] {
            const Sign v = ring_symbol(primary_prime(row.l, RingTag::sqrt2), primary_prime(row.p, RingTag::sqrt2));
            add(report, tag, Sign::from_int(row.value).str(), v.str());
        });
    }

    for (u64 p : {17, 41, 73, 89, 97}) {
        const std::string tag = "k = 2p, p = " + std::to_string(p);
        guarded(report, tag, [&] {
            const CurvePair curve = CurvePair::make(2 * p);
            const i64 ps = static_cast<i64>(p);
            add(report, tag + ": Selmer psi", SquareClassGroup::generated_by({-1, 2, ps}).str(),
                selmer_group(curve, Isogeny::psi).str());
            add(report, tag + ": Selmer phi", SquareClassGroup::generated_by({ps}).str(),
                selmer_group(curve, Isogeny::phi).str());
            const Classification c = classify_2p(p);
            add(report, tag + ": rank 0 certified", p % 16 == 9 ? "true" : "false",
                c.rank_bound == 0 ? "true" : "false");
        });
    }

    for (const auto& row : reference::selmer_table()) {
        const std::string tag = "Selmer table (" + std::to_string(row.residue) + ", " + std::to_string(row.residue) +
                                ", " + std::to_string(row.legendre) + ") " + pair_str(row.p, row.l);
        guarded(report, tag, [&] {
            const CurvePair curve = CurvePair::make(row.p * row.l);
            add(report, tag + ": psi", SquareClassGroup::generated_by(row.psi_gens).str(),
                selmer_group(curve, Isogeny::psi).str());
            add(report, tag + ": phi", SquareClassGroup::generated_by(row.phi_gens).str(),
                selmer_group(curve, Isogeny::phi).str());
        });
    }

    guarded(report, "smallest examples", [&] {
        const auto found = smallest_examples(100000);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& row = table[i];
            const auto expected = i == reference::kExceptionRow ? reference::kExceptionSmallest
                                                                : std::make_pair(row.p, row.l);
            auto it = found.find(profile_of(row.signs).str());
            add(report, "smallest example row " + std::to_string(i + 1), pair_str(expected.first, expected.second),
                it == found.end() ? "none" : pair_str(it->second.first, it->second.second));
        }
    });
    return report;
}

}  // namespace congruent
