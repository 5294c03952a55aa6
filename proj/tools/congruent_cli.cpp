#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "congruent/descent.hpp"
#include "congruent/json_io.hpp"
#include "congruent/reference_tables.hpp"
#include "congruent/sha_criteria.hpp"
#include "congruent/survey.hpp"

using namespace congruent;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool g_json = false;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string profile_columns(const ResidueProfile& r) {
    return "[Pi/Lambda] " + r.pi_lambda.str() + "  (l/p)_4 " + r.l_p_4.str() + "  (p/l)_4 " + r.p_l_4.str() +
           "  (-4/p)_8 " + r.m4_p_8.str() + "  (-4/l)_8 " + r.m4_l_8.str();
}

int cmd_classify(u64 k_in, u64 height) {
    if (k_in == 0) throw UsageError("--k must be positive");
    const i64 reduced = squarefree_part(static_cast<i64>(k_in));
    const u64 k = static_cast<u64>(reduced);
    const DescentReport rep = descend(k, height);
    const std::optional<Classification> cls = classify(factor(k));

    if (g_json) {
        json out = as_json(rep);
        out["input_k"] = k_in;
        out["criteria"] = cls ? as_json(*cls) : json("not applicable");
        print_json(out);
        return 0;
    }
    if (k != k_in) std::cout << "k = " << k_in << " has squarefree part " << k << "; E_k is isomorphic to E_" << k << "\n";
    std::cout << "k = " << k << "  family " << rep.family << "  search height " << height << "\n"
              << "Selmer phi  " << rep.selmer_phi.str() << "\n"
              << "Selmer psi  " << rep.selmer_psi.str() << "\n"
              << "W(phi) found  " << rep.w_phi_found.str() << "\n"
              << "W(psi) found  " << rep.w_psi_found.str() << "\n";
    if (cls) {
        std::cout << "criteria (" << to_string(cls->family) << ", p = " << cls->p << ", l = " << cls->l << ")\n";
        if (cls->profile) std::cout << "  profile  " << profile_columns(*cls->profile) << "\n";
        std::cout << "  Sha[phi] contains  " << cls->sha_phi.str() << "\n"
                  << "  Sha[psi] contains  " << cls->sha_psi.str() << "\n"
                  << "  rank bound  " << cls->rank_bound << "\n";
        for (const auto& c : cls->conditions) std::cout << "  " << c.name << ": " << (c.holds ? "yes" : "no") << "\n";
    } else {
        std::cout << "criteria  not applicable\n";
    }
    std::cout << "rank  " << rep.rank_lower << " <= r <= " << rep.rank_upper << "\n";
    if (rep.sha2_dim) std::cout << "dim Sha[2]  " << *rep.sha2_dim << "\n";
    if (rep.noncongruent)
        std::cout << (*rep.noncongruent ? "k is not a congruent number\n" : "k is a congruent number\n");
    for (const Witness& w : rep.witnesses)
        std::cout << "  point on " << w.torsor.str() << ": (N, M, e) = (" << w.point.N << ", " << w.point.M << ", "
                  << w.point.e << ")\n";
    return 0;
}

int cmd_profile(u64 p, u64 l) {
    if (p == l || !is_prime(p) || !is_prime(l) || p % 8 != 1 || l % 8 != 1 ||
        jacobi(static_cast<i64>(p), static_cast<i64>(l)).is_minus())
        throw UsageError("--p and --l must be distinct primes = 1 mod 8 with (p/l) = +1");
    const ResidueProfile r = residue_profile(p, l);
    if (g_json) {
        print_json({{"p", p}, {"l", l}, {"profile", as_json(r)}});
        return 0;
    }
    std::cout << r.str() << "\n" << profile_columns(r) << "\n";
    return 0;
}

int cmd_table3(bool verify) {
    const auto& table = reference::profile_table();
    json rows = json::array();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& row = table[i];
        std::array<Sign, 5> s;
        for (int j = 0; j < 5; ++j) s[j] = Sign::from_int(row.signs[j]);
        const ResidueProfile prof = ResidueProfile::from_signs(s);
        const SquareClassGroup psi = psi_obstruction(prof, row.p, row.l);
        const PhiObstruction phi = phi_obstruction(prof, row.p, row.l);
        const int rank = 4 - static_cast<int>(psi.dim() + phi.sha_phi.dim());
        bool ok = true;
        if (verify) {
            ok = residue_profile(row.p, row.l) == prof && rank == row.rank;
            mismatches += !ok;
        }
        if (g_json) {
            json r = {{"row", i + 1},          {"profile", as_json(prof)}, {"sha_psi", as_json(psi)},
                      {"sha_phi", as_json(phi.sha_phi)}, {"rank", rank}, {"w_phi", as_json(phi.w_candidates)},
                      {"p", row.p},            {"l", row.l}};
            if (verify) r["verified"] = ok;
            rows.push_back(r);
        } else {
            std::cout << (i + 1 < 10 ? " " : "") << i + 1 << "  " << prof.str() << "  Sha[psi] " << psi.str()
                      << "  Sha[phi] " << phi.sha_phi.str() << "  rk " << rank << "  W(phi) "
                      << phi.w_candidates.str() << "  (" << row.p << ", " << row.l << ")"
                      << (verify ? (ok ? "  ok" : "  MISMATCH") : "") << "\n";
        }
    }
    if (g_json) print_json(rows);
    return mismatches ? 1 : 0;
}

int cmd_survey(FamilySpec spec, const std::string& out_path) {
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SurveyResult result = run_survey(spec);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_ndjson(out, result);
    }
    if (g_json) {
        if (out_path.empty())
            write_ndjson(std::cout, result);
        else
            print_json(as_json(result.summary));
        return 0;
    }
    const SurveySummary& s = result.summary;
    std::cout << spec.str() << "\n"
              << "pairs  " << s.rows << "\n"
              << "rank 0 certified  " << s.rank_zero << " (" << s.rank_zero_fraction << ")\n";
    for (const auto& [rank, n] : s.by_rank_upper) std::cout << "rank bound " << rank << "  " << n << "\n";
    for (const auto& [prof, n] : s.by_profile) std::cout << "profile " << prof << "  " << n << "\n";
    if (!out_path.empty()) std::cout << "rows written to " << out_path << "\n";
    return 0;
}

int cmd_verify() {
    const VerificationReport rep = verify_paper();
    if (g_json) {
        print_json(as_json(rep));
    } else {
        for (const Check& c : rep.checks) {
            std::cout << (c.passed ? "ok    " : "FAIL  ") << c.name;
            if (!c.passed) std::cout << "  expected " << c.expected << ", computed " << c.computed;
            std::cout << "\n";
        }
        std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_selmer(u64 k) {
    if (k == 0) throw UsageError("--k must be positive");
    const CurvePair curve = CurvePair::make(k);
    json out = {{"k", k}};
    for (Isogeny iso : {Isogeny::phi, Isogeny::psi}) {
        json torsors = json::array();
        for (const Torsor& t : enumerate_torsors(curve, iso)) {
            const bool ok = locally_solvable(t);
            if (g_json)
                torsors.push_back({{"b1", t.b1}, {"b2", t.b2}, {"locally_solvable", ok}});
            else
                std::cout << to_string(iso) << "  " << t.str() << "  " << (ok ? "locally solvable" : "not solvable")
                          << "\n";
        }
        const SquareClassGroup s = selmer_group(curve, iso);
        if (g_json) {
            out[to_string(iso)] = {{"selmer", as_json(s)}, {"torsors", torsors}};
        } else {
            std::cout << "Selmer " << to_string(iso) << "  " << s.str() << "\n";
        }
    }
    if (g_json) print_json(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-isogeny descent for y^2 = x(x^2 - k^2)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "structured output");

    u64 k = 0, height = 1000, p = 0, l = 0;
    auto* classify_cmd = app.add_subcommand("classify", "descent, criteria and rank bounds for E_k");
    classify_cmd->add_option("--k", k, "the integer k")->required();
    classify_cmd->add_option("--height", height, "point search height")->capture_default_str();

    auto* profile_cmd = app.add_subcommand("profile", "residue symbol profile of a pair p, l = 1 mod 8");
    profile_cmd->add_option("--p", p)->required();
    profile_cmd->add_option("--l", l)->required();

    bool verify = false;
    auto* table_cmd = app.add_subcommand("table3", "rebuild the 32-row profile table");
    table_cmd->add_flag("--verify", verify, "compare against the reference rows");

    FamilySpec spec;
    int legendre = 0;
    std::string out_path;
    auto* survey_cmd = app.add_subcommand("survey", "classify a family of prime pairs");
    survey_cmd->add_option("--p-res", spec.p_res, "p mod 8")->capture_default_str();
    survey_cmd->add_option("--l-res", spec.l_res, "l mod 8")->capture_default_str();
    survey_cmd->add_option("--legendre", legendre, "required (p/l), +1 or -1")->check(CLI::IsMember({-1, 1}));
    survey_cmd->add_flag("--two-p", spec.two_p, "the family k = 2p, p = 1 mod 8");
    survey_cmd->add_option("--bound", spec.bound, "primes below bound")->capture_default_str();
    survey_cmd->add_option("--witness-height", spec.witness_height, "run a point search per row")
        ->capture_default_str();
    survey_cmd->add_option("--out", out_path, "newline-delimited JSON output file");

    auto* verify_cmd = app.add_subcommand("verify-paper", "regression over the reference tables");

    auto* selmer_cmd = app.add_subcommand("selmer", "torsors and Selmer groups of E_k");
    selmer_cmd->add_option("--k", k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) return cmd_classify(k, height);
        if (*profile_cmd) return cmd_profile(p, l);
        if (*table_cmd) return cmd_table3(verify);
        if (*survey_cmd) {
            if (legendre != 0) spec.legendre = legendre;
            return cmd_survey(spec, out_path);
        }
        if (*verify_cmd) return cmd_verify();
        if (*selmer_cmd) return cmd_selmer(k);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
