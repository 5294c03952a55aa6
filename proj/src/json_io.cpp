#include "congruent/json_io.hpp"

namespace congruent {

json as_json(const SquareClassGroup& g) { return json(g.generators()); }

json as_json(const ResidueProfile& r) {
    json out = json::array();
    for (Sign s : r.signs()) out.push_back(s.value());
    return out;
}

json as_json(const Witness& w) {
    return {{"isogeny", to_string(w.torsor.isogeny)},
            {"b1", w.torsor.b1},
            {"b2", w.torsor.b2},
            {"N", w.point.N},
            {"M", w.point.M},
            {"e", w.point.e}};
}

namespace {

json witnesses_json(const std::vector<Witness>& ws) {
    json out = json::array();
    for (const Witness& w : ws) out.push_back(as_json(w));
    return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json as_json(const DescentReport& r) {
    return {{"k", r.k},
            {"family", r.family},
            {"selmer_phi", as_json(r.selmer_phi)},
            {"selmer_psi", as_json(r.selmer_psi)},
            {"w_phi_found", as_json(r.w_phi_found)},
            {"w_psi_found", as_json(r.w_psi_found)},
            {"sha_phi_lb", as_json(r.sha_phi_lb)},
            {"sha_psi_lb", as_json(r.sha_psi_lb)},
            {"rank_lower", r.rank_lower},
            {"rank_upper", r.rank_upper},
            {"sha2_dim", optional_json(r.sha2_dim)},
            {"noncongruent", optional_json(r.noncongruent)},
            {"witnesses", witnesses_json(r.witnesses)}};
}

json as_json(const Classification& c) {
    json conditions = json::array();
    for (const auto& nc : c.conditions) conditions.push_back({{"name", nc.name}, {"holds", nc.holds}});
    return {{"family", to_string(c.family)},
            {"p", c.p},
            {"l", c.l},
            {"profile", c.profile ? as_json(*c.profile) : json(nullptr)},
            {"selmer_psi", as_json(c.selmer_psi)},
            {"selmer_phi", as_json(c.selmer_phi)},
            {"sha_psi", as_json(c.sha_psi)},
            {"sha_phi", as_json(c.sha_phi)},
            {"w_phi_candidates", as_json(c.w_phi_candidates)},
            {"rank_bound", c.rank_bound},
            {"sha2_dim", optional_json(c.sha2_dim)},
            {"conditions", conditions}};
}

json as_json(const SurveyRow& row) {
    return {{"k", row.k},
            {"p", row.p},
            {"l", row.l},
            {"family", row.family},
            {"profile", row.profile ? as_json(*row.profile) : json(nullptr)},
            {"rank_lower", row.rank_lower},
            {"rank_upper", row.rank_upper},
            {"sha_phi", as_json(row.sha_phi)},
            {"sha_psi", as_json(row.sha_psi)},
            {"witnesses", witnesses_json(row.witnesses)}};
}

json as_json(const SurveySummary& s) {
    json by_rank = json::object();
    for (const auto& [rank, n] : s.by_rank_upper) by_rank[std::to_string(rank)] = n;
    json by_profile = json::object();
    for (const auto& [profile, n] : s.by_profile) by_profile[profile] = n;
    return {{"summary", true},
            {"rows", s.rows},
            {"rank_zero", s.rank_zero},
            {"rank_zero_fraction", s.rank_zero_fraction},
            {"by_rank_upper", by_rank},
            {"by_profile", by_profile}};
}

json as_json(const VerificationReport& r) {
    json checks = json::array();
    for (const Check& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}});
    return {{"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}};
}

}  // namespace congruent
