#include <algorithm>
#include <cstdlib>

#include "congruent/descent.hpp"
#include "congruent/sha_criteria.hpp"

namespace congruent {

namespace {

// Could a point on class c coexist with the points already found without
// contradicting the certified Sha classes?
bool admissible(i64 c, const SquareClassGroup& found, const SquareClassGroup& sha) {
    return found.with(c).intersect(sha).size() == 1;
}

void search_side(const CurvePair& curve, Isogeny iso, const SquareClassGroup& selmer, const SquareClassGroup& sha,
                 u64 height, SquareClassGroup& found, std::vector<Witness>& witnesses) {
    std::vector<i64> classes = selmer.elements();
    std::sort(classes.begin(), classes.end(), [](i64 x, i64 y) {
        const i64 ax = std::llabs(x), ay = std::llabs(y);
        return ax != ay ? ax < ay : x > y;
    });
    for (i64 c : classes) {
        if (found.contains(c) || !admissible(c, found, sha)) continue;
        const Torsor t = Torsor::make(curve, iso, c);
        if (auto pt = search_points(t, height)) {
            found = found.with(c);
            witnesses.push_back({t, *pt});
        }
    }
}

}  // namespace

DescentReport descend(u64 k, u64 height) {
    const CurvePair curve = CurvePair::make(k);
    DescentReport r;
    r.k = k;
    r.selmer_phi = selmer_group(curve, Isogeny::phi);
    r.selmer_psi = selmer_group(curve, Isogeny::psi);

    if (auto cls = classify(curve.factorization)) {
        if (cls->selmer_phi != r.selmer_phi || cls->selmer_psi != r.selmer_psi)
            throw std::logic_error("descent for k = " + std::to_string(k) +
                                   ": local Selmer groups disagree with the family's closed forms");
        r.family = to_string(cls->family);
        r.sha_phi_lb = cls->sha_phi;
        r.sha_psi_lb = cls->sha_psi;
    }

    search_side(curve, Isogeny::phi, r.selmer_phi, r.sha_phi_lb, height, r.w_phi_found, r.witnesses);
    search_side(curve, Isogeny::psi, r.selmer_psi, r.sha_psi_lb, height, r.w_psi_found, r.witnesses);
    finalize_ranks(r);
    return r;
}

}  // namespace congruent
