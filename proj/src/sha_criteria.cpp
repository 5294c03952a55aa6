#include "congruent/sha_criteria.hpp"

#include <numeric>
#include <algorithm>

#include "congruent/quad_rings.hpp"

namespace congruent {

namespace {

void require_one_mod_8_pair(u64 p, u64 l, const char* what) {
    if (p == l || p % 8 != 1 || l % 8 != 1 || !is_prime(p) || !is_prime(l))
        throw FamilyMismatch(std::string(what) + ": need distinct primes p = l = 1 mod 8");
}

i64 as_signed(u64 v) { return static_cast<i64>(v); }

}  // namespace

// --- residue profiles ----------------------------------------------------------

std::vector<ResidueProfile> ResidueProfile::all() {
    std::vector<ResidueProfile> out;
    for (int mask = 0; mask < 32; ++mask) {
        std::array<Sign, 5> s;
        for (int i = 0; i < 5; ++i) s[i] = (mask >> (4 - i)) & 1 ? Sign::minus() : Sign::plus();
        out.push_back(from_signs(s));
    }
    return out;
}

std::string ResidueProfile::str() const {
    std::string out;
    for (Sign s : signs()) {
        if (!out.empty()) out += ' ';
        out += s.is_plus() ? '+' : '-';
    }
    return out;
}

ResidueProfile residue_profile(u64 p, u64 l) {
    if (p == l || p % 8 != 1 || l % 8 != 1 || !is_prime(p) || !is_prime(l))
        throw UndefinedSymbol("residue_profile: need distinct primes p = l = 1 mod 8");
    if (jacobi(as_signed(p), as_signed(l)).is_minus()) throw UndefinedSymbol("residue_profile: (p/l) = -1");
    return {symbol_capital(p, l, RingTag::sqrt2), quartic_symbol(as_signed(l), p), quartic_symbol(as_signed(p), l),
            octic_minus4(p), octic_minus4(l)};
}

// --- Table 1 -------------------------------------------------------------------

std::vector<CaseLabel> CaseLabel::all() {
    std::vector<CaseLabel> out;
    for (int t : {1, 2})
        for (char lc : {'A', 'B'})
            for (char pc : {'a', 'b'}) out.push_back({t, lc, pc});
    return out;
}

std::string CaseLabel::str() const { return std::to_string(two_case) + l_case + p_case; }

bool table1_case_conditions(const CaseLabel& c, const ResidueProfile& r) {
    const Sign one = Sign::plus();
    const Sign S = r.pi_lambda, A = r.l_p_4, B = r.p_l_4, P = r.m4_p_8, L = r.m4_l_8;
    const std::string id = c.str();
    if (id == "1Aa") return S == one && A == one && P == one;
    if (id == "1Ab") return S == one && B == one && A * P == one;
    if (id == "1Ba") return S == P * L && A == one && B * P == one;
    if (id == "1Bb") return S == L && B == one && P == one;
    if (id == "2Aa") return S == P && A == one && L == one;
    if (id == "2Ab") return S == one && A == one && B * L == one;
    if (id == "2Ba") return S == P * L && B == one && A * L == one;
    if (id == "2Bb") return S == one && B == one && L == one;
    throw std::invalid_argument("table1_case_conditions: bad case " + id);
}

SquareClassGroup psi_obstruction(const ResidueProfile& profile, u64 p, u64 l) {
    (void)l;
    for (const CaseLabel& c : CaseLabel::all())
        if (table1_case_conditions(c, profile)) return {};
    return SquareClassGroup::generated_by({as_signed(p)});
}

// --- Table 2 -------------------------------------------------------------------

std::vector<PhiClass> all_phi_classes() {
    return {PhiClass::two, PhiClass::p, PhiClass::two_p, PhiClass::l, PhiClass::two_l, PhiClass::pl, PhiClass::two_pl};
}

i64 phi_class_value(PhiClass c, u64 p, u64 l) {
    const i64 ps = as_signed(p), ls = as_signed(l);
    switch (c) {
        case PhiClass::two: return 2;
        case PhiClass::p: return ps;
        case PhiClass::two_p: return 2 * ps;
        case PhiClass::l: return ls;
        case PhiClass::two_l: return 2 * ls;
        case PhiClass::pl: return ps * ls;
        case PhiClass::two_pl: return 2 * ps * ls;
    }
    return 1;
}

bool table2_conditions(PhiClass b1, const ResidueProfile& r) {
    const Sign one = Sign::plus();
    const Sign S = r.pi_lambda, A = r.l_p_4, B = r.p_l_4, P = r.m4_p_8, L = r.m4_l_8;
    switch (b1) {
        case PhiClass::two: return P == one && L == one && S == one;
        case PhiClass::p: return B == one && A == one && P == one;
        case PhiClass::two_p: return A * B == L && P == one && S == A;
        case PhiClass::l: return B == one && A == one && L == one;
        case PhiClass::two_l: return A * B == P && L == one && S == B;
        case PhiClass::pl: return A == B && P == one && L == one;
        case PhiClass::two_pl: return A * B == P && P == L && S == one;
    }
    return false;
}

PhiObstruction phi_obstruction(const ResidueProfile& profile, u64 p, u64 l) {
    std::vector<i64> passing{1};
    for (PhiClass c : all_phi_classes())
        if (table2_conditions(c, profile)) passing.push_back(phi_class_value(c, p, l));
    PhiObstruction out;
    try {
        out.w_candidates = SquareClassGroup::from_elements(passing);
    } catch (const NotAGroup&) {
        throw InconsistentCriteria("phi_obstruction: classes passing Table 2 do not form a group for profile " +
                                   profile.str());
    }
    const auto whole = SquareClassGroup::generated_by({2, as_signed(p), as_signed(l)});
    out.sha_phi = SquareClassGroup::complement(out.w_candidates, whole);
    return out;
}

// --- Prop 15 -------------------------------------------------------------------

std::vector<NamedCondition> prop15_conditions(const FactoredInteger& k, u64 A) {
    const std::vector<u64> primes = k.primes();
    if (!k.squarefree() || k.sign.is_minus()) throw FamilyMismatch("prop15_conditions: k must be positive squarefree");
    for (u64 q : primes)
        if (q % 8 != 1) throw FamilyMismatch("prop15_conditions: prime " + std::to_string(q) + " is not 1 mod 8");
    for (u64 q : primes)
        for (u64 r : primes)
            if (q != r && jacobi(as_signed(q), as_signed(r)).is_minus())
                throw FamilyMismatch("prop15_conditions: primes of k are not mutually quadratic residues");
    const u64 kv = static_cast<u64>(k.value());
    if (A == 0 || kv % A != 0) throw FamilyMismatch("prop15_conditions: A does not divide k");
    const u64 B = kv / A;

    std::vector<u64> a_primes, b_primes;
    for (u64 q : primes) (A % q == 0 ? a_primes : b_primes).push_back(q);

    QuadInt alpha(RingTag::gaussian, 1, 0);
    std::vector<QuadInt> alpha_factors;
    for (u64 q : a_primes) {
        alpha_factors.push_back(primary_prime(q, RingTag::gaussian));
        alpha = alpha * alpha_factors.back();
    }

    std::vector<NamedCondition> out;
    Sign octic_A = Sign::plus();
    for (u64 q : a_primes) octic_A = octic_A * octic_minus4(q);
    out.push_back({"(1) (-4/A)_8 = +1", octic_A.is_plus()});

    bool c2 = true;
    for (u64 q : b_primes) {
        const QuadInt pi = primary_prime(q, RingTag::gaussian);
        c2 = c2 && ring_symbol(alpha, pi).is_plus() && ring_symbol(alpha, pi.conjugate()).is_plus();
    }
    out.push_back({"(2) [alpha/pi] = +1 for all pi | B", c2});

    bool c3 = true;
    for (u64 q : a_primes) {
        Sign b_q = Sign::plus();
        for (u64 r : b_primes) b_q = b_q * quartic_symbol(as_signed(r), q);
        c3 = c3 && octic_minus4(q) == b_q;
    }
    out.push_back({"(3) (-4/p)_8 = (B/p)_4 for all p | A", c3});

    bool c4 = true;
    for (std::size_t i = 0; i < alpha_factors.size(); ++i) {
        QuadInt rest(RingTag::gaussian, 1, 0);
        for (std::size_t j = 0; j < alpha_factors.size(); ++j)
            if (j != i) rest = rest * alpha_factors[j];
        c4 = c4 && ring_symbol(rest, alpha_factors[i]).is_plus();
    }
    out.push_back({"(4) [alpha*/pi] = +1 for all pi | alpha", c4});
    (void)B;
    return out;
}

// --- classifications -------------------------------------------------------------

std::string to_string(Family f) {
    switch (f) {
        case Family::pl_11_plus: return "pl_11_plus";
        case Family::pl_11_minus: return "pl_11_minus";
        case Family::pl_33: return "pl_33";
        case Family::pl_55_plus: return "pl_55_plus";
        case Family::pl_55_minus: return "pl_55_minus";
        case Family::pl_77: return "pl_77";
        case Family::two_p: return "two_p";
    }
    return "?";
}

namespace {

int rank_bound_of(const Classification& c) {
    return static_cast<int>(c.selmer_psi.dim() + c.selmer_phi.dim()) - 2 -
           static_cast<int>(c.sha_psi.dim() + c.sha_phi.dim());
}

void finish(Classification& c) {
    c.rank_bound = rank_bound_of(c);
    if (c.rank_bound == 0) c.sha2_dim = static_cast<int>(c.sha_psi.dim() + c.sha_phi.dim());
}

}  // namespace

Classification classify_table3(u64 p, u64 l) {
    require_one_mod_8_pair(p, l, "classify_table3");
    if (jacobi(as_signed(p), as_signed(l)).is_minus()) throw FamilyMismatch("classify_table3: (p/l) = -1");
    Classification c;
    c.family = Family::pl_11_plus;
    c.p = p;
    c.l = l;
    c.profile = residue_profile(p, l);
    c.selmer_psi = SquareClassGroup::generated_by({-1, as_signed(p), as_signed(l)});
    c.selmer_phi = SquareClassGroup::generated_by({2, as_signed(p), as_signed(l)});
    c.sha_psi = psi_obstruction(*c.profile, p, l);
    auto phi = phi_obstruction(*c.profile, p, l);
    c.sha_phi = phi.sha_phi;
    c.w_phi_candidates = phi.w_candidates;
    finish(c);
    return c;
}

Classification classify_minus(u64 p, u64 l) {
    require_one_mod_8_pair(p, l, "classify_minus");
    if (jacobi(as_signed(p), as_signed(l)).is_plus()) throw FamilyMismatch("classify_minus: (p/l) = +1");
    Classification c;
    c.family = Family::pl_11_minus;
    c.p = p;
    c.l = l;
    const i64 pl = as_signed(p) * as_signed(l);
    c.selmer_psi = SquareClassGroup::generated_by({-1, pl});
    c.selmer_phi = SquareClassGroup::generated_by({2, pl});
    const Sign P = octic_minus4(p), L = octic_minus4(l);
    if ((P * L).is_minus()) {
        c.sha_phi = c.selmer_phi;
    } else {
        c.w_phi_candidates = c.selmer_phi;
        c.conditions = {{"T(2): (-4/p)_8 = (-4/l)_8", P == L},
                        {"T(2pl): (-4/p)_8 = (-4/l)_8", P == L},
                        {"T(pl): (-4/pl)_8 = +1", (P * L).is_plus()}};
    }
    finish(c);
    return c;
}

// [(1+i) pi'/lambda] in Z[i], where pi' is the primary prime above p (among
// pi and its conjugate) with [(1+i) pi'/conj(pi')] = (l/p), and lambda is the
// primary prime above l. The value does not depend on the order of p and l.
Sign lagrange_55_minus_symbol(u64 p, u64 l) {
    if (p == l || p % 8 != 5 || l % 8 != 5 || !is_prime(p) || !is_prime(l))
        throw FamilyMismatch("lagrange_55_minus_symbol: need distinct primes p = l = 5 mod 8");
    const QuadInt one_plus_i(RingTag::gaussian, 1, 1);
    const QuadInt pi = primary_associate(split_prime(p, RingTag::gaussian));
    const Sign target = jacobi(as_signed(l), as_signed(p));
    QuadInt chosen = pi;
    for (const QuadInt& cand : {pi, pi.conjugate()}) {
        if (ring_symbol(one_plus_i * cand, cand.conjugate()) == target) {
            chosen = cand;
            break;
        }
    }
    const QuadInt lambda = primary_associate(split_prime(l, RingTag::gaussian));
    return ring_symbol(one_plus_i * chosen, lambda);
}

// [Lambda/Pi] in Z[sqrt2], ordered so that (p/l) = +1: Lambda has norm -l
// and is = 1 mod 4, Pi is any prime of norm +-p.
Sign lagrange_77_symbol(u64 p, u64 l) {
    if (p == l || p % 8 != 7 || l % 8 != 7 || !is_prime(p) || !is_prime(l))
        throw FamilyMismatch("lagrange_77_symbol: need distinct primes p = l = 7 mod 8");
    if (jacobi(as_signed(p), as_signed(l)).is_minus()) std::swap(p, l);
    QuadInt lambda = split_prime(l, RingTag::sqrt2);
    if (lambda.norm() > 0) lambda = lambda * fundamental_unit_sqrt2();
    lambda = primary_mod4(lambda);
    const QuadInt pi = split_prime(p, RingTag::sqrt2);
    return ring_symbol(lambda, pi);
}

Classification classify_small_residues(u64 p, u64 l) {
    if (p == l || !is_prime(p) || !is_prime(l) || p % 8 != l % 8 || p % 2 == 0 || p % 8 == 1)
        throw FamilyMismatch("classify_small_residues: need distinct primes p = l = 3, 5 or 7 mod 8");
    Classification c;
    c.p = p;
    c.l = l;
    const i64 ps = as_signed(p), ls = as_signed(l), pl = ps * ls;
    switch (p % 8) {
        case 3:
            c.family = Family::pl_33;
            c.selmer_psi = SquareClassGroup::generated_by({-1, pl});
            break;
        case 5:
            c.selmer_psi = SquareClassGroup::generated_by({-1, pl});
            if (jacobi(ps, ls).is_plus()) {
                c.family = Family::pl_55_plus;
                c.selmer_phi = SquareClassGroup::generated_by({ps, ls});
                if (quartic_symbol(ps, l) != quartic_symbol(ls, p)) c.sha_phi = c.selmer_phi;
            } else {
                c.family = Family::pl_55_minus;
                c.selmer_phi = SquareClassGroup::generated_by({2 * ps, 2 * ls});
                if (lagrange_55_minus_symbol(p, l).is_minus()) c.sha_phi = c.selmer_phi;
            }
            break;
        case 7:
            c.family = Family::pl_77;
            c.selmer_psi = SquareClassGroup::generated_by({-1, ps, ls});
            c.selmer_phi = SquareClassGroup::generated_by({2});
            if (lagrange_77_symbol(p, l).is_minus()) {
                c.sha_phi = c.selmer_phi;
                c.sha_psi = SquareClassGroup::generated_by({ps});
            }
            break;
    }
    if (c.sha_phi.size() == 1) c.w_phi_candidates = c.selmer_phi;
    finish(c);
    return c;
}

Classification classify_2p(u64 p) {
    if (p % 8 != 1 || !is_prime(p)) throw FamilyMismatch("classify_2p: need a prime p = 1 mod 8");
    Classification c;
    c.family = Family::two_p;
    c.p = p;
    const i64 ps = as_signed(p);
    c.selmer_psi = SquareClassGroup::generated_by({-1, 2, ps});
    c.selmer_phi = SquareClassGroup::generated_by({ps});
    if (p % 16 == 9) {
        c.sha_psi = SquareClassGroup::generated_by({ps});
        c.sha_phi = SquareClassGroup::generated_by({ps});
    } else {
        c.w_phi_candidates = c.selmer_phi;
    }
    finish(c);
    return c;
}

std::optional<Classification> classify(const FactoredInteger& k) {
    if (!k.squarefree() || k.sign.is_minus()) return std::nullopt;
    const std::vector<u64> primes = k.primes();
    if (primes.size() != 2) return std::nullopt;
    if (primes[0] == 2) {
        if (primes[1] % 8 == 1) return classify_2p(primes[1]);
        return std::nullopt;
    }
    const u64 p = primes[0], l = primes[1];
    if (p % 8 != l % 8) return std::nullopt;
    if (p % 8 == 1) {
        if (jacobi(as_signed(p), as_signed(l)).is_plus()) return classify_table3(p, l);
        return classify_minus(p, l);
    }
    return classify_small_residues(p, l);
}

// --- Prop 11 and Lemmas 12/13 ----------------------------------------------------

namespace {

// (a/n)_4 for n a product of primes = 1 mod 4, multiplicatively in n.
// Empty optional when a symbol factor is undefined.
std::optional<Sign> quartic_composite(i64 a, u64 n) {
    Sign s = Sign::plus();
    if (n == 1) return s;
    for (const auto& pp : factor(n).factors) {
        if (pp.prime % 4 != 1) return std::nullopt;
        if (mod(a, pp.prime) == 0 || jacobi(a, as_signed(pp.prime)).is_minus()) return std::nullopt;
        const Sign q = quartic_symbol(a, pp.prime);
        if (pp.exponent % 2) s = s * q;
    }
    return s;
}

Sign quartic_required(i64 a, u64 n) {
    auto s = quartic_composite(a, n);
    if (!s) throw HypothesisViolated("prop11_check: quartic symbol (" + std::to_string(a) + "/" + std::to_string(n) +
                                     ")_4 undefined");
    return *s;
}

i128 sq(i64 v) { return static_cast<i128>(v) * v; }

}  // namespace

Prop11Result prop11_check(const QuadrupleABCD& q, i64 x, i64 y, i64 v, i64 w) {
    const std::array<u64, 4> abcd = {q.A, q.B, q.C, q.D};
    for (u64 n : abcd) {
        if (n == 0) throw HypothesisViolated("prop11_check: coefficients must be positive");
        if (n > 1)
            for (const auto& pp : factor(n).factors)
                if (pp.prime % 4 != 1) throw HypothesisViolated("prop11_check: coefficient with a prime != 1 mod 4");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::gcd(abcd[i], abcd[j]) != 1) throw HypothesisViolated("prop11_check: coefficients not coprime");
    std::vector<u64> primes;
    for (u64 n : abcd)
        if (n > 1)
            for (u64 pr : factor(n).primes()) primes.push_back(pr);
    for (u64 a : primes)
        for (u64 b : primes)
            if (a != b && jacobi(as_signed(a), as_signed(b)).is_minus())
                throw HypothesisViolated("prop11_check: primes are not quadratic residues of each other");
    const i128 lhs_plus = static_cast<i128>(q.A) * sq(x) + static_cast<i128>(q.B) * sq(y);
    const i128 lhs_minus = static_cast<i128>(q.A) * sq(x) - static_cast<i128>(q.B) * sq(y);
    if (lhs_plus != static_cast<i128>(q.C) * sq(v) || lhs_minus != static_cast<i128>(q.D) * sq(w))
        throw HypothesisViolated("prop11_check: equations do not hold");

    Prop11Result r{};
    const i64 A = as_signed(q.A), B = as_signed(q.B), C = as_signed(q.C), D = as_signed(q.D);
    r.congruence = (C - D) % 8 == 0;
    r.rel4 = (quartic_required(A * B, q.C) * quartic_required(A * D, q.B) * quartic_required(B * D, q.A)).is_plus();
    if (r.congruence) {
        auto two = quartic_composite(2, q.C * q.D);
        if (two) {
            const Sign sign = ((C - D) / 8) % 2 == 0 ? Sign::plus() : Sign::minus();
            const Sign rest =
                quartic_required(B * C, q.D) * quartic_required(B * D, q.C) * quartic_required(C * D, q.A);
            r.rel5 = (sign * *two * rest).is_plus();
        }
    }
    return r;
}

Sign lemma_witness_check(int kind, u64 P, u64 L, i64 x, i64 y, i64 z, i64 w, int eps) {
    if (eps != 1 && eps != -1) throw HypothesisViolated("lemma_witness_check: eps must be +-1");
    if (P == L || P % 8 != 1 || L % 8 != 1 || !is_prime(P) || !is_prime(L) ||
        jacobi(as_signed(P), as_signed(L)).is_minus())
        throw HypothesisViolated("lemma_witness_check: need primes P = L = 1 mod 8 with (P/L) = +1");
    const i128 Pz2 = static_cast<i128>(P) * sq(z), Lw2 = static_cast<i128>(L) * sq(w);
    if (kind == 12) {
        if (sq(x) - 2 * sq(y) != -Pz2 || sq(x) - sq(y) != eps * Lw2)
            throw HypothesisViolated("lemma_witness_check: Lemma 12 equations do not hold");
        return Sign::plus();
    }
    if (kind == 13) {
        if (sq(x) + 2 * eps * sq(y) != Pz2 || sq(x) + eps * sq(y) != Lw2)
            throw HypothesisViolated("lemma_witness_check: Lemma 13 equations do not hold");
        const Sign base = octic_minus4(L);
        if (eps == -1) return base;
        return quartic_symbol(as_signed(P), L) * quartic_symbol(as_signed(L), P) * base;
    }
    throw HypothesisViolated("lemma_witness_check: kind must be 12 or 13");
}

CaseDecomposition decompose_psi_point(u64 p, u64 l, const TorsorPoint& pt) {
    const i64 ps = as_signed(p), ls = as_signed(l);
    const Torsor t{Isogeny::psi, ps, -ps * ls * ls};
    if (!on_torsor(t, pt)) throw HypothesisViolated("decompose_psi_point: not a point on T^(psi)(p)");
    const i64 M = pt.M < 0 ? -pt.M : pt.M, e = pt.e < 0 ? -pt.e : pt.e;
    if (std::gcd(M, e) != 1) throw HypothesisViolated("decompose_psi_point: point is not primitive");

    CaseDecomposition d{};
    d.M = M;
    d.e = e;
    if (e % 2 == 0 && M % 2 == 1) {
        d.label.two_case = 1;
    } else if (M % 2 == 1 && e % 2 == 1) {
        d.label.two_case = 2;
    } else {
        throw HypothesisViolated("decompose_psi_point: parity fits neither case");
    }
    d.label.l_case = M % ls == 0 ? 'B' : 'A';
    d.m = d.label.l_case == 'B' ? M / ls : 0;
    const i128 f1 = d.label.l_case == 'A' ? sq(M) + ls * sq(e) : ls * sq(d.m) + sq(e);
    const i128 f2 = d.label.l_case == 'A' ? sq(M) - ls * sq(e) : ls * sq(d.m) - sq(e);
    d.label.p_case = f1 % ps == 0 ? 'a' : 'b';
    const i128 two = d.label.two_case;
    const i128 pa = d.label.p_case == 'a' ? ps : 1, pb = d.label.p_case == 'b' ? ps : 1;
    auto root_of = [&](i128 num, i128 den) {
        u128 r = 0;
        if (num % den != 0 || !is_square(num / den, &r))
            throw HypothesisViolated("decompose_psi_point: case equations have no integral solution");
        return static_cast<i64>(r);
    };
    d.a = root_of(f1, two * pa);
    d.b = root_of(f2, two * pb);

    const u64 one = 1;
    const i64 m = d.m, a = d.a, b = d.b;
    using L = CaseDecomposition::Lemma;
    const std::string id = d.label.str();
    if (id == "1Aa") {
        d.abcd = {one, l, p, one}, d.x = M, d.y = e, d.v = a, d.w = b;
        d.lemma = L{12, p, l, b, M, a, e, -1};
    } else if (id == "1Ab") {
        d.abcd = {one, l, one, p}, d.x = M, d.y = e, d.v = a, d.w = b;
        d.lemma = L{12, p, l, a, M, b, e, +1};
    } else if (id == "1Ba") {
        d.abcd = {l, one, p, one}, d.x = m, d.y = e, d.v = a, d.w = b;
        d.lemma = L{13, p, l, b, e, a, m, +1};
    } else if (id == "1Bb") {
        d.abcd = {l, one, one, p}, d.x = m, d.y = e, d.v = a, d.w = b;
        d.lemma = L{13, p, l, a, e, b, m, -1};
    } else if (id == "2Aa") {
        d.abcd = {p, one, one, l}, d.x = a, d.y = b, d.v = M, d.w = e;
        d.lemma = L{13, l, p, M, b, e, a, -1};
    } else if (id == "2Ab") {
        d.abcd = {one, p, one, l}, d.x = a, d.y = b, d.v = M, d.w = e;
        d.lemma = L{12, l, p, M, a, e, b, +1};
    } else if (id == "2Ba") {
        d.abcd = {p, one, l, one}, d.x = a, d.y = b, d.v = m, d.w = e;
        d.lemma = L{13, l, p, e, b, m, a, +1};
    } else {
        d.abcd = {one, p, l, one}, d.x = a, d.y = b, d.v = m, d.w = e;
        d.lemma = L{12, l, p, e, a, m, b, -1};
    }
    return d;
}

}  // namespace congruent
