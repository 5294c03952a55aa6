#include "congruent/class_field.hpp"

#include <numeric>
#include <algorithm>
#include <cstdlib>
#include <set>

namespace congruent {

// --- continued fractions ---------------------------------------------------------

namespace {

// Partial quotients and convergents of sqrt D over `periods` full periods.
struct Convergents {
    std::vector<mpz_class> p, q;
    std::size_t period = 0;
};

Convergents sqrt_convergents(u64 D, unsigned periods) {
    const u64 a0 = isqrt(D);
    if (a0 * a0 == D) throw std::invalid_argument("sqrt_convergents: D is a square");
    Convergents out;
    mpz_class m = 0, d = 1, a = static_cast<unsigned long>(a0);
    mpz_class p_prev = 1, p = a, q_prev = 0, q = 1;
    out.p.push_back(p);
    out.q.push_back(q);
    std::size_t completed = 0;
    for (std::size_t step = 1;; ++step) {
        m = d * a - m;
        d = (mpz_class(static_cast<unsigned long>(D)) - m * m) / d;
        a = (mpz_class(static_cast<unsigned long>(a0)) + m) / d;
        if (d == 1) {
            if (out.period == 0) out.period = step;
            if (++completed == periods) break;
        }
        mpz_class p_next = a * p + p_prev, q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        out.p.push_back(p);
        out.q.push_back(q);
    }
    return out;
}

}  // namespace

Unit fundamental_unit(u64 D) {
    if (D < 2) throw std::invalid_argument("fundamental_unit: D must be >= 2");
    const Convergents cf = sqrt_convergents(D, 1);
    const mpz_class& u = cf.p[cf.period - 1];
    const mpz_class& v = cf.q[cf.period - 1];
    return {u, v, cf.period % 2 ? -1 : 1};
}

std::optional<std::pair<mpz_class, mpz_class>> pell_solvable(u64 D, i64 c, u64 y_budget) {
    if (c == 0) throw std::invalid_argument("pell_solvable: c must be nonzero");
    const u64 ac = static_cast<u64>(c < 0 ? -c : c);
    if (c > 0) {
        const u64 r = isqrt(ac);
        if (r * r == ac) return std::make_pair(mpz_class(static_cast<unsigned long>(r)), mpz_class(0));
    }
    const mpz_class Dz = static_cast<unsigned long>(D);
    if (static_cast<u128>(ac) * ac < D) {
        const Convergents cf = sqrt_convergents(D, 2);
        std::optional<std::pair<mpz_class, mpz_class>> best;
        for (u64 g = 1; g * g <= ac; ++g) {
            if (ac % (g * g)) continue;
            const mpz_class target = static_cast<long>(c / static_cast<i64>(g * g));
            for (std::size_t k = 0; k < cf.p.size(); ++k) {
                if (cf.p[k] * cf.p[k] - Dz * cf.q[k] * cf.q[k] != target) continue;
                mpz_class y = cf.q[k] * static_cast<unsigned long>(g);
                if (!best || y < best->second) best = std::make_pair(cf.p[k] * static_cast<unsigned long>(g), y);
                break;
            }
        }
        return best;
    }
    for (u64 y = 1; y <= y_budget; ++y) {
        const mpz_class x2 = Dz * static_cast<unsigned long>(y) * static_cast<unsigned long>(y) + static_cast<long>(c);
        if (x2 < 0) continue;
        if (mpz_perfect_square_p(x2.get_mpz_t())) return std::make_pair(mpz_class(sqrt(x2)), mpz_class(static_cast<unsigned long>(y)));
    }
    throw BudgetExceeded("pell_solvable: no solution of x^2 - " + std::to_string(D) + " y^2 = " + std::to_string(c) +
                         " with y <= " + std::to_string(y_budget));
}

// --- forms -----------------------------------------------------------------------

std::string QuadForm::str() const {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

namespace {

i64 floor_sqrt_disc(i64 disc) { return static_cast<i64>(isqrt(static_cast<u64>(disc))); }

i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_reduced(const QuadForm& f) {
    const i64 s = floor_sqrt_disc(f.discriminant());
    const i64 twice_a = 2 * std::llabs(f.a);
    return f.b > 0 && f.b <= s && twice_a >= s - f.b + 1 && twice_a <= s + f.b;
}

QuadForm rho(const QuadForm& f) {
    const i64 disc = f.discriminant();
    const i64 s = floor_sqrt_disc(disc);
    const i64 ac = std::llabs(f.c);
    if (ac == 0) throw std::invalid_argument("rho: degenerate form " + f.str());
    // r = -b mod 2c, in (-|c|, |c|] when |c| > sqrt(D), else in (sqrt(D) - 2|c|, sqrt(D)).
    const i64 lo = ac > s ? -ac + 1 : s - 2 * ac + 1;
    const i64 r = lo + floor_mod(-f.b - lo, 2 * ac);
    return {f.c, r, (r * r - disc) / (4 * f.c)};
}

QuadForm reduce(QuadForm f) {
    for (int guard = 0; !is_reduced(f); ++guard) {
        if (guard > 100000) throw std::logic_error("reduce: no reduced form reached from " + f.str());
        f = rho(f);
    }
    return f;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const i64 disc = f.discriminant();
    if (g.discriminant() != disc) throw std::invalid_argument("compose: discriminants differ");
    const i64 beta = (f.b + g.b) / 2;
    const Bezout e1 = ext_gcd(f.a, g.a);
    const Bezout e2 = ext_gcd(e1.g, beta);
    const i128 d = e2.g, u = static_cast<i128>(e2.x) * e1.x, v = static_cast<i128>(e2.x) * e1.y, w = e2.y;
    const i128 a3 = static_cast<i128>(f.a) * g.a / (d * d);
    const i128 num = u * f.a * g.b + v * g.a * f.b + w * ((static_cast<i128>(f.b) * g.b + disc) / 2);
    if (num % d != 0) throw std::logic_error("compose: non-integral middle coefficient");
    const i128 m = 2 * (a3 < 0 ? -a3 : a3);
    i128 b3 = (num / d) % m;
    if (b3 < 0) b3 += m;
    const i128 c_num = b3 * b3 - disc;
    if (c_num % (4 * a3) != 0) throw std::logic_error("compose: b^2 - D not divisible by 4a");
    return {static_cast<i64>(a3), static_cast<i64>(b3), static_cast<i64>(c_num / (4 * a3))};
}

FormClassGroup::FormClassGroup(i64 discriminant, i64 max_discriminant) : disc_(discriminant) {
    if (discriminant <= 0 || (discriminant % 4 != 0 && discriminant % 4 != 1))
        throw std::invalid_argument("FormClassGroup: bad discriminant " + std::to_string(discriminant));
    const i64 s = floor_sqrt_disc(discriminant);
    if (s * s == discriminant) throw std::invalid_argument("FormClassGroup: square discriminant");
    if (discriminant > max_discriminant)
        throw BudgetExceeded("FormClassGroup: discriminant " + std::to_string(discriminant) + " above budget");

    std::set<QuadForm> reduced;
    for (i64 b = 1; b <= s; ++b) {
        if ((b - discriminant) % 2 != 0) continue;
        const i64 num = b * b - discriminant;
        for (i64 A = std::max<i64>(1, (s - b + 2) / 2); 2 * A <= s + b; ++A) {
            if (num % (4 * A) != 0) continue;
            for (i64 a : {A, -A}) {
                QuadForm f{a, b, num / (4 * a)};
                if (std::gcd(std::gcd(std::llabs(f.a), f.b), std::llabs(f.c)) != 1 || !is_reduced(f)) continue;
                reduced.insert(f);
            }
        }
    }
    std::set<QuadForm> seen;
    for (const QuadForm& start : reduced) {
        if (seen.count(start)) continue;
        std::vector<QuadForm> cyc;
        QuadForm f = start;
        do {
            cyc.push_back(f);
            seen.insert(f);
            f = rho(f);
        } while (f != start);
        auto pos = std::find_if(cyc.begin(), cyc.end(), [](const QuadForm& x) { return x.a > 0; });
        std::rotate(cyc.begin(), pos, cyc.end());
        for (const QuadForm& x : cyc) index_[x] = cycles_.size();
        cycles_.push_back(std::move(cyc));
    }
    const i64 b0 = discriminant % 2;
    identity_ = class_of({1, b0, (b0 * b0 - discriminant) / 4});
}

std::size_t FormClassGroup::class_of(const QuadForm& f) const {
    if (f.discriminant() != disc_) throw std::invalid_argument("class_of: wrong discriminant for " + f.str());
    auto it = index_.find(reduce(f));
    if (it == index_.end()) throw std::logic_error("class_of: reduced form not enumerated: " + f.str());
    return it->second;
}

std::size_t FormClassGroup::multiply(std::size_t x, std::size_t y) const {
    return class_of(compose(representative(x), representative(y)));
}

std::size_t FormClassGroup::inverse(std::size_t x) const {
    const QuadForm& f = representative(x);
    return class_of({f.a, -f.b, f.c});
}

std::size_t FormClassGroup::power(std::size_t x, u64 n) const {
    std::size_t result = identity_, base = x;
    while (n) {
        if (n & 1) result = multiply(result, base);
        base = multiply(base, base);
        n >>= 1;
    }
    return result;
}

std::size_t FormClassGroup::element_order(std::size_t x) const {
    std::size_t n = 1;
    for (std::size_t y = x; y != identity_; y = multiply(y, x)) ++n;
    return n;
}

std::vector<u64> FormClassGroup::invariant_factors() const {
    const u64 h = order();
    if (h == 1) return {1};
    // For each prime q | h: number of cyclic q-factors of order >= q^j is
    // log_q of #{x : x^(q^j) = 1} / #{x : x^(q^(j-1)) = 1}.
    std::vector<std::vector<u64>> per_prime;  // descending prime powers
    for (const auto& pp : factor(h).factors) {
        const u64 q = pp.prime;
        std::vector<unsigned> at_least;
        u64 prev = 1, qj = 1;
        for (unsigned j = 1; j <= pp.exponent; ++j) {
            qj *= q;
            u64 count = 0;
            for (std::size_t x = 0; x < h; ++x)
                if (power(x, qj) == identity_) ++count;
            unsigned r = 0;
            for (u64 ratio = count / prev; ratio > 1; ratio /= q) ++r;
            at_least.push_back(r);
            prev = count;
        }
        std::vector<u64> powers;
        for (unsigned j = 1; j <= pp.exponent; ++j) {
            const unsigned exact = at_least[j - 1] - (j < pp.exponent ? at_least[j] : 0);
            u64 value = 1;
            for (unsigned t = 0; t < j; ++t) value *= q;
            for (unsigned t = 0; t < exact; ++t) powers.push_back(value);
        }
        std::sort(powers.rbegin(), powers.rend());
        per_prime.push_back(powers);
    }
    std::size_t n = 0;
    for (const auto& v : per_prime) n = std::max(n, v.size());
    std::vector<u64> out(n, 1);
    for (const auto& v : per_prime)
        for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
}

bool FormClassGroup::two_sylow_cyclic() const {
    std::size_t involutions = 0;
    for (std::size_t x = 0; x < order(); ++x)
        if (multiply(x, x) == identity_) ++involutions;
    return involutions <= 2;
}

bool FormClassGroup::is_power(std::size_t x, u64 n) const {
    for (std::size_t g = 0; g < order(); ++g)
        if (power(g, n) == x) return true;
    return false;
}

i64 represented_coprime_value(const QuadForm& f, i64 m) {
    i64 best = 0;
    for (i64 x = -30; x <= 30; ++x)
        for (i64 y = 0; y <= 30; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const i64 v = f.evaluate(x, y);
            if (v <= 0 || v % 2 == 0 || std::gcd(v, m) != 1) continue;
            if (best == 0 || v < best) best = v;
        }
    if (best == 0) throw NoRepresentation("represented_coprime_value: nothing found for " + f.str());
    return best;
}

// --- Q(sqrt 2l) --------------------------------------------------------------------

QuadFieldData quad_field_data(u64 l) {
    if (!is_prime(l) || l % 4 != 1) throw BadResidueClass("quad_field_data: need a prime l = 1 mod 4");
    QuadFieldData d{};
    d.l = l;
    d.D = 2 * l;
    d.discriminant = static_cast<i64>(8 * l);
    d.eps = fundamental_unit(d.D);
    d.norm_eps = d.eps.norm;
    const FormClassGroup group(d.discriminant);
    d.h_plus = group.order();
    d.h = d.norm_eps == -1 ? d.h_plus : d.h_plus / 2;
    d.two_strict_principal = pell_solvable(d.D, 2).has_value();
    return d;
}

bool ScholzPrediction::matches(const QuadFieldData& d) const {
    if (norm_eps && *norm_eps != d.norm_eps) return false;
    if (h_mod4 && d.h % 4 != *h_mod4) return false;
    if (h_plus_mod4 && d.h_plus % 4 != *h_plus_mod4) return false;
    if (h_plus_mod8 && d.h_plus % 8 != *h_plus_mod8) return false;
    if (divisible_case && (d.h % 4 != 0 || d.h_plus % 8 != 0)) return false;
    return true;
}

ScholzPrediction scholz_case(u64 l) {
    if (!is_prime(l) || l % 4 != 1) throw BadResidueClass("scholz_case: need a prime l = 1 mod 4");
    ScholzPrediction s{};
    if (l % 8 == 5) {
        s.case_number = 0;
        s.norm_eps = -1;
        s.h_mod4 = 2;
        s.h_plus_mod4 = 2;
        return s;
    }
    const auto [two_l, l_two] = half_symbols(l);
    if (two_l != l_two) {
        s.case_number = 1;
        s.norm_eps = 1;
        s.h_mod4 = 2;
        s.h_plus_mod8 = 4;
    } else if (two_l.is_minus()) {
        s.case_number = 2;
        s.norm_eps = -1;
        s.h_mod4 = 0;
        s.h_plus_mod8 = 4;
    } else {
        s.case_number = 3;
        s.divisible_case = true;
    }
    return s;
}

bool strict_two_principal(u64 l) {
    if (!is_prime(l) || l % 8 != 1) throw PreconditionUnmet("strict_two_principal: need a prime l = 1 mod 8");
    if (octic_minus4(l).is_plus()) throw PreconditionUnmet("strict_two_principal: (-4/l)_8 = +1");
    return pell_solvable(2 * l, 2).has_value();
}

bool fourth_power_class_test(u64 p, u64 l) {
    if (p == l || !is_prime(p) || !is_prime(l) || p % 8 != 1 || l % 8 != 1)
        throw PreconditionUnmet("fourth_power_class_test: need distinct primes p = l = 1 mod 8");
    if (jacobi(static_cast<i64>(p), static_cast<i64>(l)).is_minus())
        throw PreconditionUnmet("fourth_power_class_test: (p/l) = -1");
    const i64 two_l = static_cast<i64>(2 * l), ps = static_cast<i64>(p);
    if (jacobi(two_l, ps).is_minus()) throw NoRepresentation("fourth_power_class_test: p is inert in Q(sqrt 2l)");
    const i64 b = static_cast<i64>(sqrt_mod(two_l, p));
    const QuadForm f{ps, 2 * b, (b * b - two_l) / ps};
    const FormClassGroup group(static_cast<i64>(8 * l), std::max<i64>(80000, static_cast<i64>(8 * l)));
    return group.is_power(group.class_of(f), 4);
}

}  // namespace congruent
