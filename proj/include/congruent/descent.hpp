#pragma once

#include <optional>
#include <string>
#include <vector>

#include "congruent/int_arith.hpp"
#include "congruent/square_classes.hpp"

namespace congruent {

enum class Isogeny { phi, psi };

std::string to_string(Isogeny iso);

/// E_k : y^2 = x(x^2 - k^2) and its 2-isogenous partner
/// Ehat_k : y^2 = x(x^2 + 4k^2) for odd k, x(x^2 + k^2/4) for even k.
struct CurvePair {
    u64 k;
    FactoredInteger factorization;
    /// (a2, a4) of y^2 = x^3 + a2 x^2 + a4 x.
    std::pair<i64, i64> e_coeffs;
    std::pair<i64, i64> ehat_coeffs;

    /// Throws std::invalid_argument unless k >= 1 is squarefree.
    static CurvePair make(u64 k);

    /// b1 * b2 for torsors of the given isogeny: -k^2 (psi), 4k^2 or k^2/4 (phi).
    i64 torsor_constant(Isogeny iso) const;
};

/// N^2 = b1 M^4 + b2 e^4.
struct Torsor {
    Isogeny isogeny;
    i64 b1;
    i64 b2;

    static Torsor make(const CurvePair& curve, Isogeny iso, i64 b1);
    std::string str() const;
};

struct TorsorPoint {
    i64 N;
    i64 M;
    i64 e;
    friend bool operator==(const TorsorPoint&, const TorsorPoint&) = default;
};

/// Exact check of N^2 = b1 M^4 + b2 e^4 (128-bit arithmetic).
bool on_torsor(const Torsor& t, const TorsorPoint& pt);

/// One torsor per candidate class b1: both signs for psi, positive b1 for
/// phi, b1 ranging over squarefree divisors of the torsor constant.
std::vector<Torsor> enumerate_torsors(const CurvePair& curve, Isogeny iso);

/// True iff the torsor has a nontrivial point over R and over Q_q for every
/// prime q | 2 b1 b2.
bool locally_solvable(const Torsor& t);
/// The q-adic part of the above, for one prime q.
bool locally_solvable_at(const Torsor& t, u64 q);

/// The locally solvable classes; throws NotAGroup if they are not closed.
SquareClassGroup selmer_group(const CurvePair& curve, Isogeny iso);

/// Smallest primitive point with max(M, e) <= height, ordered by
/// (max(M, e), M, e) over M, e >= 0. OpenMP-parallel over height shells.
std::optional<TorsorPoint> search_points(const Torsor& t, u64 height);
/// Single-threaded reference for search_points; returns the same point.
std::optional<TorsorPoint> search_points_serial(const Torsor& t, u64 height);

struct Witness {
    Torsor torsor;
    TorsorPoint point;
};

struct DescentReport {
    u64 k = 0;
    SquareClassGroup selmer_phi, selmer_psi;
    SquareClassGroup w_phi_found, w_psi_found;
    std::vector<Witness> witnesses;
    SquareClassGroup sha_phi_lb, sha_psi_lb;
    /// Family recognised by the criteria, or "none".
    std::string family = "none";
    int rank_lower = 0;
    int rank_upper = 0;
    std::optional<int> sha2_dim;
    std::optional<bool> noncongruent;
};

/// rank_lower = max(0, dim W_phi + dim W_psi - 2) and
/// rank_upper = dim S_phi + dim S_psi - 2 - dim Sha_phi - dim Sha_psi.
void finalize_ranks(DescentReport& r);

/// Selmer groups, criteria-certified Sha classes for recognised families,
/// and a bounded search for points on the remaining classes.
DescentReport descend(u64 k, u64 height = 1000);

}  // namespace congruent
