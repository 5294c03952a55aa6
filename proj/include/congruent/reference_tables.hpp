#pragma once

// Published reference values for the k = pl families: the 32-row table of
// residue profiles with their Sha bounds and smallest examples, the table of
// residue symbols for small k, and the list of [Lambda/Pi] values.

#include <array>
#include <string_view>
#include <vector>

#include "congruent/int_arith.hpp"

namespace congruent::reference {

/// Class names as written in the tables: "1", "2", "p", "2p", "l", "2l", "pl", "2pl".
i64 class_value(std::string_view name, u64 p, u64 l);

struct ProfileRow {
    std::array<int, 5> signs;  // [Pi/Lambda], (l/p)_4, (p/l)_4, (-4/p)_8, (-4/l)_8
    std::string_view sha_psi;  // "1" or "p"
    std::vector<std::string_view> sha_phi;
    int rank;                  // an upper bound; 4 means "<= 4"
    std::vector<std::string_view> w_phi;
    u64 p, l;
};

/// The 32 rows in table order.
const std::vector<ProfileRow>& profile_table();

/// Row whose listed example is not the smallest pair with its profile, and
/// the pair that actually comes first.
constexpr std::size_t kExceptionRow = 12;
constexpr std::pair<u64, u64> kExceptionSmallest{41, 1321};

struct SymbolRow {
    u64 k, p, l;
    std::array<int, 5> signs;  // (l/p)_4, (p/l)_4, (-4/p)_8, (-4/l)_8, [Pi/Lambda]
};

const std::vector<SymbolRow>& symbol_table();

struct LambdaPiValue {
    u64 k, p, l;
    int value;
};

const std::vector<LambdaPiValue>& lambda_pi_list();

/// One (p, l) per row of the Selmer table for p = l mod 8, chosen by Jacobi
/// screening as the smallest admissible pair.
struct SelmerRow {
    int residue;
    int legendre;  // 0 when the row does not depend on (p/l)
    u64 p, l;
    std::vector<i64> psi_gens;
    std::vector<i64> phi_gens;
};

const std::vector<SelmerRow>& selmer_table();

}  // namespace congruent::reference
