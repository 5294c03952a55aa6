#include "congruent/reference_tables.hpp"

#include <stdexcept>
#include <string>

namespace congruent::reference {

i64 class_value(std::string_view name, u64 p, u64 l) {
    const i64 ps = static_cast<i64>(p), ls = static_cast<i64>(l);
    if (name == "1") return 1;
    if (name == "2") return 2;
    if (name == "p") return ps;
    if (name == "2p") return 2 * ps;
    if (name == "l") return ls;
    if (name == "2l") return 2 * ls;
    if (name == "pl") return ps * ls;
    if (name == "2pl") return 2 * ps * ls;
    throw std::invalid_argument("class_value: unknown class name " + std::string(name));
}

const std::vector<ProfileRow>& profile_table() {
    static const std::vector<ProfileRow> rows = {
        {{+1, +1, +1, +1, +1}, "1", {}, 4, {"2", "p", "l"}, 41, 2273},
        {{+1, +1, +1, +1, -1}, "1", {"2p", "l"}, 2, {"p"}, 41, 769},
        {{+1, +1, +1, -1, +1}, "1", {"p", "2l"}, 2, {"l"}, 97, 353},
        {{+1, +1, +1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 17, 1361},
        {{+1, +1, -1, +1, +1}, "1", {"p", "l"}, 2, {"2"}, 41, 113},
        {{+1, +1, -1, +1, -1}, "1", {"p", "l"}, 2, {"2p"}, 113, 233},
        {{+1, +1, -1, -1, +1}, "p", {"2", "p", "l"}, 0, {}, 17, 953},
        {{+1, +1, -1, -1, -1}, "1", {"2", "p"}, 2, {"2pl"}, 17, 89},
        {{+1, -1, +1, +1, +1}, "1", {"p", "l"}, 2, {"2"}, 41, 569},
        {{+1, -1, +1, +1, -1}, "p", {"2", "p", "l"}, 0, {}, 41, 73},
        {{+1, -1, +1, -1, +1}, "1", {"p", "l"}, 2, {"2l"}, 17, 457},
        {{+1, -1, +1, -1, -1}, "1", {"p", "l"}, 2, {"2pl"}, 17, 433},
        {{+1, -1, -1, +1, +1}, "p", {"p"}, 2, {"2", "pl"}, 41, 1601},
        {{+1, -1, -1, +1, -1}, "p", {"2", "p", "l"}, 0, {}, 41, 449},
        {{+1, -1, -1, -1, +1}, "p", {"2", "p", "l"}, 0, {}, 17, 569},
        {{+1, -1, -1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 17, 977},
        {{-1, +1, +1, +1, +1}, "p", {"2"}, 2, {"p", "l"}, 113, 569},
        {{-1, +1, +1, +1, -1}, "1", {"2", "l"}, 2, {"p"}, 41, 433},
        {{-1, +1, +1, -1, +1}, "1", {"2", "p"}, 2, {"l"}, 17, 353},
        {{-1, +1, +1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 73, 89},
        {{-1, +1, -1, +1, +1}, "p", {"2", "p", "l"}, 0, {}, 41, 353},
        {{-1, +1, -1, +1, -1}, "p", {"2", "p", "l"}, 0, {}, 113, 241},
        {{-1, +1, -1, -1, +1}, "1", {"2", "p"}, 2, {"2l"}, 17, 137},
        {{-1, +1, -1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 89, 97},
        {{-1, -1, +1, +1, +1}, "p", {"2", "p", "l"}, 0, {}, 41, 337},
        {{-1, -1, +1, +1, -1}, "1", {"2", "l"}, 2, {"2p"}, 113, 401},
        {{-1, -1, +1, -1, +1}, "p", {"2", "p", "l"}, 0, {}, 17, 257},
        {{-1, -1, +1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 73, 97},
        {{-1, -1, -1, +1, +1}, "p", {"p"}, 2, {"2p", "2l"}, 113, 257},
        {{-1, -1, -1, +1, -1}, "p", {"2", "p", "l"}, 0, {}, 41, 241},
        {{-1, -1, -1, -1, +1}, "p", {"2", "p", "l"}, 0, {}, 89, 257},
        {{-1, -1, -1, -1, -1}, "p", {"2", "p", "l"}, 0, {}, 17, 281},
    };
    return rows;
}

const std::vector<SymbolRow>& symbol_table() {
    static const std::vector<SymbolRow> rows = {
        {1513, 17, 89, {+1, -1, -1, -1, +1}},  {2329, 17, 137, {+1, -1, -1, +1, -1}},
        {4633, 41, 113, {+1, -1, +1, +1, +1}}, {6001, 17, 353, {+1, +1, -1, +1, -1}},
        {6953, 17, 409, {+1, +1, -1, +1, -1}}, {7361, 17, 433, {-1, +1, -1, -1, +1}},
        {7769, 17, 457, {-1, +1, -1, +1, +1}}, {9809, 17, 577, {+1, -1, -1, +1, -1}},
    };
    return rows;
}

const std::vector<LambdaPiValue>& lambda_pi_list() {
    static const std::vector<LambdaPiValue> rows = {
        {64297, 113, 569, -1},
        {67009, 113, 593, -1},
        {93193, 41, 2273, +1},
        {94177, 41, 2297, -1},
    };
    return rows;
}

const std::vector<SelmerRow>& selmer_table() {
    static const std::vector<SelmerRow> rows = {
        {1, +1, 17, 89, {-1, 17, 89}, {2, 17, 89}},
        {1, -1, 17, 41, {-1, 17 * 41}, {2, 17 * 41}},
        {5, +1, 5, 29, {-1, 5 * 29}, {5, 29}},
        {5, -1, 5, 13, {-1, 5 * 13}, {2 * 5, 2 * 13}},
        {3, 0, 3, 11, {-1, 3 * 11}, {}},
        {7, +1, 7, 31, {-1, 7, 31}, {2}},
    };
    return rows;
}

}  // namespace congruent::reference
