#include "congruent/square_classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace congruent {

i64 square_class_product(i64 a, i64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("square_class_product: zero");
    i64 sa = squarefree_part(a), sb = squarefree_part(b);
    i64 g = gcd(sa < 0 ? -sa : sa, sb < 0 ? -sb : sb);
    return (sa / g) * (sb / g);
}

namespace {

bool by_magnitude(i64 x, i64 y) {
    i64 ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    return ax != ay ? ax < ay : x > y;
}

std::vector<i64> close_under_products(const std::vector<i64>& gens) {
    std::set<i64> elems{1};
    for (i64 g : gens) {
        i64 s = squarefree_part(g);
        if (elems.count(s)) continue;
        std::vector<i64> add;
        for (i64 e : elems) add.push_back(square_class_product(e, s));
        elems.insert(add.begin(), add.end());
    }
    return {elems.begin(), elems.end()};
}

}  // namespace

SquareClassGroup::SquareClassGroup() : elements_{1} {}

SquareClassGroup SquareClassGroup::generated_by(std::initializer_list<i64> gens) {
    return generated_by(std::vector<i64>(gens));
}

SquareClassGroup SquareClassGroup::generated_by(const std::vector<i64>& gens) {
    SquareClassGroup g;
    g.elements_ = close_under_products(gens);
    g.rebuild_basis();
    return g;
}

SquareClassGroup SquareClassGroup::from_elements(std::vector<i64> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!std::binary_search(elements.begin(), elements.end(), i64{1}))
        throw NotAGroup("square classes do not contain 1");
    for (i64 e : elements)
        if (squarefree_part(e) != e) throw NotAGroup("non-squarefree representative " + std::to_string(e));
    for (i64 x : elements)
        for (i64 y : elements)
            if (!std::binary_search(elements.begin(), elements.end(), square_class_product(x, y)))
                throw NotAGroup("square classes not closed: " + std::to_string(x) + " * " + std::to_string(y));
    SquareClassGroup g;
    g.elements_ = std::move(elements);
    g.rebuild_basis();
    return g;
}

void SquareClassGroup::rebuild_basis() {
    basis_.clear();
    std::vector<i64> sorted = elements_;
    std::sort(sorted.begin(), sorted.end(), by_magnitude);
    std::vector<i64> span{1};
    for (i64 e : sorted) {
        if (std::find(span.begin(), span.end(), e) != span.end()) continue;
        basis_.push_back(e);
        std::vector<i64> add;
        for (i64 s : span) add.push_back(square_class_product(s, e));
        span.insert(span.end(), add.begin(), add.end());
    }
}

bool SquareClassGroup::contains(i64 cls) const {
    return std::binary_search(elements_.begin(), elements_.end(), squarefree_part(cls));
}

bool SquareClassGroup::is_subgroup_of(const SquareClassGroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](i64 e) { return other.contains(e); });
}

SquareClassGroup SquareClassGroup::join(const SquareClassGroup& other) const {
    std::vector<i64> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return generated_by(gens);
}

SquareClassGroup SquareClassGroup::with(i64 cls) const {
    std::vector<i64> gens = basis_;
    gens.push_back(cls);
    return generated_by(gens);
}

SquareClassGroup SquareClassGroup::intersect(const SquareClassGroup& other) const {
    std::vector<i64> common;
    for (i64 e : elements_)
        if (other.contains(e)) common.push_back(e);
    return from_elements(common);
}

bool SquareClassGroup::is_complement_of(const SquareClassGroup& sub, const SquareClassGroup& whole) const {
    return join(sub) == whole && intersect(sub).size() == 1;
}

SquareClassGroup SquareClassGroup::complement(const SquareClassGroup& sub, const SquareClassGroup& whole) {
    if (!sub.is_subgroup_of(whole)) throw std::invalid_argument("complement: not a subgroup");
    std::vector<i64> sorted = whole.elements_;
    std::sort(sorted.begin(), sorted.end(), by_magnitude);
    SquareClassGroup span = sub;
    std::vector<i64> gens;
    for (i64 e : sorted) {
        if (span.contains(e)) continue;
        gens.push_back(e);
        span = span.with(e);
    }
    return generated_by(gens);
}

std::string SquareClassGroup::str() const {
    if (basis_.empty()) return "1";
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(basis_[i]);
    }
    return s + ">";
}

}  // namespace congruent
