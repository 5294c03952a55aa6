#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "congruent/int_arith.hpp"

namespace congruent {

struct NotAGroup : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

/// Product of two square classes, as a signed squarefree representative.
i64 square_class_product(i64 a, i64 b);

/// A finite subgroup of Q^x / Q^x^2, stored as its sorted squarefree
/// representatives. Always contains 1; size is a power of two.
class SquareClassGroup {
public:
    /// The trivial group {1}.
    SquareClassGroup();

    /// Subgroup generated by the given classes (any nonzero integers; each is
    /// reduced to its squarefree part).
    static SquareClassGroup generated_by(std::initializer_list<i64> gens);
    static SquareClassGroup generated_by(const std::vector<i64>& gens);

    /// Interpret the set as a group; throws NotAGroup unless it is closed,
    /// contains 1 and consists of squarefree values.
    static SquareClassGroup from_elements(std::vector<i64> elements);

    const std::vector<i64>& elements() const { return elements_; }
    /// A minimal generating set (reduced echelon basis over F_2).
    const std::vector<i64>& generators() const { return basis_; }
    std::size_t size() const { return elements_.size(); }
    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }

    bool contains(i64 cls) const;
    bool is_subgroup_of(const SquareClassGroup& other) const;

    /// <this, other>.
    SquareClassGroup join(const SquareClassGroup& other) const;
    SquareClassGroup with(i64 cls) const;
    SquareClassGroup intersect(const SquareClassGroup& other) const;

    /// True iff this * sub == whole and this & sub == {1}.
    bool is_complement_of(const SquareClassGroup& sub, const SquareClassGroup& whole) const;
    /// A complement of sub inside whole (sub must be a subgroup of whole),
    /// generated by the smallest-|value| classes that enlarge the span.
    static SquareClassGroup complement(const SquareClassGroup& sub, const SquareClassGroup& whole);

    friend bool operator==(const SquareClassGroup&, const SquareClassGroup&) = default;

    /// "<-1, 2, 41>" or "1".
    std::string str() const;

private:
    void rebuild_basis();
    std::vector<i64> elements_;
    std::vector<i64> basis_;
};

}  // namespace congruent
