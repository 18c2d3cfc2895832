#pragma once

// Exact linear algebra for reachable-submodule computations: reduced row
// echelon bases over ℚ and row-style Hermite normal form bases over ℤ.
//
// Both basis types are canonical: two bases compare equal iff they span the
// same subspace / generate the same lattice.

#include <cstddef>
#include <optional>
#include <vector>

#include "dualmin/semiring.hpp"

namespace dualmin {

using IntMatrix = Matrix<IntegerSemiring>;
using IntVector = Vector<IntegerSemiring>;
using RatMatrix = Matrix<RationalSemiring>;
using RatVector = Vector<RationalSemiring>;

struct HnfResult {
    IntMatrix h;  ///< row-style HNF of the input, zero rows at the bottom
    IntMatrix u;  ///< unimodular transform, u * input == h
};

/// Row-style Hermite normal form. Pivots are positive, pivot columns strictly
/// increase down the rows, and entries above a pivot lie in [0, pivot).
HnfResult hnf(const IntMatrix& a);

/// True iff `h` has HNF shape after ignoring trailing zero rows.
bool is_hnf(const IntMatrix& h);

/// Sublattice of ℤ^n, stored as the nonzero rows of its Hermite normal form.
class IntegerBasis {
public:
    using semiring = IntegerSemiring;
    using vector_type = IntVector;

    explicit IntegerBasis(std::size_t dim) : dim_(dim) {}

    /// Lattice generated by the given rows.
    static IntegerBasis from_generators(std::size_t dim, const std::vector<IntVector>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<IntVector>& rows() const noexcept { return rows_; }
    std::size_t pivot(std::size_t row) const noexcept { return pivots_[row]; }

    /// Integer c with c·B == v, or nullopt when v is outside the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

    /// Rows stacked into a rank x dim matrix.
    IntMatrix as_matrix() const;

    friend bool operator==(const IntegerBasis& a, const IntegerBasis& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    friend struct BasisAccess;
    std::size_t dim_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Subspace of ℚ^n, stored in reduced row echelon form.
class FieldBasis {
public:
    using semiring = RationalSemiring;
    using vector_type = RatVector;

    explicit FieldBasis(std::size_t dim) : dim_(dim) {}

    static FieldBasis from_generators(std::size_t dim, const std::vector<RatVector>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<RatVector>& rows() const noexcept { return rows_; }
    std::size_t pivot(std::size_t row) const noexcept { return pivots_[row]; }

    std::optional<RatVector> coordinates(const RatVector& v) const;
    bool contains(const RatVector& v) const { return coordinates(v).has_value(); }

    RatMatrix as_matrix() const;

    friend bool operator==(const FieldBasis& a, const FieldBasis& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    friend struct BasisAccess;
    std::size_t dim_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

template <class B>
struct InsertResult {
    B basis;
    bool changed = false;
};

/// Canonical basis of span(B ∪ {v}); `changed` is false iff v was already in it.
InsertResult<IntegerBasis> basis_insert(const IntegerBasis& b, const IntVector& v);
InsertResult<FieldBasis> basis_insert(const FieldBasis& b, const RatVector& v);

inline std::size_t rank(const IntegerBasis& b) { return b.rank(); }
inline std::size_t rank(const FieldBasis& b) { return b.rank(); }

/// Basis type used for reachable submodules over a given semiring.
template <class S>
struct BasisFor;
template <>
struct BasisFor<IntegerSemiring> {
    using type = IntegerBasis;
};
template <>
struct BasisFor<RationalSemiring> {
    using type = FieldBasis;
};
template <class S>
using BasisFor_t = typename BasisFor<S>::type;

}  // namespace dualmin
