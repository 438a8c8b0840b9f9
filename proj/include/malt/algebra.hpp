#ifndef MALT_ALGEBRA_HPP
#define MALT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "malt/matrix.hpp"
#include "malt/vec.hpp"

namespace malt {

/// Structure table: table[i][j] is the coordinate vector of e_i * e_j.
using StructureTable = std::vector<std::vector<Vec>>;

/// Finite-dimensional algebra over the rationals, given by structure
/// constants on a fixed basis. Immutable after construction.
class Algebra {
public:
    /// Validates the table shape and detects a two-sided unit if one of
    /// the basis vectors acts as one. Throws FormatError naming the
    /// offending (i,j) entry on a ragged table.
    Algebra(std::string name, std::vector<std::string> basis_labels, StructureTable table);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::string& basis_label(std::size_t i) const { return labels_[i]; }

    /// The product e_i * e_j as a coordinate vector.
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

    /// Index of the two-sided unit basis vector, when present.
    std::optional<std::size_t> unit() const { return unit_; }

    /// Bilinear extension of the structure table.
    Vec multiply(const Vec& u, const Vec& v) const;

    /// Ambient associator (xy)z - x(yz).
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;

    /// Matrix of u |-> x*u on the coordinate column space.
    Mat left_mult(const Vec& x) const;
    /// Matrix of u |-> u*x.
    Mat right_mult(const Vec& x) const;

    Vec basis_vec(std::size_t i) const { return Vec::unit(dim_, i); }

protected:
    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    StructureTable table_;
    std::optional<std::size_t> unit_;
};

/// Anticommutative algebra whose product is read as a bracket [.,.].
/// Anticommutativity is validated on all basis pairs at construction.
class BracketAlgebra : public Algebra {
public:
    BracketAlgebra(std::string name, std::vector<std::string> basis_labels, StructureTable table);
    explicit BracketAlgebra(Algebra a);

    Vec bracket(const Vec& u, const Vec& v) const { return multiply(u, v); }
};

/// Doubles a unital algebra: the result has dimension 2*dim with product
/// (a,b)(c,d) = (ac + sign*(d~)b, da + b(c~)), where x~ is the structural
/// conjugation fixing the unit and negating the rest of the basis. With
/// sign = -1 the chain scalars -> complexes -> quaternions -> octonions
/// is produced. Throws AlgebraError when the input has no unit.
Algebra cayley_dickson(const Algebra& a, const Scalar& sign, std::string name = {});

/// Commutator (tangent) algebra: bracket [u,v] = uv - vu, optionally
/// restricted to the span of the given basis indices. Throws AlgebraError
/// listing an offending pair when the commutator does not close on the
/// requested subspace.
BracketAlgebra derived_commutator_algebra(const Algebra& a,
                                          const std::optional<std::vector<std::size_t>>& restrict_to = std::nullopt,
                                          std::string name = {});

/// Jacobian J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]; identically zero
/// exactly when the bracket satisfies the Jacobi identity.
Vec jacobian_elem(const BracketAlgebra& g, const Vec& x, const Vec& y, const Vec& z);

/// One classified property: holds / failed-with-witness. The witness is
/// the lexicographically first failing basis tuple.
struct PropertyResult {
    bool holds = true;
    std::vector<std::size_t> witness; // basis indices; empty when holds

    explicit operator bool() const { return holds; }
};

/// Property report produced by exhaustive scans over basis tuples
/// (multilinear identities) and over polarized tuples where an argument
/// repeats (alternativity, the Mal'tsev identity), which is what sound
/// classification over a characteristic-0 field requires.
struct ClassifyReport {
    PropertyResult associative;
    PropertyResult alternative;
    PropertyResult commutative;
    PropertyResult anticommutative;
    PropertyResult jacobi;
    PropertyResult malcev;
};

ClassifyReport classify(const Algebra& a);

} // namespace malt

#endif
