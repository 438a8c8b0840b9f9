#ifndef MALT_CATALOG_HPP
#define MALT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "malt/algebra.hpp"

namespace malt {

/// Built-in fixture algebras. All are constructed once and cached.
namespace catalog {

const Algebra& scalars();
const Algebra& complexes();
const Algebra& quaternions();
/// Basis order e0=1, e1=i, e2=j, e3=k, e4=e, e5=ie, e6=je, e7=ke,
/// produced by Cayley-Dickson doubling (never a hand-typed table).
const Algebra& octonions();

/// Imaginary quaternions with the commutator bracket; [e1,e2]=2e3 etc.
const BracketAlgebra& quaternion_gamma();
/// Imaginary octonions with the commutator bracket; Mal'tsev, not Lie.
const BracketAlgebra& octonion_gamma();
/// Anticommutative non-Mal'tsev fixture for negative tests:
/// [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1.
const BracketAlgebra& non_malcev();

struct Entry {
    std::string name;
    bool is_bracket = false;
    const Algebra* algebra = nullptr;             // set when !is_bracket
    const BracketAlgebra* bracket = nullptr;      // set when is_bracket
    std::vector<std::size_t> params;              // translation parameters (algebra entries)

    std::size_t dim() const { return is_bracket ? bracket->dim() : algebra->dim(); }
};

/// All built-in entries in canonical order.
const std::vector<Entry>& entries();

/// Looks up a built-in by name.
std::optional<Entry> find(const std::string& name);

} // namespace catalog

} // namespace malt

#endif
