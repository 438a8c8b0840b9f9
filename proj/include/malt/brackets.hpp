#ifndef MALT_BRACKETS_HPP
#define MALT_BRACKETS_HPP

#include <string>

#include "malt/algebra.hpp"

namespace malt {

/// Tangent-level associator (x,y,z) = -J(x,y,z)/6. This is the unique
/// trilinear form under which the two displayed shapes of the Yamaguti
/// bracket agree on every anticommutative algebra.
Vec tangent_associator(const BracketAlgebra& g, const Vec& x, const Vec& y, const Vec& z);

/// Yamaguti bracket [x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z]
/// (division-free form; equals 6(x,y,z) + 2[[x,y],z]).
Vec yamaguti_bracket(const BracketAlgebra& g, const Vec& x, const Vec& y, const Vec& z);

/// Loos bracket {x,y,z} = ([x,[y,z]] - [y,[x,z]] + 2[[x,y],z]) / 3.
Vec loos_bracket(const BracketAlgebra& g, const Vec& x, const Vec& y, const Vec& z);

/// The displayed defining forms, kept separately so consistency among
/// them is checkable rather than true by construction.
enum class YamagutiForm {
    DoubleBrackets,  // [x,[y,z]] - [y,[x,z]] + [[x,y],z]
    ViaAssociator,   // 6(x,y,z) + 2[[x,y],z]
};

enum class LoosForm {
    ViaAssociator,   // (6(x,y,z) + 3[[x,y],z]) / 3
    ViaYamaguti,     // ([x,y,z] + [[x,y],z]) / 3
    DoubleBrackets,  // ([x,[y,z]] - [y,[x,z]] + 2[[x,y],z]) / 3
};

Vec yamaguti_bracket_via(YamagutiForm form, const BracketAlgebra& g,
                         const Vec& x, const Vec& y, const Vec& z);
Vec loos_bracket_via(LoosForm form, const BracketAlgebra& g,
                     const Vec& x, const Vec& y, const Vec& z);

/// A trilinear bracket value together with the form that produced it.
struct TrilinearValue {
    Vec value;
    std::string provenance;
};

TrilinearValue yamaguti_value(YamagutiForm form, const BracketAlgebra& g,
                              const Vec& x, const Vec& y, const Vec& z);
TrilinearValue loos_value(LoosForm form, const BracketAlgebra& g,
                          const Vec& x, const Vec& y, const Vec& z);

/// Exhaustively checks, over all basis triples, that every displayed form
/// of both brackets agrees. Holds for any anticommutative algebra; on
/// failure fills the witness triple of basis indices.
bool bracket_forms_consistent(const BracketAlgebra& g, std::vector<std::size_t>* witness = nullptr);

} // namespace malt

#endif
