#ifndef MALT_VERIFIER_HPP
#define MALT_VERIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "malt/brackets.hpp"
#include "malt/operator_model.hpp"

namespace malt {

/// Identity suites. Operator suites quantify over parameter basis tuples
/// of a TranslationTriple; bracket suites quantify over basis tuples of a
/// BracketAlgebra.
enum class SuiteId {
    RedL, RedR, RedM,      // [Yhat(x;y), F_z] = F_[x,y,z]
    PropL, PropR, PropM,   // [Yhat(x;y), F_z] = 3[[F_x,F_y],F_z] - F_[[x,y],z]
    TcL, TcR, TcM,         // [[F_x,F_y],F_z] = F_{x,y,z}
    Sym5b, Sym5c,          // [L(x;y),L_z] = L_{x,y,z}; [L(x;y),L(z;w)] = L({x,y,z};w) + L(z;{x,y,w})
    Lts6a, Lts6b, Lts6c,   // Lie-triple-system axioms for the Loos bracket
    Malcev, Jacobi, Anticomm,
};

inline constexpr SuiteId kAllSuites[] = {
    SuiteId::RedL, SuiteId::RedR, SuiteId::RedM,
    SuiteId::PropL, SuiteId::PropR, SuiteId::PropM,
    SuiteId::TcL, SuiteId::TcR, SuiteId::TcM,
    SuiteId::Sym5b, SuiteId::Sym5c,
    SuiteId::Lts6a, SuiteId::Lts6b, SuiteId::Lts6c,
    SuiteId::Malcev, SuiteId::Jacobi, SuiteId::Anticomm,
};

std::string_view suite_name(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view name);
bool is_operator_suite(SuiteId id);

enum class Mode { Exhaustive, Random };
std::string_view mode_name(Mode m);

/// One failing instance: the input tuple and both evaluated sides.
struct Counterexample {
    std::string context;                    // family tag or sub-check note; may be empty
    std::vector<Vec> inputs;                // parameter vectors, in identity order
    std::variant<Vec, Mat> lhs;
    std::variant<Vec, Mat> rhs;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

/// Outcome of one identity suite. passed == true exactly when no checked
/// instance failed; counterexamples hold the first kMaxCounterexamples
/// failures in canonical (lexicographic enumeration) order while
/// `failures` counts all of them. In exhaustive mode `instances` is p^k
/// for a k-ary identity over a dimension-p parameter space; the random
/// guard instances that exhaustive runs add are tallied separately.
struct IdentityVerdict {
    SuiteId id{};
    Mode mode = Mode::Exhaustive;
    std::uint64_t instances = 0;
    std::uint64_t guard_instances = 0;
    std::uint64_t failures = 0;
    bool passed = true;
    std::vector<Counterexample> counterexamples;
    std::optional<Scalar> calibration;
};

struct CheckOptions {
    std::optional<Mode> mode;        // nullopt: exhaustive whenever the tuple space is small
    std::uint64_t samples = 1000;    // random-mode tuples per identity
    std::uint64_t seed = 0;
    bool random_guard = true;        // exhaustive runs also check 100 seeded random tuples
};

/// Mode the options resolve to for a k-ary identity over dimension p.
Mode resolve_mode(const CheckOptions& opts, std::size_t p, std::size_t arity);

// --- operator suites -------------------------------------------------------

/// tc-L/R/M: [[F_x,F_y],F_z] = F_{x,y,z} with {.,.,.} the Loos bracket.
/// When the family is linearly independent the double commutator is also
/// required to be expressible in the family with exactly those
/// coefficients (span membership).
std::array<IdentityVerdict, 3> check_triple_closure(const TranslationTriple& t,
                                                    const CheckOptions& opts = {});

/// red-L/R/M in the canonical unnormalized form [Yhat(x;y),F_z] = F_[x,y,z].
/// Each verdict carries the calibrated constant for the normalized
/// Yamagutian when one exists.
std::array<IdentityVerdict, 3> check_reductivity(const TranslationTriple& t,
                                                 const CheckOptions& opts = {});

/// prop-L/R/M: [Yhat(x;y),F_z] = 3[[F_x,F_y],F_z] - F_[[x,y],z].
std::array<IdentityVerdict, 3> check_proposition(const TranslationTriple& t,
                                                 const CheckOptions& opts = {});

/// sym-5b and sym-5c via the pair operator. An instance is one basis
/// tuple; at each tuple the left, right and middle family equations are
/// all required, with counterexamples tagged by family. The left-family
/// portion of sym-5b is the same equation as tc-L, so those two outcomes
/// agree by construction; per_family exposes the split for that assertion.
struct SymmetricRelationsResult {
    std::array<IdentityVerdict, 2> verdicts;   // sym-5b, sym-5c
    std::array<bool, 3> family_5b_passed{};    // L, R, M
    std::array<bool, 3> family_5c_passed{};
};

SymmetricRelationsResult check_symmetric_relations(const TranslationTriple& t,
                                                   const CheckOptions& opts = {});

// --- bracket suites ---------------------------------------------------------

/// lts-6a/6b/6c: antisymmetry, the cyclic identity, and the five-argument
/// derivation identity of the Loos bracket.
std::array<IdentityVerdict, 3> check_lts_axioms(const BracketAlgebra& g,
                                                const CheckOptions& opts = {});

IdentityVerdict check_malcev(const BracketAlgebra& g, const CheckOptions& opts = {});
IdentityVerdict check_jacobi(const BracketAlgebra& g, const CheckOptions& opts = {});
IdentityVerdict check_anticommutativity(const BracketAlgebra& g, const CheckOptions& opts = {});

// --- calibration and equivalence -------------------------------------------

struct Calibration {
    enum class Kind { Value, Indeterminate, Inconsistent };
    Kind kind = Kind::Indeterminate;
    std::optional<Scalar> value;    // set when kind == Value

    std::string str() const;
};

/// Finds the unique c with [Y(x;y),F_z] = c * F_[x,y,z] across all basis
/// triples, with Y the normalized Yamagutian. Indeterminate when every
/// right side vanishes; Inconsistent when no single c works.
Calibration calibrate_reductivity_constant(const TranslationTriple& t, Family f = Family::Left);

/// Equivalence meta-check: on models where prop-* pass, the reductivity
/// and triple-closure verdicts must agree family by family, and the
/// algebraic bridge 3{x,y,z} = [x,y,z] + [[x,y],z] must hold on every
/// basis triple. Not applicable when prop-* fail.
struct EquivalenceVerdict {
    bool applicable = false;
    std::array<bool, 3> family_agreement{}; // L, R, M
    bool bridge_passed = false;
    bool holds = false;                     // applicable && all agree && bridge
};

EquivalenceVerdict theorem1_equivalence(const TranslationTriple& t, const CheckOptions& opts = {});

// --- suite runner ------------------------------------------------------------

/// What a verification run targets: either a unital algebra with chosen
/// translation parameters (operator suites) or a bare bracket algebra
/// (bracket suites).
struct VerifyTarget {
    std::string name;
    std::optional<Algebra> algebra;
    std::vector<std::size_t> params;        // for algebra targets
    std::optional<BracketAlgebra> bracket;

    bool is_bracket() const { return bracket.has_value(); }
    std::size_t dim() const { return is_bracket() ? bracket->dim() : algebra->dim(); }
};

VerifyTarget target_from_catalog(const std::string& name); // throws Error on unknown name

/// Suites that run_suite accepts for the target, in canonical order.
std::vector<SuiteId> applicable_suites(const VerifyTarget& target);

/// Deterministic report for one run. Byte-stable serialization relies on
/// this structure being fully ordered and timestamp-free.
struct IdentityReport {
    std::string toolkit_version;
    std::string target_name;
    std::string target_kind;    // "algebra" | "bracket"
    std::size_t target_dim = 0;
    std::string digest;         // deterministic digest of the target content
    Mode mode = Mode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityVerdict> verdicts;
    std::vector<std::string> conventions;

    bool all_passed() const;
};

/// Runs the requested suites (must all be applicable; throws UsageError
/// listing the applicable ones otherwise) and assembles the report.
IdentityReport run_suite(const VerifyTarget& target, const std::vector<SuiteId>& ids,
                         const CheckOptions& opts = {});

/// Normalization and reading conventions recorded in every report.
const std::vector<std::string>& convention_notes();

/// Deterministic FNV-1a digest of the target's canonical signature.
std::string target_digest(const VerifyTarget& target);

/// Seeded deterministic generator for random-mode tuples; coordinates are
/// rationals p/q with p in [-3,3] and q in [1,3].
class TupleSampler {
public:
    explicit TupleSampler(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    Scalar next_coord();
    Vec next_vec(std::size_t dim);

private:
    std::uint64_t state_;
};

} // namespace malt

#endif
