#ifndef MALT_OPERATOR_MODEL_HPP
#define MALT_OPERATOR_MODEL_HPP

#include <functional>
#include <vector>

#include "malt/algebra.hpp"

namespace malt {

enum class Family { Left, Right, Middle };

inline constexpr Family kFamilies[] = {Family::Left, Family::Right, Family::Middle};

const char* family_name(Family f);

/// Translation-operator model: three linear operator families
/// x |-> L_x, R_x, M_x over a parameter algebra Gamma, realized as exact
/// matrices on an ambient coordinate space. Immutable after construction.
class TranslationTriple {
public:
    TranslationTriple(Algebra ambient, BracketAlgebra params,
                      std::vector<std::size_t> param_embedding,
                      std::vector<Mat> left, std::vector<Mat> right, std::vector<Mat> middle);

    const Algebra& ambient() const { return ambient_; }
    const BracketAlgebra& params() const { return params_; }
    std::size_t ambient_dim() const { return ambient_.dim(); }
    std::size_t param_dim() const { return params_.dim(); }

    const Mat& left(std::size_t i) const { return left_[i]; }
    const Mat& right(std::size_t i) const { return right_[i]; }
    const Mat& middle(std::size_t i) const { return middle_[i]; }
    const Mat& family(Family f, std::size_t i) const;
    const std::vector<Mat>& family_mats(Family f) const;

    /// L_x (resp. R_x, M_x) for an arbitrary parameter vector x, by
    /// linearity in the coordinates of x.
    Mat family_of(Family f, const Vec& x) const;
    Mat left_of(const Vec& x) const { return family_of(Family::Left, x); }
    Mat right_of(const Vec& x) const { return family_of(Family::Right, x); }
    Mat middle_of(const Vec& x) const { return family_of(Family::Middle, x); }

    /// Embedding of a parameter vector into ambient coordinates.
    /// Only available for models built from an ambient multiplication.
    bool has_embedding() const { return !embedding_.empty(); }
    Vec embed(const Vec& x) const;

private:
    Algebra ambient_;
    BracketAlgebra params_;
    std::vector<std::size_t> embedding_; // params basis j -> ambient basis embedding_[j]
    std::vector<Mat> left_, right_, middle_;
};

/// Rule producing the middle family from the left and right matrices.
/// The default convention is M = -(L + R); it is pluggable so another
/// convention can be swapped in without touching any verifier.
using MiddleRule = std::function<Mat(const Mat& l, const Mat& r)>;

MiddleRule default_middle_rule();

/// Multiplication model over a unital algebra: L_i and R_i are the left
/// and right multiplications by the chosen parameter basis vectors and
/// M_i = -(L_i + R_i) under the default rule. The parameter algebra is
/// the commutator algebra restricted to param_indices (which must close).
TranslationTriple multiplication_triple(const Algebra& a,
                                        const std::vector<std::size_t>& param_indices,
                                        const MiddleRule& middle = default_middle_rule());

/// Degenerate model with all matrices zero; every operator identity
/// holds vacuously on it.
TranslationTriple zero_triple(std::size_t ambient_dim, BracketAlgebra params);

/// Unnormalized Yamagutian Yhat(x;y) = [L_x,L_y] + [R_x,R_y] + [M_x,M_y].
Mat yamagutian_unnormalized(const TranslationTriple& t, const Vec& x, const Vec& y);

/// Yamagutian Y(x;y) = Yhat(x;y) / 6.
Mat yamagutian(const TranslationTriple& t, const Vec& x, const Vec& y);

/// Pair operator L(x;y) = [L_x, L_y] (and the R/M analogues).
Mat pair_operator(const TranslationTriple& t, const Vec& x, const Vec& y, Family f = Family::Left);

} // namespace malt

#endif
