#ifndef MALT_MATRIX_HPP
#define MALT_MATRIX_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malt/vec.hpp"

namespace malt {

/// Dense square matrix of exact rationals, acting on coordinate columns.
/// Dimensions in scope are small (<= 16), so dense storage throughout.
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(std::size_t n) : n_(n), e_(n * n) {}

    static Mat identity(std::size_t n);

    std::size_t dim() const { return n_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    bool is_zero() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Scalar& s, Mat m) { return m *= s; }
    Mat operator-() const;

    friend Mat operator*(const Mat& a, const Mat& b);

    /// Matrix action on a coordinate column.
    Vec apply(const Vec& v) const;

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

    /// Canonical rendering: "[[r00, r01, ...], ...]".
    std::string str() const;

private:
    std::size_t n_;
    std::vector<Scalar> e_;
};

/// Lie bracket AB - BA on operators, computed exactly.
Mat mat_commutator(const Mat& a, const Mat& b);

/// Expresses m as a unique linear combination of the family members.
/// Returns the coefficient vector, or nullopt when m is not in the span.
/// Throws DependentFamilyError when the family is linearly dependent
/// (the expression would be ambiguous) and DimensionError on mismatched
/// dimensions or an empty family.
std::optional<Vec> express_in_family(const Mat& m, std::span<const Mat> family);

/// True when the family is linearly independent as matrices.
bool family_independent(std::span<const Mat> family);

} // namespace malt

#endif
