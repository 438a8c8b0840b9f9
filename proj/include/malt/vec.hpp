#ifndef MALT_VEC_HPP
#define MALT_VEC_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "malt/scalar.hpp"

namespace malt {

/// Coordinate vector over an algebra basis.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim) {}
    Vec(std::initializer_list<Scalar> coords) : c_(coords) {}
    explicit Vec(std::vector<Scalar> coords) : c_(std::move(coords)) {}

    /// i-th standard basis vector of the given dimension.
    static Vec unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Scalar& s);

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
    Vec operator-() const;

    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

    /// Canonical rendering: "[c0, c1, ...]" with exact rationals.
    std::string str() const;

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

private:
    std::vector<Scalar> c_;
};

/// Throws DimensionError unless both vectors have the given dimension.
void require_dim(const Vec& v, std::size_t dim, const char* what);

} // namespace malt

#endif
