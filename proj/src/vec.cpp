#include "malt/vec.hpp"

#include "malt/errors.hpp"

namespace malt {

Vec Vec::unit(std::size_t dim, std::size_t i) {
    if (i >= dim) {
        throw DimensionError("basis index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(dim));
    }
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

bool Vec::is_zero() const {
    for (const Scalar& c : c_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    require_dim(o, dim(), "vector addition");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    require_dim(o, dim(), "vector subtraction");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
    for (Scalar& c : c_) c *= s;
    return *this;
}

Vec Vec::operator-() const {
    Vec out(dim());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

std::string Vec::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].str();
    }
    out += "]";
    return out;
}

void require_dim(const Vec& v, std::size_t dim, const char* what) {
    if (v.dim() != dim) {
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                             ", got " + std::to_string(v.dim()));
    }
}

} // namespace malt
