#include "malt/matrix.hpp"

#include <utility>

#include "malt/errors.hpp"

namespace malt {

Mat Mat::identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool Mat::is_zero() const {
    for (const Scalar& s : e_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

namespace {

void require_same_dim(const Mat& a, const Mat& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                             " and " + std::to_string(b.dim()) + " differ");
    }
}

} // namespace

Mat& Mat::operator+=(const Mat& o) {
    require_same_dim(*this, o, "matrix addition");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same_dim(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
    for (Scalar& x : e_) x *= s;
    return *this;
}

Mat Mat::operator-() const {
    Mat out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    Mat out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Vec Mat::apply(const Vec& v) const {
    require_dim(v, n_, "matrix application");
    Vec out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < n_; ++i) {
            const Scalar& mij = (*this)(i, j);
            if (mij.is_zero()) continue;
            out[i] += mij * v[j];
        }
    }
    return out;
}

std::string Mat::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

Mat mat_commutator(const Mat& a, const Mat& b) {
    require_same_dim(a, b, "matrix commutator");
    return a * b - b * a;
}

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? Int(-l) : l;
}

/// Fraction-free (Bareiss) row echelon form of the stacked system
/// [family | target], working over the integers after clearing row
/// denominators. Rows are equations, so scaling a row is harmless.
struct Echelon {
    std::vector<std::vector<Int>> rows; // width = cols + 1 (augmented)
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;

    std::size_t rank() const { return pivot_cols.size(); }

    bool consistent() const {
        for (std::size_t r = rank(); r < rows.size(); ++r) {
            if (rows[r][cols] != 0) return false;
        }
        return true;
    }
};

Echelon eliminate(const Mat& target, std::span<const Mat> family) {
    const std::size_t n = target.dim();
    const std::size_t m = family.size();
    Echelon ech;
    ech.cols = m;
    ech.rows.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> row(m + 1);
            for (std::size_t f = 0; f < m; ++f) row[f] = family[f](i, j);
            row[m] = target(i, j);
            Int lcm = 1;
            for (const Scalar& s : row) lcm = int_lcm(lcm, s.denominator());
            std::vector<Int> irow(m + 1);
            for (std::size_t f = 0; f <= m; ++f) {
                irow[f] = row[f].numerator() * (lcm / row[f].denominator());
            }
            ech.rows.push_back(std::move(irow));
        }
    }

    Int prev = 1;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m && lead < ech.rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < ech.rows.size() && ech.rows[piv][col] == 0) ++piv;
        if (piv == ech.rows.size()) continue;
        std::swap(ech.rows[lead], ech.rows[piv]);
        const Int pivot = ech.rows[lead][col];
        // Every row below is transformed, including rows with a zero in the
        // pivot column; the one-step division by the previous pivot is exact.
        for (std::size_t r = lead + 1; r < ech.rows.size(); ++r) {
            const Int factor = ech.rows[r][col];
            for (std::size_t c = col + 1; c <= m; ++c) {
                ech.rows[r][c] = (pivot * ech.rows[r][c] - factor * ech.rows[lead][c]) / prev;
            }
            ech.rows[r][col] = 0;
        }
        prev = pivot;
        ech.pivot_cols.push_back(col);
        ++lead;
    }
    return ech;
}

} // namespace

std::optional<Vec> express_in_family(const Mat& m, std::span<const Mat> family) {
    if (family.empty()) {
        throw DimensionError("express_in_family: empty family");
    }
    for (const Mat& f : family) require_same_dim(m, f, "express_in_family");

    Echelon ech = eliminate(m, family);
    if (ech.rank() < family.size()) {
        throw DependentFamilyError("express_in_family: family of " + std::to_string(family.size()) +
                                   " matrices is linearly dependent (rank " +
                                   std::to_string(ech.rank()) + "), expression would be ambiguous");
    }
    if (!ech.consistent()) {
        return std::nullopt; // not in span
    }

    // Full column rank: back-substitute the upper-triangular system.
    const std::size_t k = family.size();
    Vec coeffs(k);
    for (std::size_t r = k; r-- > 0;) {
        const std::size_t col = ech.pivot_cols[r]; // == r when rank is full
        Scalar acc(ech.rows[r][k]);
        for (std::size_t c = col + 1; c < k; ++c) {
            acc -= Scalar(ech.rows[r][c]) * coeffs[c];
        }
        coeffs[col] = acc / Scalar(ech.rows[r][col]);
    }

    // The solve is exact, so recombination must reproduce m.
    Mat recombined(m.dim());
    for (std::size_t f = 0; f < k; ++f) {
        if (coeffs[f].is_zero()) continue;
        recombined += coeffs[f] * family[f];
    }
    if (!(recombined == m)) {
        throw Error("express_in_family: internal solver inconsistency");
    }
    return coeffs;
}

bool family_independent(std::span<const Mat> family) {
    if (family.empty()) return true;
    Mat zero(family.front().dim());
    Echelon ech = eliminate(zero, family);
    return ech.rank() == family.size();
}

} // namespace malt
