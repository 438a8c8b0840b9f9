#include "malt/algebra.hpp"

#include <algorithm>
#include <utility>

#include "malt/errors.hpp"

namespace malt {

Algebra::Algebra(std::string name, std::vector<std::string> basis_labels, StructureTable table)
    : name_(std::move(name)), dim_(basis_labels.size()), labels_(std::move(basis_labels)),
      table_(std::move(table)) {
    if (table_.size() != dim_) {
        throw FormatError("algebra '" + name_ + "': structure table has " +
                          std::to_string(table_.size()) + " rows, expected " + std::to_string(dim_));
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (table_[i].size() != dim_) {
            throw FormatError("algebra '" + name_ + "': structure table row " + std::to_string(i) +
                              " has " + std::to_string(table_[i].size()) + " entries, expected " +
                              std::to_string(dim_));
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (table_[i][j].dim() != dim_) {
                throw FormatError("algebra '" + name_ + "': structure tensor entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + ") has length " +
                                  std::to_string(table_[i][j].dim()) + ", expected " +
                                  std::to_string(dim_));
            }
        }
    }

    // Detect a two-sided unit among the basis vectors.
    for (std::size_t u = 0; u < dim_; ++u) {
        bool is_unit = true;
        for (std::size_t i = 0; i < dim_ && is_unit; ++i) {
            if (!(table_[u][i] == Vec::unit(dim_, i)) || !(table_[i][u] == Vec::unit(dim_, i))) {
                is_unit = false;
            }
        }
        if (is_unit) {
            unit_ = u;
            break;
        }
    }
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
    require_dim(u, dim_, "algebra product");
    require_dim(v, dim_, "algebra product");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Scalar uv = u[i] * v[j];
            const Vec& prod = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (prod[k].is_zero()) continue;
                out[k] += uv * prod[k];
            }
        }
    }
    return out;
}

Vec Algebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Mat Algebra::left_mult(const Vec& x) const {
    require_dim(x, dim_, "left multiplication operator");
    Mat m(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(x, basis_vec(j));
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

Mat Algebra::right_mult(const Vec& x) const {
    require_dim(x, dim_, "right multiplication operator");
    Mat m(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(basis_vec(j), x);
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

BracketAlgebra::BracketAlgebra(std::string name, std::vector<std::string> basis_labels,
                               StructureTable table)
    : Algebra(std::move(name), std::move(basis_labels), std::move(table)) {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (!(table_[i][j] + table_[j][i]).is_zero()) {
                throw AlgebraError("bracket algebra '" + name_ + "' is not anticommutative at basis pair (" +
                                   labels_[i] + "," + labels_[j] + ")");
            }
        }
    }
}

BracketAlgebra::BracketAlgebra(Algebra a)
    : BracketAlgebra(a.name(), a.basis_labels(),
                     [&a] {
                         StructureTable t;
                         t.reserve(a.dim());
                         for (std::size_t i = 0; i < a.dim(); ++i) {
                             std::vector<Vec> row;
                             row.reserve(a.dim());
                             for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.product(i, j));
                             t.push_back(std::move(row));
                         }
                         return t;
                     }()) {}

Algebra cayley_dickson(const Algebra& a, const Scalar& sign, std::string name) {
    if (!a.unit()) {
        throw AlgebraError("cayley_dickson: algebra '" + a.name() + "' has no unit to conjugate around");
    }
    const std::size_t d = a.dim();
    const std::size_t unit = *a.unit();
    const std::size_t dd = 2 * d;

    // Structural conjugation: fix the unit, negate every other basis vector.
    auto conj = [&](const Vec& v) {
        Vec out = -v;
        out[unit] = v[unit];
        return out;
    };

    if (name.empty()) name = "cd(" + a.name() + ")";
    std::vector<std::string> labels(dd);
    for (std::size_t i = 0; i < dd; ++i) labels[i] = "e" + std::to_string(i);

    const Vec zero(d);
    StructureTable table(dd, std::vector<Vec>(dd, Vec(dd)));
    for (std::size_t bi = 0; bi < dd; ++bi) {
        const Vec pa = bi < d ? a.basis_vec(bi) : zero;
        const Vec pb = bi < d ? zero : a.basis_vec(bi - d);
        for (std::size_t bj = 0; bj < dd; ++bj) {
            const Vec qa = bj < d ? a.basis_vec(bj) : zero;
            const Vec qb = bj < d ? zero : a.basis_vec(bj - d);
            // (a,b)(c,d) = (ac + sign*(d~)b, da + b(c~))
            const Vec first = a.multiply(pa, qa) + sign * a.multiply(conj(qb), pb);
            const Vec second = a.multiply(qb, pa) + a.multiply(pb, conj(qa));
            Vec prod(dd);
            for (std::size_t k = 0; k < d; ++k) {
                prod[k] = first[k];
                prod[k + d] = second[k];
            }
            table[bi][bj] = std::move(prod);
        }
    }
    return Algebra(std::move(name), std::move(labels), std::move(table));
}

BracketAlgebra derived_commutator_algebra(const Algebra& a,
                                          const std::optional<std::vector<std::size_t>>& restrict_to,
                                          std::string name) {
    std::vector<std::size_t> idx;
    if (restrict_to) {
        idx = *restrict_to;
        for (std::size_t i : idx) {
            if (i >= a.dim()) {
                throw DimensionError("derived_commutator_algebra: basis index " + std::to_string(i) +
                                     " out of range for '" + a.name() + "'");
            }
        }
    } else {
        idx.resize(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) idx[i] = i;
    }

    const std::size_t p = idx.size();
    std::vector<std::size_t> position(a.dim(), a.dim());
    for (std::size_t t = 0; t < p; ++t) position[idx[t]] = t;

    if (name.empty()) name = a.name() + "-commutator";
    std::vector<std::string> labels(p);
    for (std::size_t t = 0; t < p; ++t) labels[t] = a.basis_label(idx[t]);

    StructureTable table(p, std::vector<Vec>(p, Vec(p)));
    for (std::size_t s = 0; s < p; ++s) {
        for (std::size_t t = 0; t < p; ++t) {
            const Vec w = a.multiply(a.basis_vec(idx[s]), a.basis_vec(idx[t])) -
                          a.multiply(a.basis_vec(idx[t]), a.basis_vec(idx[s]));
            Vec proj(p);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (w[k].is_zero()) continue;
                if (position[k] == a.dim()) {
                    throw AlgebraError("derived_commutator_algebra: commutator of (" +
                                       a.basis_label(idx[s]) + "," + a.basis_label(idx[t]) +
                                       ") leaves the requested subspace (component " +
                                       a.basis_label(k) + ")");
                }
                proj[position[k]] = w[k];
            }
            table[s][t] = std::move(proj);
        }
    }
    return BracketAlgebra(std::move(name), std::move(labels), std::move(table));
}

Vec jacobian_elem(const BracketAlgebra& g, const Vec& x, const Vec& y, const Vec& z) {
    return g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) +
           g.bracket(g.bracket(z, x), y);
}

namespace {

/// Mal'tsev defect [[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x] - [[[z,x],x],y].
Vec malcev_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    auto b = [&](const Vec& u, const Vec& v) { return a.multiply(u, v); };
    return b(b(x, y), b(x, z)) - b(b(b(x, y), z), x) - b(b(b(y, z), x), x) - b(b(b(z, x), x), y);
}

Vec jacobi_sum(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    auto b = [&](const Vec& u, const Vec& v) { return a.multiply(u, v); };
    return b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y);
}

} // namespace

ClassifyReport classify(const Algebra& a) {
    ClassifyReport rep;
    const std::size_t n = a.dim();
    auto e = [&](std::size_t i) { return a.basis_vec(i); };

    auto fail = [](PropertyResult& r, std::initializer_list<std::size_t> witness) {
        if (!r.holds) return;
        r.holds = false;
        r.witness.assign(witness);
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rep.commutative && !(a.product(i, j) == a.product(j, i))) {
                fail(rep.commutative, {i, j});
            }
            if (rep.anticommutative && !(a.product(i, j) + a.product(j, i)).is_zero()) {
                fail(rep.anticommutative, {i, j});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Vec as = a.associator(e(i), e(j), e(k));
                if (rep.associative && !as.is_zero()) {
                    fail(rep.associative, {i, j, k});
                }
                // Alternativity == the associator alternates; over a field of
                // characteristic 0 that is equivalent to antisymmetry in the
                // two adjacent argument pairs on all basis triples.
                if (rep.alternative &&
                    (!(as + a.associator(e(j), e(i), e(k))).is_zero() ||
                     !(as + a.associator(e(i), e(k), e(j))).is_zero())) {
                    fail(rep.alternative, {i, j, k});
                }
                if (rep.jacobi && !jacobi_sum(a, e(i), e(j), e(k)).is_zero()) {
                    fail(rep.jacobi, {i, j, k});
                }
                if (rep.malcev && !malcev_defect(a, e(i), e(j), e(k)).is_zero()) {
                    fail(rep.malcev, {i, j, k});
                }
            }
        }
    }

    // The Mal'tsev identity is quadratic in its first argument, so basis
    // triples alone do not decide it; scan the polarization as well.
    if (rep.malcev) {
        for (std::size_t i1 = 0; i1 < n && rep.malcev; ++i1) {
            for (std::size_t i2 = i1; i2 < n && rep.malcev; ++i2) {
                for (std::size_t j = 0; j < n && rep.malcev; ++j) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Vec d = malcev_defect(a, e(i1) + e(i2), e(j), e(k)) -
                                      malcev_defect(a, e(i1), e(j), e(k)) -
                                      malcev_defect(a, e(i2), e(j), e(k));
                        if (!d.is_zero()) {
                            fail(rep.malcev, {i1, i2, j, k});
                            break;
                        }
                    }
                }
            }
        }
    }

    return rep;
}

} // namespace malt
