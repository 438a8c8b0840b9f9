#include "malt/catalog.hpp"

namespace malt::catalog {

namespace {

Algebra make_scalars() {
    StructureTable t(1, std::vector<Vec>(1, Vec(1)));
    t[0][0][0] = Scalar(1);
    return Algebra("scalars", {"e0"}, std::move(t));
}

BracketAlgebra make_non_malcev() {
    // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1; anticommutative but not
    // Mal'tsev, kept for negative tests. Labels are 1-based by convention.
    const std::size_t p = 3;
    StructureTable t(p, std::vector<Vec>(p, Vec(p)));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        t[i][j][k] = Scalar(1);
        t[j][i][k] = Scalar(-1);
    };
    set(0, 1, 2);
    set(1, 2, 0);
    set(0, 2, 0);
    return BracketAlgebra("non-malcev", {"e1", "e2", "e3"}, std::move(t));
}

std::vector<std::size_t> imaginary_indices(const Algebra& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!a.unit() || *a.unit() != i) idx.push_back(i);
    }
    return idx;
}

} // namespace

const Algebra& scalars() {
    static const Algebra a = make_scalars();
    return a;
}

const Algebra& complexes() {
    static const Algebra a = cayley_dickson(scalars(), Scalar(-1), "complexes");
    return a;
}

const Algebra& quaternions() {
    static const Algebra a = cayley_dickson(complexes(), Scalar(-1), "quaternions");
    return a;
}

const Algebra& octonions() {
    static const Algebra a = cayley_dickson(quaternions(), Scalar(-1), "octonions");
    return a;
}

const BracketAlgebra& quaternion_gamma() {
    static const BracketAlgebra g =
        derived_commutator_algebra(quaternions(), std::vector<std::size_t>{1, 2, 3}, "quaternion-gamma");
    return g;
}

const BracketAlgebra& octonion_gamma() {
    static const BracketAlgebra g = derived_commutator_algebra(
        octonions(), std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}, "octonion-gamma");
    return g;
}

const BracketAlgebra& non_malcev() {
    static const BracketAlgebra g = make_non_malcev();
    return g;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = [] {
        std::vector<Entry> e;
        e.push_back({"scalars", false, &scalars(), nullptr, imaginary_indices(scalars())});
        e.push_back({"complexes", false, &complexes(), nullptr, imaginary_indices(complexes())});
        e.push_back({"quaternions", false, &quaternions(), nullptr, imaginary_indices(quaternions())});
        e.push_back({"octonions", false, &octonions(), nullptr, imaginary_indices(octonions())});
        e.push_back({"quaternion-gamma", true, nullptr, &quaternion_gamma(), {}});
        e.push_back({"octonion-gamma", true, nullptr, &octonion_gamma(), {}});
        e.push_back({"non-malcev", true, nullptr, &non_malcev(), {}});
        return e;
    }();
    return all;
}

std::optional<Entry> find(const std::string& name) {
    for (const Entry& e : entries()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

} // namespace malt::catalog
