#include "triqfi/operators.hpp"

#include <cmath>

namespace triqfi {

std::string GellMannLabel::str() const {
    switch (kind) {
        case Kind::Sym:     return "t(" + std::to_string(j) + "," + std::to_string(k) + ")";
        case Kind::Antisym: return "s(" + std::to_string(j) + "," + std::to_string(k) + ")";
        case Kind::Diag:    return "diag(" + std::to_string(j) + ")";
    }
    return "?";
}

LocalBasis gell_mann_basis(int d) {
    if (d < 2) throw std::invalid_argument("gell_mann_basis: d must be >= 2");

    LocalBasis basis;
    basis.d = d;
    const Complex i(0.0, 1.0);

    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.matrices.push_back(m);
            basis.labels.push_back({GellMannLabel::Kind::Sym, j, k});
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = -i;
            m(k, j) = i;
            basis.matrices.push_back(m);
            basis.labels.push_back({GellMannLabel::Kind::Antisym, j, k});
        }
    for (int l = 1; l < d; ++l) {
        Matrix m = Matrix::Zero(d, d);
        const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -norm * l;
        basis.matrices.push_back(m);
        basis.labels.push_back({GellMannLabel::Kind::Diag, l, 0});
    }
    return basis;
}

LocalBasis pauli_basis() { return gell_mann_basis(2); }

CollectiveObservable collective(const Matrix& a, const Matrix& b, const Matrix& c,
                                const DimensionSpec& dims) {
    if (a.rows() != dims.da || b.rows() != dims.db || c.rows() != dims.dc ||
        a.cols() != dims.da || b.cols() != dims.db || c.cols() != dims.dc)
        throw std::invalid_argument("collective: local matrix size does not match dims");

    CollectiveObservable obs;
    obs.dims = dims;
    obs.a = a;
    obs.b = b;
    obs.c = c;
    const Matrix ia = Matrix::Identity(dims.da, dims.da);
    const Matrix ib = Matrix::Identity(dims.db, dims.db);
    const Matrix ic = Matrix::Identity(dims.dc, dims.dc);
    obs.total = kron(kron(a, ib), ic) + kron(kron(ia, b), ic) + kron(kron(ia, ib), c);
    return obs;
}

std::array<SignPattern, 4> signed_pauli_families() {
    return {{{+1, +1, +1}, {+1, +1, -1}, {+1, -1, +1}, {-1, +1, +1}}};
}

std::vector<CollectiveObservable> gell_mann_family(int d) {
    const LocalBasis basis = gell_mann_basis(d);
    const DimensionSpec dims = DimensionSpec::cubic(d);
    std::vector<CollectiveObservable> family;
    family.reserve(basis.matrices.size());
    for (const auto& m : basis.matrices)
        family.push_back(collective(m, m, m, dims));
    return family;
}

std::vector<CollectiveObservable> example1_family() {
    const LocalBasis pauli = pauli_basis();
    const DimensionSpec dims = DimensionSpec::cubic(2);
    const Matrix& sx = pauli.matrices[0];
    const Matrix& sy = pauli.matrices[1];
    const Matrix& sz = pauli.matrices[2];
    return {
        collective(sx, sx, sx, dims),
        collective(sy, sy, sy, dims),
        collective(sz, sz, -sz, dims),
    };
}

}  // namespace triqfi
