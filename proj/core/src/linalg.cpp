#include "triqfi/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace triqfi {

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    Matrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& rho, const DimensionSpec& dims, unsigned keep) {
    if (rho.rows() != dims.total() || rho.cols() != dims.total())
        throw std::invalid_argument("partial_trace: matrix size does not match dims");

    const int d[3] = {dims.da, dims.db, dims.dc};
    const bool kept[3] = {(keep & kKeepA) != 0, (keep & kKeepB) != 0, (keep & kKeepC) != 0};

    int dim_keep = 1, dim_trace = 1;
    for (int s = 0; s < 3; ++s) (kept[s] ? dim_keep : dim_trace) *= d[s];

    (void)dim_trace;
    Matrix out = Matrix::Zero(dim_keep, dim_keep);

    // Composite index (ia, ib, ic) -> ((ia*db)+ib)*dc+ic; kept indices are
    // packed in a..c order, traced indices summed diagonally.
    auto full_index = [&](const int idx[3]) {
        return (idx[0] * d[1] + idx[1]) * d[2] + idx[2];
    };
    auto kept_index = [&](const int idx[3]) {
        int r = 0;
        for (int s = 0; s < 3; ++s)
            if (kept[s]) r = r * d[s] + idx[s];
        return r;
    };

    int row[3], col[3], tr[3];
    for (int ra = 0; ra < (kept[0] ? d[0] : 1); ++ra)
        for (int rb = 0; rb < (kept[1] ? d[1] : 1); ++rb)
            for (int rc = 0; rc < (kept[2] ? d[2] : 1); ++rc)
                for (int ca = 0; ca < (kept[0] ? d[0] : 1); ++ca)
                    for (int cb = 0; cb < (kept[1] ? d[1] : 1); ++cb)
                        for (int cc = 0; cc < (kept[2] ? d[2] : 1); ++cc) {
                            Complex sum = 0.0;
                            for (int ta = 0; ta < (kept[0] ? 1 : d[0]); ++ta)
                                for (int tb = 0; tb < (kept[1] ? 1 : d[1]); ++tb)
                                    for (int tc = 0; tc < (kept[2] ? 1 : d[2]); ++tc) {
                                        tr[0] = ta; tr[1] = tb; tr[2] = tc;
                                        int rk[3] = {ra, rb, rc}, ck[3] = {ca, cb, cc};
                                        for (int s = 0; s < 3; ++s)
                                            if (!kept[s]) { rk[s] = tr[s]; ck[s] = tr[s]; }
                                        row[0] = rk[0]; row[1] = rk[1]; row[2] = rk[2];
                                        col[0] = ck[0]; col[1] = ck[1]; col[2] = ck[2];
                                        sum += rho(full_index(row), full_index(col));
                                    }
                            int rk[3] = {ra, rb, rc}, ck[3] = {ca, cb, cc};
                            out(kept_index(rk), kept_index(ck)) = sum;
                        }
    return out;
}

Spectrum hermitian_eig(const Matrix& m) {
    if (!is_hermitian(m, 1e-12 * (1.0 + m.cwiseAbs().maxCoeff())))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");

    const Eigen::Index n = m.rows();
    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n, n);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index i = 0; i < n; ++i) {
        spec.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        spec.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return spec;
}

RealVector singular_values(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

}  // namespace triqfi
