#include "triqfi/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace triqfi {

void DensityMatrix::validate() const {
    if (matrix.rows() != dims.total() || matrix.cols() != dims.total())
        throw std::invalid_argument("DensityMatrix: size does not match dims");
    const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12)
        throw std::invalid_argument("DensityMatrix: not Hermitian, max deviation " +
                                    std::to_string(herm));
    const Complex tr = matrix.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("DensityMatrix: trace is not 1, got " +
                                    std::to_string(tr.real()));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(min_eig));
}

double Rng::uniform() {
    // 53-bit mantissa draw from the top bits of one 64-bit output.
    return (engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    // Box-Muller; cosine branch only, one pair of uniforms per call.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> Rng::dirichlet(int n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        x = -std::log(u);
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

Vector Rng::haar_pure(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = gaussian();
        const double im = gaussian();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

Vector ghz(int d) {
    if (d < 2) throw std::invalid_argument("ghz: d must be >= 2");
    Vector v = Vector::Zero(d * d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        v((j * d + j) * d + j) = amp;
    return v;
}

Vector w3() {
    Vector v = Vector::Zero(8);
    const double amp = 1.0 / std::sqrt(3.0);
    v(0b100) = amp;
    v(0b010) = amp;
    v(0b001) = amp;
    return v;
}

DensityMatrix ghz_w_mix(double x, double y) {
    if (x < 0.0 || y < 0.0 || x + y > 1.0 + 1e-15)
        throw std::invalid_argument("ghz_w_mix: (x,y) outside the simplex");
    const Vector g = ghz(2);
    const Vector w = w3();
    DensityMatrix rho;
    rho.dims = DimensionSpec::cubic(2);
    rho.matrix = ((1.0 - x - y) / 8.0) * Matrix::Identity(8, 8) +
                 x * (g * g.adjoint()) + y * (w * w.adjoint());
    return rho;
}

DensityMatrix white_noise_mix(const Vector& psi, double p, const DimensionSpec& dims) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("white_noise_mix: p must be in [0,1]");
    if (psi.size() != dims.total())
        throw std::invalid_argument("white_noise_mix: state size does not match dims");
    DensityMatrix rho;
    rho.dims = dims;
    const int n = dims.total();
    rho.matrix = p * (psi * psi.adjoint()) +
                 ((1.0 - p) / n) * Matrix::Identity(n, n);
    return rho;
}

Vector random_pure(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return rng.haar_pure(dim);
}

DensityMatrix random_mixed(const DimensionSpec& dims, std::uint64_t seed, int rank) {
    const int n = dims.total();
    if (rank < 0) rank = n;
    if (rank < 1 || rank > n)
        throw std::invalid_argument("random_mixed: rank out of range");
    Rng rng(seed);
    const std::vector<double> weights = rng.dirichlet(rank);
    Matrix m = Matrix::Zero(n, n);
    for (int r = 0; r < rank; ++r) {
        const Vector psi = rng.haar_pure(n);
        m += weights[r] * (psi * psi.adjoint());
    }
    return {dims, m};
}

namespace {

// Embed factor_first (x) factor_second, where the "first" factor lives on the
// listed subsystems (in a<b<c order) and the second on the complement.
Matrix embed_cut(const Matrix& single, const Matrix& pair, const DimensionSpec& dims, Cut cut) {
    const int n = dims.total();
    Matrix out(n, n);
    auto idx = [&](int ia, int ib, int ic) { return (ia * dims.db + ib) * dims.dc + ic; };
    for (int ia = 0; ia < dims.da; ++ia)
        for (int ib = 0; ib < dims.db; ++ib)
            for (int ic = 0; ic < dims.dc; ++ic)
                for (int ja = 0; ja < dims.da; ++ja)
                    for (int jb = 0; jb < dims.db; ++jb)
                        for (int jc = 0; jc < dims.dc; ++jc) {
                            Complex v;
                            switch (cut) {
                                case Cut::A_BC:
                                    v = single(ia, ja) * pair(ib * dims.dc + ic, jb * dims.dc + jc);
                                    break;
                                case Cut::B_AC:
                                    v = single(ib, jb) * pair(ia * dims.dc + ic, ja * dims.dc + jc);
                                    break;
                                case Cut::AB_C:
                                default:
                                    v = single(ic, jc) * pair(ia * dims.db + ib, ja * dims.db + jb);
                                    break;
                            }
                            out(idx(ia, ib, ic), idx(ja, jb, jc)) = v;
                        }
    return out;
}

int single_dim(const DimensionSpec& dims, Cut cut) {
    switch (cut) {
        case Cut::A_BC: return dims.da;
        case Cut::B_AC: return dims.db;
        default:        return dims.dc;
    }
}

}  // namespace

DensityMatrix biseparable_sample(const DimensionSpec& dims, std::uint64_t seed,
                                 int terms, Cut cut) {
    if (terms < 1) throw std::invalid_argument("biseparable_sample: terms must be >= 1");
    Rng rng(seed);

    std::vector<Cut> cuts;
    std::vector<double> cut_weights;
    if (cut == Cut::All) {
        cuts = {Cut::A_BC, Cut::B_AC, Cut::AB_C};
        cut_weights = rng.dirichlet(3);
    } else {
        cuts = {cut};
        cut_weights = {1.0};
    }

    const int n = dims.total();
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        const int sd = single_dim(dims, cuts[ci]);
        const int pd = n / sd;
        const std::vector<double> term_weights = rng.dirichlet(terms);
        for (int t = 0; t < terms; ++t) {
            const Vector s = rng.haar_pure(sd);
            const Vector p = rng.haar_pure(pd);
            const Matrix single = s * s.adjoint();
            const Matrix pair = p * p.adjoint();
            m += cut_weights[ci] * term_weights[t] * embed_cut(single, pair, dims, cuts[ci]);
        }
    }
    return {dims, m};
}

}  // namespace triqfi
