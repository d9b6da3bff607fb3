#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace triqfi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Local dimensions of the three subsystems a, b, c.
struct DimensionSpec {
    int da = 2;
    int db = 2;
    int dc = 2;

    int total() const { return da * db * dc; }

    static DimensionSpec cubic(int d) { return {d, d, d}; }

    bool operator==(const DimensionSpec&) const = default;
};

// Bitmask selecting which subsystems to keep in a partial trace.
inline constexpr unsigned kKeepA = 1u << 0;
inline constexpr unsigned kKeepB = 1u << 1;
inline constexpr unsigned kKeepC = 1u << 2;
inline constexpr unsigned kKeepAll = kKeepA | kKeepB | kKeepC;

bool is_hermitian(const Matrix& m, double tol = 1e-12);

/// Kronecker product: result[(i*dB+k),(j*dB+l)] = A(i,j)*B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out the subsystems not present in `keep`. Result dimension is the
/// product of the kept local dimensions; the trace is preserved.
Matrix partial_trace(const Matrix& rho, const DimensionSpec& dims, unsigned keep);

struct Spectrum {
    RealVector eigenvalues;  // descending
    Matrix eigenvectors;     // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws std::invalid_argument if the input is not Hermitian to 1e-12.
Spectrum hermitian_eig(const Matrix& m);

/// Singular values in descending order (rectangular inputs allowed).
RealVector singular_values(const Matrix& m);

}  // namespace triqfi
