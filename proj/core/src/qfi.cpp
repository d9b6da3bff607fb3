#include "triqfi/qfi.hpp"

#include <cmath>
#include <string>

namespace triqfi {

namespace {

double clamp_nonnegative(double value) {
    if (value < 0.0) {
        if (value < -1e-12)
            throw std::runtime_error("qfi: negative value beyond round-off: " + std::to_string(value));
        return 0.0;
    }
    return value;
}

void check_density_matrix(const Matrix& rho) {
    if (!is_hermitian(rho, 1e-10))
        throw std::invalid_argument("qfi: rho is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw std::invalid_argument("qfi: rho is not trace one");
}

}  // namespace

double qfi_from_spectrum(const Spectrum& spec, const Matrix& a) {
    if (!is_hermitian(a, 1e-10 * (1.0 + a.cwiseAbs().maxCoeff())))
        throw std::invalid_argument("qfi: observable is not Hermitian");

    // Rotate A into the eigenbasis of rho.
    const Matrix a_eig = spec.eigenvectors.adjoint() * a * spec.eigenvectors;
    const Eigen::Index n = spec.eigenvalues.size();

    double sum = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
            const double lk = spec.eigenvalues(k), ll = spec.eigenvalues(l);
            if (lk + ll <= kSupportCutoff) continue;
            const double diff = lk - ll;
            sum += diff * diff / (2.0 * (lk + ll)) * std::norm(a_eig(k, l));
        }
    return clamp_nonnegative(sum);
}

double qfi_spectral(const Matrix& rho, const Matrix& a) {
    check_density_matrix(rho);
    if (rho.rows() != a.rows())
        throw std::invalid_argument("qfi: dimension mismatch between rho and observable");
    return qfi_from_spectrum(hermitian_eig(rho), a);
}

double qfi_pure(const Vector& psi, const Matrix& a) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("qfi_pure: state is not normalized");
    const Vector apsi = a * psi;
    const double mean = (psi.adjoint() * apsi)(0).real();
    const double second = apsi.squaredNorm();
    return clamp_nonnegative(second - mean * mean);
}

Matrix sld(const Matrix& rho, const Matrix& a) {
    check_density_matrix(rho);
    const Spectrum spec = hermitian_eig(rho);
    const Matrix a_eig = spec.eigenvectors.adjoint() * a * spec.eigenvectors;
    const Eigen::Index n = spec.eigenvalues.size();
    const Complex i(0.0, 1.0);

    Matrix l_eig = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index m = 0; m < n; ++m) {
            const double lk = spec.eigenvalues(k), lm = spec.eigenvalues(m);
            if (lk + lm <= kSupportCutoff) continue;
            l_eig(k, m) = 2.0 * i * (lk - lm) / (lk + lm) * a_eig(k, m);
        }
    return spec.eigenvectors * l_eig * spec.eigenvectors.adjoint();
}

double qfi_white_noise(const Vector& psi, const Matrix& a, double p, int d, int n_parties) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("qfi_white_noise: p must be in [0,1]");
    const double dim = std::pow(static_cast<double>(d), n_parties);
    if (a.rows() != static_cast<Eigen::Index>(std::llround(dim)))
        throw std::invalid_argument("qfi_white_noise: observable size is not d^N");
    if (p == 0.0) return 0.0;
    const double prefactor = p * p / (p + 2.0 * (1.0 - p) / dim);
    return prefactor * qfi_pure(psi, a);
}

double fisher_sum(const Matrix& rho, std::span<const CollectiveObservable> family) {
    std::vector<double> unused;
    return fisher_sum(rho, family, unused);
}

double fisher_sum(const Matrix& rho, std::span<const CollectiveObservable> family,
                  std::vector<double>& contributions) {
    check_density_matrix(rho);
    const Spectrum spec = hermitian_eig(rho);
    contributions.clear();
    double sum = 0.0;
    for (const auto& obs : family) {
        const double f = qfi_from_spectrum(spec, obs.total);
        contributions.push_back(f);
        sum += f;
    }
    return sum;
}

}  // namespace triqfi
