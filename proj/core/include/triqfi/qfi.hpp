#pragma once

#include "triqfi/linalg.hpp"
#include "triqfi/operators.hpp"

#include <span>
#include <vector>

namespace triqfi {

// Eigenvalue-pair support cutoff: terms with lambda_k + lambda_l below this
// are dropped from the spectral sum and the SLD.
inline constexpr double kSupportCutoff = 1e-12;

/// QFI from a precomputed spectrum of rho:
///   F = sum_{k,l : l_k+l_l > cutoff} (l_k-l_l)^2 / (2(l_k+l_l)) |<k|A|l>|^2.
double qfi_from_spectrum(const Spectrum& spec, const Matrix& a);

/// Spectral-formula QFI of a density matrix with respect to observable a.
double qfi_spectral(const Matrix& rho, const Matrix& a);

/// Pure-state QFI: the variance <A^2> - <A>^2.
double qfi_pure(const Vector& psi, const Matrix& a);

/// Symmetric logarithmic derivative, defined on the support of rho:
///   L = sum_{k,l} 2i (l_k - l_l)/(l_k + l_l) <k|A|l> |k><l|,
/// so that (1/4) tr(rho L^2) equals the spectral QFI.
Matrix sld(const Matrix& rho, const Matrix& a);

/// Closed form for a pure N-qudit state mixed with white noise:
///   F(p psi + (1-p) I/d^N, A) = p^2 / (p + 2(1-p) d^-N) * F(psi, A).
double qfi_white_noise(const Vector& psi, const Matrix& a, double p, int d, int n_parties);

/// Sum of spectral QFI over a family of collective observables, reusing a
/// single eigendecomposition of rho.
double fisher_sum(const Matrix& rho, std::span<const CollectiveObservable> family);

/// Same, with per-observable contributions written to `contributions`.
double fisher_sum(const Matrix& rho, std::span<const CollectiveObservable> family,
                  std::vector<double>& contributions);

}  // namespace triqfi
