#pragma once

#include "triqfi/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace triqfi {

/// Tripartite density matrix. validate() checks Hermiticity (1e-12),
/// unit trace (1e-12) and positivity (min eigenvalue >= -1e-10).
struct DensityMatrix {
    DimensionSpec dims;
    Matrix matrix;

    void validate() const;
};

/// Seedable random source with documented algorithms: mt19937_64 underneath,
/// uniforms via 53-bit mantissa draw, Gaussians via Box-Muller. Parallel
/// ensembles derive per-task seeds as seed + index.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();   // [0,1)
    double gaussian();  // standard normal

    /// Weights on the simplex, Dirichlet(1,...,1): normalized -log(uniform).
    std::vector<double> dirichlet(int n);

    /// Haar-random pure state: normalized vector of complex Gaussians.
    Vector haar_pure(int dim);

  private:
    std::mt19937_64 engine_;
};

Vector ghz(int d);
Vector w3();

/// ((1-x-y)/8) I + x |GHZ><GHZ| + y |W><W| on three qubits.
DensityMatrix ghz_w_mix(double x, double y);

/// p |psi><psi| + (1-p) I/total for the given tripartite dims.
DensityMatrix white_noise_mix(const Vector& psi, double p, const DimensionSpec& dims);

Vector random_pure(int dim, std::uint64_t seed);

/// Full-rank by default; rank-deficient when `rank` < total.
DensityMatrix random_mixed(const DimensionSpec& dims, std::uint64_t seed, int rank = -1);

enum class Cut { A_BC, B_AC, AB_C, All };

/// Convex mixture of product states across the bipartitions a|bc, b|ac,
/// ab|c (cut weights Dirichlet when Cut::All); pair factors are Haar pure
/// states on the pair and may be entangled within it.
DensityMatrix biseparable_sample(const DimensionSpec& dims, std::uint64_t seed,
                                 int terms, Cut cut = Cut::All);

}  // namespace triqfi
