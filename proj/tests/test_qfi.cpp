#include "triqfi/qfi.hpp"
#include "triqfi/states.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace triqfi;

namespace {

const Matrix kSigmaZ = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}();

const Matrix kSigmaX = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}();

std::vector<CollectiveObservable> signed_z_family(int sa, int sb, int sc) {
    const DimensionSpec dims = DimensionSpec::cubic(2);
    return {collective(double(sa) * kSigmaZ, double(sb) * kSigmaZ, double(sc) * kSigmaZ, dims)};
}

}  // namespace

TEST_CASE("spectral QFI trivial cases") {
    CHECK(qfi_spectral(0.5 * Matrix::Identity(2, 2), kSigmaZ) == doctest::Approx(0.0));

    Matrix proj0 = Matrix::Zero(2, 2);
    proj0(0, 0) = 1.0;
    CHECK(qfi_spectral(proj0, kSigmaZ) == doctest::Approx(0.0));

    // |+><+| against sigma_z: equals the pure variance 1
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(qfi_spectral(plus * plus.adjoint(), kSigmaZ) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pure QFI examples") {
    Vector zero(2);
    zero << 1.0, 0.0;
    CHECK(qfi_pure(zero, kSigmaX) == doctest::Approx(1.0));

    // GHZ with collective sigma_z (+,+,+): <Jz^2> = 9, <Jz> = 0
    const auto family = signed_z_family(+1, +1, +1);
    CHECK(qfi_pure(ghz(2), family[0].total) == doctest::Approx(9.0).epsilon(1e-12));

    // eigenstate has zero variance
    const Spectrum spec = hermitian_eig(kSigmaX);
    CHECK(qfi_pure(spec.eigenvectors.col(0), kSigmaX) == doctest::Approx(0.0));
}

TEST_CASE("pure QFI rejects unnormalized input") {
    Vector v(2);
    v << 1.0, 1.0;
    CHECK_THROWS_AS(qfi_pure(v, kSigmaX), std::invalid_argument);
}

TEST_CASE("SLD vanishes when rho and A commute") {
    Rng rng(41);
    CHECK(sld(0.5 * Matrix::Identity(2, 2), test::random_hermitian(2, rng))
              .cwiseAbs().maxCoeff() < 1e-12);
    const Matrix rho = test::random_density(3, rng);
    CHECK(sld(rho, Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("SLD reconstructs the spectral QFI and satisfies its equation") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix rho = test::random_density(3, rng);
        const Matrix a = test::random_hermitian(3, rng);
        const Matrix l = sld(rho, a);
        CHECK(is_hermitian(l, 1e-9));

        const double via_sld = 0.25 * (rho * l * l).trace().real();
        CHECK(via_sld == doctest::Approx(qfi_spectral(rho, a)).epsilon(1e-9));

        // i[rho, A] = (L rho + rho L)/2 (full rank here, support is everything)
        const Complex i(0.0, 1.0);
        const Matrix lhs = i * (rho * a - a * rho);
        const Matrix rhs = 0.5 * (l * rho + rho * l);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("white-noise closed form") {
    const Vector g = ghz(2);
    const auto family = signed_z_family(+1, +1, +1);
    const Matrix& a = family[0].total;

    CHECK(qfi_white_noise(g, a, 1.0, 2, 3) == doctest::Approx(qfi_pure(g, a)));
    CHECK(qfi_white_noise(g, a, 0.0, 2, 3) == doctest::Approx(0.0));

    // p = 0.5: 0.25/0.625 * 9 = 3.6, and the spectral value on the mixed state agrees
    const double closed = qfi_white_noise(g, a, 0.5, 2, 3);
    CHECK(closed == doctest::Approx(3.6).epsilon(1e-12));
    const DensityMatrix rho = white_noise_mix(g, 0.5, DimensionSpec::cubic(2));
    CHECK(closed == doctest::Approx(qfi_spectral(rho.matrix, a)).epsilon(1e-9));

    CHECK_THROWS_AS(qfi_white_noise(g, a, 1.5, 2, 3), std::invalid_argument);
}

TEST_CASE("spectral equals pure variance on random pure states") {
    Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const Vector psi = rng.haar_pure(4);
        const Matrix a = test::random_hermitian(4, rng);
        CHECK(qfi_spectral(psi * psi.adjoint(), a) ==
              doctest::Approx(qfi_pure(psi, a)).epsilon(1e-9));
    }
}

TEST_CASE("convexity spot check") {
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix r1 = test::random_density(4, rng);
        const Matrix r2 = test::random_density(4, rng);
        const Matrix a = test::random_hermitian(4, rng);
        const double t = rng.uniform();
        const double mixed = qfi_spectral(t * r1 + (1.0 - t) * r2, a);
        const double convex = t * qfi_spectral(r1, a) + (1.0 - t) * qfi_spectral(r2, a);
        CHECK(mixed <= convex + 1e-9);
    }
}

TEST_CASE("additivity spot check") {
    Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix ra = test::random_density(2, rng);
        const Matrix rb = test::random_density(3, rng);
        const Matrix a = test::random_hermitian(2, rng);
        const Matrix b = test::random_hermitian(3, rng);
        const Matrix joint = kron(a, Matrix::Identity(3, 3)) + kron(Matrix::Identity(2, 2), b);
        const double lhs = qfi_spectral(kron(ra, rb), joint);
        const double rhs = qfi_spectral(ra, a) + qfi_spectral(rb, b);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("unitary covariance") {
    Rng rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const Matrix rho = test::random_density(4, rng);
        const Matrix a = test::random_hermitian(4, rng);
        // unitary from the eigenvectors of an unrelated Hermitian matrix
        const Matrix u = hermitian_eig(test::random_hermitian(4, rng)).eigenvectors;
        const double original = qfi_spectral(rho, a);
        const double rotated = qfi_spectral(u * rho * u.adjoint(), u * a * u.adjoint());
        CHECK(rotated == doctest::Approx(original).epsilon(1e-9));
    }
}

TEST_CASE("fisher_sum reuses one decomposition and matches per-term QFI") {
    Rng rng(67);
    const DimensionSpec dims = DimensionSpec::cubic(2);
    const DensityMatrix rho = random_mixed(dims, 99);

    std::vector<CollectiveObservable> family;
    for (const auto& m : gell_mann_basis(2).matrices)
        family.push_back(collective(m, m, m, dims));

    std::vector<double> contributions;
    const double sum = fisher_sum(rho.matrix, family, contributions);
    double direct = 0.0;
    for (const auto& obs : family) direct += qfi_spectral(rho.matrix, obs.total);
    CHECK(sum == doctest::Approx(direct).epsilon(1e-10));
    CHECK(contributions.size() == family.size());

    // maximally mixed three-qubit state: everything vanishes
    const Matrix mixed = Matrix::Identity(8, 8) / 8.0;
    CHECK(fisher_sum(mixed, family) == doctest::Approx(0.0));
}

TEST_CASE("GHZ signed Pauli family sums to 15") {
    const DimensionSpec dims = DimensionSpec::cubic(2);
    const Vector g = ghz(2);
    std::vector<CollectiveObservable> family;
    for (const auto& m : pauli_basis().matrices)
        family.push_back(collective(m, m, m, dims));
    // 3 + 3 + 9 by direct variance computation
    CHECK(fisher_sum(g * g.adjoint(), family) == doctest::Approx(15.0).epsilon(1e-10));
}

TEST_CASE("pure W with Example-1 family matches f(0,1) + 10") {
    const auto family = example1_family();
    const Vector w = w3();
    const double sum = fisher_sum(w * w.adjoint(), family);
    CHECK(sum == doctest::Approx(632.0 / 36.0).epsilon(1e-9));
}
