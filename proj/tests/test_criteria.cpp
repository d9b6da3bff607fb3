#include "triqfi/criteria.hpp"
#include "triqfi/scan.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace triqfi;

TEST_CASE("lemma bounds") {
    CHECK(lemma_bounds(2) == std::pair{2.0, 8.0});
    const auto [f1, f2] = lemma_bounds(3);
    CHECK(f1 == doctest::Approx(4.0));
    CHECK(f2 == doctest::Approx(40.0 / 3.0));
    CHECK(lemma_bounds(2).first + lemma_bounds(2).second == doctest::Approx(10.0));
    for (int d : {2, 3, 4, 7}) {
        const auto [a, b] = lemma_bounds(d);
        CHECK(a + b == doctest::Approx(2.0 * (d - 1) * (3.0 * d + 4.0) / d));
    }
    CHECK_THROWS_AS(lemma_bounds(1), std::invalid_argument);
}

TEST_CASE("corollary1 on the maximally mixed state") {
    const int n = 8;
    const DensityMatrix rho{DimensionSpec::cubic(2), Matrix::Identity(n, n) / double(n)};
    const CriterionReport r = corollary1(rho);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.threshold == doctest::Approx(10.0));
}

TEST_CASE("corollary1 margin matches the closed form g") {
    for (int d : {2, 3}) {
        for (double p : {0.1, 0.5, 0.73, 0.95}) {
            const DensityMatrix rho = white_noise_mix(ghz(d), p, DimensionSpec::cubic(d));
            CHECK(corollary1(rho).margin == doctest::Approx(closed_form_g(d, p)).epsilon(1e-8));
        }
    }
}

TEST_CASE("corollary2 on pure GHZ detects with statistic 15") {
    const DensityMatrix rho = white_noise_mix(ghz(2), 1.0, DimensionSpec::cubic(2));
    const CriterionReport r = corollary2(rho, SignMode::FixedBest);
    CHECK(r.statistic == doctest::Approx(15.0).epsilon(1e-9));
    CHECK(r.verdict == Verdict::Detected);
}

TEST_CASE("corollary2 Example-1 margin matches f on the GHZ/W simplex") {
    for (double x : {0.0, 0.2, 0.5}) {
        for (double y : {0.0, 0.3, 0.5}) {
            if (x + y > 1.0) continue;
            const CriterionReport r = corollary2(ghz_w_mix(x, y), SignMode::Example1);
            CHECK(r.margin == doctest::Approx(closed_form_f(x, y)).epsilon(1e-8));
        }
    }
}

TEST_CASE("corollary2 sign modes are ordered") {
    const DensityMatrix rho = ghz_w_mix(0.2, 0.5);
    const double ex = corollary2(rho, SignMode::Example1).statistic;
    const double fixed = corollary2(rho, SignMode::FixedBest).statistic;
    const double per_op = corollary2(rho, SignMode::PerOperatorBest).statistic;
    CHECK(per_op >= fixed - 1e-12);
    CHECK(per_op >= ex - 1e-12);
}

TEST_CASE("corollary2 rejects non-qubit states") {
    const int n = 27;
    const DensityMatrix rho{DimensionSpec::cubic(3), Matrix::Identity(n, n) / double(n)};
    CHECK_THROWS_AS(corollary2(rho), std::invalid_argument);
}

TEST_CASE("theorem1 specializes to the corollaries") {
    const DensityMatrix rho = ghz_w_mix(0.15, 0.6);

    // Pauli family with the Example-1 signs and bounds (2, 8)
    const auto family = example1_family();
    const CriterionReport t1 = theorem1_margin(rho, family, 2.0, 8.0);
    const CriterionReport c2 = corollary2(rho, SignMode::Example1);
    CHECK(t1.margin == doctest::Approx(c2.margin).epsilon(1e-10));

    // Gell-Mann family with lemma bounds reproduces corollary1
    const auto gm = gell_mann_family(2);
    const auto [f1, f2] = lemma_bounds(2);
    CHECK(theorem1_margin(rho, gm, f1, f2).margin ==
          doctest::Approx(corollary1(rho).margin).epsilon(1e-10));
}

TEST_CASE("theorem1 with a trivial family") {
    // pure eigenstate of the single observable, zero bounds: margin 0
    Matrix sz(2, 2);
    sz << 1, 0, 0, -1;
    const DimensionSpec dims = DimensionSpec::cubic(2);
    Vector v000 = Vector::Zero(8);
    v000(0) = 1.0;
    const DensityMatrix rho{dims, v000 * v000.adjoint()};
    std::vector<CollectiveObservable> family{collective(sz, sz, sz, dims)};
    const CriterionReport r = theorem1_margin(rho, family, 0.0, 0.0);
    CHECK(r.margin == doctest::Approx(0.0));
    CHECK(r.verdict == Verdict::Inconclusive);  // ties are not detections
}

TEST_CASE("theorem2 defaults agree with theorem1 at equal dims") {
    const DensityMatrix rho = ghz_w_mix(0.4, 0.3);
    const auto gm = gell_mann_family(2);
    const auto [f1, f2] = lemma_bounds(2);
    CHECK(theorem2_margin(rho, gm).margin ==
          doctest::Approx(theorem1_margin(rho, gm, f1, f2).margin).epsilon(1e-12));
}

TEST_CASE("theorem2 on pure GHZ with Pauli family has margin 5") {
    const DensityMatrix rho = white_noise_mix(ghz(2), 1.0, DimensionSpec::cubic(2));
    std::vector<CollectiveObservable> family;
    for (const auto& m : pauli_basis().matrices)
        family.push_back(collective(m, m, m, DimensionSpec::cubic(2)));
    const CriterionReport r =
        theorem2_margin(rho, family, LocalBounds{2, 2, 2}, PairBounds{8, 8, 8});
    CHECK(r.margin == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("theorem2 requires bounds for unequal dims") {
    const DimensionSpec dims{2, 2, 3};
    const int n = dims.total();
    const DensityMatrix rho{dims, Matrix::Identity(n, n) / double(n)};
    Matrix sz2(2, 2);
    sz2 << 1, 0, 0, -1;
    Matrix sz3 = Matrix::Zero(3, 3);
    sz3(0, 0) = 1.0; sz3(1, 1) = -1.0;
    std::vector<CollectiveObservable> family{collective(sz2, sz2, sz3, dims)};
    CHECK_THROWS_AS(theorem2_margin(rho, family), std::invalid_argument);
    // explicit bounds work
    const CriterionReport r =
        theorem2_margin(rho, family, LocalBounds{2, 2, 4}, PairBounds{8, 8, 8});
    CHECK(r.margin == doctest::Approx(-12.0));
}

TEST_CASE("closed form values") {
    CHECK(closed_form_f(0.0, 0.0) == doctest::Approx(-10.0));
    CHECK(std::abs(closed_form_f(0.0, 0.647236)) < 1e-4);

    const double root2 = (3.0 + std::sqrt(33.0)) / 12.0;
    CHECK(closed_form_g(2, root2) == doctest::Approx(0.0).epsilon(1e-9));
    for (int d : {2, 3, 5})
        CHECK(closed_form_g(d, 0.0) ==
              doctest::Approx(-2.0 * (d - 1) * (3.0 * d + 4.0) / d));
}

TEST_CASE("correlation tensor of GHZ and the maximally mixed state") {
    const int d = 2;
    const DensityMatrix mixed{DimensionSpec::cubic(2), Matrix::Identity(8, 8) / 8.0};
    const CorrelationTensor t0 = correlation_tensor(mixed, d);
    for (double v : t0.t) CHECK(std::abs(v) < 1e-12);

    const DensityMatrix g = white_noise_mix(ghz(2), 1.0, DimensionSpec::cubic(2));
    const CorrelationTensor t = correlation_tensor(g, d);
    // direct Pauli products: <xxx> = 1, <xyy> = <yxy> = <yyx> = -1, <zzz> = 0
    CHECK(t.at(0, 0, 0) == doctest::Approx(1.0));
    CHECK(t.at(0, 1, 1) == doctest::Approx(-1.0));
    CHECK(t.at(1, 0, 1) == doctest::Approx(-1.0));
    CHECK(t.at(1, 1, 0) == doctest::Approx(-1.0));
    CHECK(t.at(2, 2, 2) == doctest::Approx(0.0));
}

TEST_CASE("concurrence bound report") {
    const DensityMatrix mixed{DimensionSpec::cubic(2), Matrix::Identity(8, 8) / 8.0};
    const CriterionReport r = concurrence_bound(mixed, 2);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.threshold == doctest::Approx(0.5));
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("knorm unfolding dimensions and Ky Fan monotonicity") {
    const CorrelationTensor t =
        correlation_tensor(ghz_w_mix(0.3, 0.4), 2);
    const Eigen::MatrixXd u = t.unfold(0);
    CHECK(u.rows() == 3);
    CHECK(u.cols() == 9);

    Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix rho = random_mixed(DimensionSpec::cubic(2), 500 + trial);
        double prev = 0.0;
        for (int k = 1; k <= 3; ++k) {
            const double stat = knorm_criterion(rho, 2, k).statistic;
            CHECK(stat >= prev - 1e-12);
            prev = stat;
        }
    }
    CHECK_THROWS_AS(knorm_criterion(ghz_w_mix(0, 0), 2, 4), std::invalid_argument);
}

TEST_CASE("Lemma 2 equality witness reaches 8") {
    // two-qubit pure state with t11 = -1, t22 = t33 = 1: (|00> - |11>)/sqrt(2)
    Vector phi = Vector::Zero(4);
    phi(0) = 1.0 / std::sqrt(2.0);
    phi(3) = -1.0 / std::sqrt(2.0);
    const LocalBasis pauli = pauli_basis();
    double sum = 0.0;
    for (const auto& s : pauli.matrices) {
        const Matrix pair = kron(s, Matrix::Identity(2, 2)) + kron(Matrix::Identity(2, 2), s);
        sum += qfi_pure(phi, pair);
    }
    CHECK(sum == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("Lemma 3 equality on random pure qudit states") {
    Rng rng(73);
    for (int d : {2, 3, 4}) {
        const LocalBasis basis = gell_mann_basis(d);
        for (int trial = 0; trial < 20; ++trial) {
            const Vector psi = rng.haar_pure(d);
            double sum = 0.0;
            for (const auto& m : basis.matrices) sum += qfi_pure(psi, m);
            CHECK(sum == doctest::Approx(2.0 * (d - 1)).epsilon(1e-9));
        }
    }
}

TEST_CASE("Lemma 4 equality at the maximally entangled state") {
    for (int d : {2, 3}) {
        Vector phi = Vector::Zero(d * d);
        for (int m = 0; m < d; ++m) phi(m * d + m) = 1.0 / std::sqrt(double(d));
        const LocalBasis basis = gell_mann_basis(d);
        double sum = 0.0;
        for (const auto& s : basis.matrices) {
            const Matrix pair =
                kron(s, Matrix::Identity(d, d)) + kron(Matrix::Identity(d, d), s);
            sum += qfi_pure(phi, pair);
        }
        CHECK(sum == doctest::Approx(4.0 * (d - 1) * (d + 2) / double(d)).epsilon(1e-9));
    }
}

TEST_CASE("per-operator sign maximization is not sound on biseparable states") {
    // rho_b (x) |Psi+><Psi+| across the b|ac cut: each Pauli admits a sign
    // class whose pair QFI on |Psi+> is 4, so the per-operator statistic is
    // 12 > 10 even though the state is biseparable. This is why the
    // per-operator mode is excluded from the soundness acceptance gate.
    const DimensionSpec dims = DimensionSpec::cubic(2);
    Vector psi_plus = Vector::Zero(4);
    psi_plus(1) = 1.0 / std::sqrt(2.0);  // |01>
    psi_plus(2) = 1.0 / std::sqrt(2.0);  // |10>
    const Matrix pair = psi_plus * psi_plus.adjoint();
    const Matrix local = 0.5 * Matrix::Identity(2, 2);

    // assemble rho_b (x) rho_ac in a,b,c index order
    Matrix rho = Matrix::Zero(8, 8);
    auto idx = [](int a, int b, int c) { return (a * 2 + b) * 2 + c; };
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int ic = 0; ic < 2; ++ic)
                for (int ja = 0; ja < 2; ++ja)
                    for (int jb = 0; jb < 2; ++jb)
                        for (int jc = 0; jc < 2; ++jc)
                            rho(idx(ia, ib, ic), idx(ja, jb, jc)) =
                                local(ib, jb) * pair(ia * 2 + ic, ja * 2 + jc);

    const DensityMatrix state{dims, rho};
    state.validate();
    const CriterionReport r = corollary2(state, SignMode::PerOperatorBest);
    CHECK(r.statistic == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(r.verdict == Verdict::Detected);  // false positive, by construction
}

TEST_CASE("scan_threshold recovers the closed-form root and reports no crossing") {
    const ScanResult r = scan_threshold(
        [](double p) { return closed_form_g(2, p); }, "p", 0.0, 1.0, 1e-8);
    CHECK(r.crossed);
    CHECK(r.threshold == doctest::Approx((3.0 + std::sqrt(33.0)) / 12.0).epsilon(1e-7));

    const ScanResult none = scan_threshold(
        [](double) { return -1.0; }, "p", 0.0, 1.0);
    CHECK_FALSE(none.crossed);
}

TEST_CASE("scan result is bracket independent for monotone margins") {
    auto margin = [](double p) { return closed_form_g(2, p); };
    const double tol = 1e-6;
    const double t1 = scan_threshold(margin, "p", 0.0, 1.0, tol).threshold;
    const double t2 = scan_threshold(margin, "p", 0.3, 0.95, tol).threshold;
    CHECK(std::abs(t1 - t2) <= 2.0 * tol);
}
