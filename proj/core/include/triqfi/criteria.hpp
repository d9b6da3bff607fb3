#pragma once

#include "triqfi/operators.hpp"
#include "triqfi/qfi.hpp"
#include "triqfi/states.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace triqfi {

enum class Verdict { Detected, Inconclusive };

/// Result of evaluating one detection criterion on one state. A state is
/// flagged only on a strict violation: verdict = Detected iff margin > 0.
struct CriterionReport {
    std::string criterion;
    double statistic = 0.0;
    double threshold = 0.0;
    double margin = 0.0;  // statistic - threshold
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, double>> details;  // per-operator values etc.
};

CriterionReport make_report(std::string name, double statistic, double threshold,
                            std::vector<std::pair<std::string, double>> details = {});

/// Single-qudit and two-qudit Fisher-sum bounds for the full Gell-Mann
/// family: F1 = 2(d-1), F2 = 4(d-1)(d+2)/d. F1 + F2 = 2(d-1)(3d+4)/d.
std::pair<double, double> lemma_bounds(int d);

/// Gell-Mann collective family (all signs +) against threshold 2(d-1)(3d+4)/d.
CriterionReport corollary1(const DensityMatrix& rho);

/// Sign handling for the three-qubit signed Pauli criterion.
///  Example1:        sigma_x (+,+,+), sigma_y (+,+,+), sigma_z (+,+,-).
///  FixedBest:       best single sign class applied to all three Paulis.
///  PerOperatorBest: best sign class chosen independently per Pauli.
enum class SignMode { Example1, FixedBest, PerOperatorBest };

/// Signed Pauli collective family against threshold 10 (three qubits only).
CriterionReport corollary2(const DensityMatrix& rho, SignMode mode = SignMode::Example1);

/// Fisher sum of an arbitrary collective family against caller-supplied
/// bounds F1 (single-party) and F2 (pair).
CriterionReport theorem1_margin(const DensityMatrix& rho,
                                std::span<const CollectiveObservable> family,
                                double f1, double f2);

struct LocalBounds { double fa, fb, fc; };
struct PairBounds { double fab, fac, fbc; };

/// Threshold max(Fa,Fb,Fc) + max(Fab,Fac,Fbc); when bounds are omitted and
/// all local dimensions are equal, lemma defaults are used, otherwise the
/// missing bounds are an error.
CriterionReport theorem2_margin(const DensityMatrix& rho,
                                std::span<const CollectiveObservable> family,
                                std::optional<LocalBounds> locals = std::nullopt,
                                std::optional<PairBounds> pairs = std::nullopt);

/// Closed-form margin for the GHZ/W/white-noise mixture with the Example1
/// sign family:
///   f(x,y) = 16x^2/(1+3x-y) + 524y^2/(9(1+3y-x)) + 12(x-y)^2/(1+3x+3y) - 10.
double closed_form_f(double x, double y);

/// Closed-form margin for the d-level GHZ state under white noise with the
/// full Gell-Mann family:
///   g(d,p) = 6 p^2 d^2 (d-1)(d+3) / (2+(d^3-2)p) - 2(d-1)(3d+4)/d.
double closed_form_g(int d, double p);

/// Three-body correlation tensor t_{abc} = (d^3/8) tr(rho l_a (x) l_b (x) l_c)
/// over the Gell-Mann basis; reduces to Pauli expectation values at d = 2.
struct CorrelationTensor {
    int d = 2;
    int m = 3;                // d^2 - 1
    std::vector<double> t;    // m^3 entries, index (a*m + b)*m + g

    double at(int a, int b, int g) const { return t[(a * m + b) * m + g]; }
    double frobenius() const;

    /// Mode-i unfolding into an m x m^2 matrix (mode in {0,1,2}).
    Eigen::MatrixXd unfold(int mode) const;
};

CorrelationTensor correlation_tensor(const DensityMatrix& rho, int d);

/// GME-concurrence lower-bound criterion: statistic (1/(2 sqrt 2)) ||T||_F
/// against threshold (d-1)/d.
CriterionReport concurrence_bound(const DensityMatrix& rho, int d);

/// Correlation-tensor Ky Fan criterion: statistic
/// M_k = (||T_1||_k + ||T_2||_k + ||T_3||_k)/3 over the mode unfoldings,
/// against threshold (2 sqrt 2 / 3)(2 sqrt k + 1)((d-1)/d) sqrt((d+1)/d).
CriterionReport knorm_criterion(const DensityMatrix& rho, int d, int k);

}  // namespace triqfi
