#include "triqfi/criteria.hpp"

#include <cmath>

namespace triqfi {

namespace {

int require_cubic(const DensityMatrix& rho) {
    if (rho.dims.da != rho.dims.db || rho.dims.db != rho.dims.dc)
        throw std::invalid_argument("criterion requires equal local dimensions");
    return rho.dims.da;
}

std::string sign_str(const SignPattern& s) {
    auto c = [](int v) { return v > 0 ? '+' : '-'; };
    return std::string{'(', c(s.sa), ',', c(s.sb), ',', c(s.sc), ')'};
}

}  // namespace

CriterionReport make_report(std::string name, double statistic, double threshold,
                            std::vector<std::pair<std::string, double>> details) {
    CriterionReport r;
    r.criterion = std::move(name);
    r.statistic = statistic;
    r.threshold = threshold;
    r.margin = statistic - threshold;
    r.verdict = r.margin > 0.0 ? Verdict::Detected : Verdict::Inconclusive;
    r.details = std::move(details);
    return r;
}

std::pair<double, double> lemma_bounds(int d) {
    if (d < 2) throw std::invalid_argument("lemma_bounds: d must be >= 2");
    const double f1 = 2.0 * (d - 1);
    const double f2 = 4.0 * (d - 1) * (d + 2) / static_cast<double>(d);
    return {f1, f2};
}

CriterionReport corollary1(const DensityMatrix& rho) {
    const int d = require_cubic(rho);
    const auto family = gell_mann_family(d);
    const LocalBasis basis = gell_mann_basis(d);

    std::vector<double> contributions;
    const double sum = fisher_sum(rho.matrix, family, contributions);

    std::vector<std::pair<std::string, double>> details;
    for (std::size_t i = 0; i < contributions.size(); ++i)
        details.emplace_back(basis.labels[i].str(), contributions[i]);

    const auto [f1, f2] = lemma_bounds(d);
    return make_report("corollary1", sum, f1 + f2, std::move(details));
}

CriterionReport corollary2(const DensityMatrix& rho, SignMode mode) {
    if (rho.dims != DimensionSpec::cubic(2))
        throw std::invalid_argument("corollary2: requires three qubits");

    const LocalBasis pauli = pauli_basis();
    const auto patterns = signed_pauli_families();
    const DimensionSpec dims = DimensionSpec::cubic(2);
    static const char* pauli_names[3] = {"sigma_x", "sigma_y", "sigma_z"};

    // QFI of every (pauli, sign class) pair from one eigendecomposition.
    const Spectrum spec = hermitian_eig(rho.matrix);
    double f[3][4];
    for (int i = 0; i < 3; ++i)
        for (int s = 0; s < 4; ++s) {
            const auto& p = patterns[s];
            const Matrix& m = pauli.matrices[i];
            const auto obs = collective(double(p.sa) * m, double(p.sb) * m,
                                        double(p.sc) * m, dims);
            f[i][s] = qfi_from_spectrum(spec, obs.total);
        }

    std::vector<std::pair<std::string, double>> details;
    double statistic = 0.0;
    switch (mode) {
        case SignMode::Example1: {
            // (+,+,+) for sigma_x, sigma_y; (+,+,-) for sigma_z.
            const int choice[3] = {0, 0, 1};
            for (int i = 0; i < 3; ++i) {
                statistic += f[i][choice[i]];
                details.emplace_back(std::string(pauli_names[i]) + " " +
                                         sign_str(patterns[choice[i]]),
                                     f[i][choice[i]]);
            }
            break;
        }
        case SignMode::FixedBest: {
            int best = 0;
            double best_sum = -1.0;
            for (int s = 0; s < 4; ++s) {
                const double sum = f[0][s] + f[1][s] + f[2][s];
                if (sum > best_sum) { best_sum = sum; best = s; }
            }
            statistic = best_sum;
            for (int i = 0; i < 3; ++i)
                details.emplace_back(std::string(pauli_names[i]) + " " +
                                         sign_str(patterns[best]),
                                     f[i][best]);
            break;
        }
        case SignMode::PerOperatorBest: {
            for (int i = 0; i < 3; ++i) {
                int best = 0;
                for (int s = 1; s < 4; ++s)
                    if (f[i][s] > f[i][best]) best = s;
                statistic += f[i][best];
                details.emplace_back(std::string(pauli_names[i]) + " " +
                                         sign_str(patterns[best]),
                                     f[i][best]);
            }
            break;
        }
    }
    return make_report("corollary2", statistic, 10.0, std::move(details));
}

CriterionReport theorem1_margin(const DensityMatrix& rho,
                                std::span<const CollectiveObservable> family,
                                double f1, double f2) {
    for (const auto& obs : family)
        if (obs.dims != rho.dims)
            throw std::invalid_argument("theorem1_margin: family dims do not match state");
    std::vector<double> contributions;
    const double sum = fisher_sum(rho.matrix, family, contributions);
    std::vector<std::pair<std::string, double>> details;
    for (std::size_t i = 0; i < contributions.size(); ++i)
        details.emplace_back("mu=" + std::to_string(i), contributions[i]);
    return make_report("theorem1-custom", sum, f1 + f2, std::move(details));
}

CriterionReport theorem2_margin(const DensityMatrix& rho,
                                std::span<const CollectiveObservable> family,
                                std::optional<LocalBounds> locals,
                                std::optional<PairBounds> pairs) {
    if (!locals || !pairs) {
        if (rho.dims.da != rho.dims.db || rho.dims.db != rho.dims.dc)
            throw std::invalid_argument(
                "theorem2_margin: bounds must be supplied for unequal local dimensions");
        const auto [f1, f2] = lemma_bounds(rho.dims.da);
        if (!locals) locals = LocalBounds{f1, f1, f1};
        if (!pairs) pairs = PairBounds{f2, f2, f2};
    }
    for (const auto& obs : family)
        if (obs.dims != rho.dims)
            throw std::invalid_argument("theorem2_margin: family dims do not match state");

    std::vector<double> contributions;
    const double sum = fisher_sum(rho.matrix, family, contributions);
    const double f1 = std::max({locals->fa, locals->fb, locals->fc});
    const double f2 = std::max({pairs->fab, pairs->fac, pairs->fbc});
    std::vector<std::pair<std::string, double>> details;
    for (std::size_t i = 0; i < contributions.size(); ++i)
        details.emplace_back("mu=" + std::to_string(i), contributions[i]);
    details.emplace_back("F1", f1);
    details.emplace_back("F2", f2);
    return make_report("theorem2", sum, f1 + f2, std::move(details));
}

double closed_form_f(double x, double y) {
    // Denominators vanish only at the simplex corners (x,y)=(0,1) and (1,0),
    // where the matching numerator vanishes too; those terms are 0.
    auto term = [](double num, double den) {
        if (num == 0.0) return 0.0;
        if (den <= 0.0)
            throw std::invalid_argument("closed_form_f: outside the valid simplex");
        return num / den;
    };
    return term(16.0 * x * x, 1.0 + 3.0 * x - y) +
           term(524.0 * y * y, 9.0 * (1.0 + 3.0 * y - x)) +
           term(12.0 * (x - y) * (x - y), 1.0 + 3.0 * x + 3.0 * y) - 10.0;
}

double closed_form_g(int d, double p) {
    if (d < 2) throw std::invalid_argument("closed_form_g: d must be >= 2");
    const double dd = d;
    const double d3 = dd * dd * dd;
    return 6.0 * p * p * dd * dd * (dd - 1.0) * (dd + 3.0) / (2.0 + (d3 - 2.0) * p) -
           2.0 * (dd - 1.0) * (3.0 * dd + 4.0) / dd;
}

double CorrelationTensor::frobenius() const {
    double sum = 0.0;
    for (double v : t) sum += v * v;
    return std::sqrt(sum);
}

Eigen::MatrixXd CorrelationTensor::unfold(int mode) const {
    Eigen::MatrixXd out(m, m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < m; ++g) {
                switch (mode) {
                    case 0: out(a, b * m + g) = at(a, b, g); break;
                    case 1: out(b, a * m + g) = at(a, b, g); break;
                    case 2: out(g, a * m + b) = at(a, b, g); break;
                    default: throw std::invalid_argument("unfold: mode must be 0, 1 or 2");
                }
            }
    return out;
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho, int d) {
    if (rho.dims != DimensionSpec::cubic(d))
        throw std::invalid_argument("correlation_tensor: requires cubic dims d x d x d");

    const LocalBasis basis = gell_mann_basis(d);
    const int m = d * d - 1;
    const double scale = d * d * d / 8.0;

    CorrelationTensor tensor;
    tensor.d = d;
    tensor.m = m;
    tensor.t.resize(static_cast<std::size_t>(m) * m * m);

    // Contract one mode at a time: R_a = tr_a(rho . (l_a (x) I (x) I)) etc.
    // Done directly entrywise; dimensions are small.
    const int n = rho.dims.total();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Matrix ab = kron(basis.matrices[a], basis.matrices[b]);
            for (int g = 0; g < m; ++g) {
                const Matrix op = kron(ab, basis.matrices[g]);
                Complex tr = 0.0;
                for (int i = 0; i < n; ++i)
                    tr += (rho.matrix.row(i) * op.col(i))(0);
                const double value = scale * tr.real();
                if (std::abs(tr.imag()) > 1e-10)
                    throw std::runtime_error("correlation_tensor: non-real entry");
                tensor.t[(static_cast<std::size_t>(a) * m + b) * m + g] = value;
            }
        }
    return tensor;
}

CriterionReport concurrence_bound(const DensityMatrix& rho, int d) {
    const CorrelationTensor tensor = correlation_tensor(rho, d);
    const double statistic = tensor.frobenius() / (2.0 * std::sqrt(2.0));
    const double threshold = (d - 1.0) / d;
    return make_report("concurrence-bound", statistic, threshold,
                       {{"frobenius", tensor.frobenius()}});
}

CriterionReport knorm_criterion(const DensityMatrix& rho, int d, int k) {
    const int m = d * d - 1;
    if (k < 1 || k > m)
        throw std::invalid_argument("knorm_criterion: k out of range [1, d^2-1]");

    const CorrelationTensor tensor = correlation_tensor(rho, d);
    double sum = 0.0;
    std::vector<std::pair<std::string, double>> details;
    for (int mode = 0; mode < 3; ++mode) {
        const Eigen::MatrixXd unfolding = tensor.unfold(mode);
        const RealVector sv = singular_values(unfolding.cast<Complex>());
        double kyfan = 0.0;
        for (int i = 0; i < k && i < sv.size(); ++i) kyfan += sv(i);
        details.emplace_back("kyfan-mode" + std::to_string(mode + 1), kyfan);
        sum += kyfan;
    }
    const double statistic = sum / 3.0;
    const double threshold = (2.0 * std::sqrt(2.0) / 3.0) * (2.0 * std::sqrt(double(k)) + 1.0) *
                             ((d - 1.0) / d) * std::sqrt((d + 1.0) / d);
    details.emplace_back("k", k);
    return make_report("tensor-knorm", statistic, threshold, std::move(details));
}

}  // namespace triqfi
