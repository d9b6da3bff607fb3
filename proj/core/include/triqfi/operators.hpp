#pragma once

#include "triqfi/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace triqfi {

/// Label of one generalized Gell-Mann matrix.
/// Sym:   |j><k| + |k><j|                       (j < k)
/// Antisym: -i|j><k| + i|k><j|                  (j < k)
/// Diag:  sqrt(2/(l(l+1))) (sum_{j<l}|j><j| - l|l><l|), stored with j = l.
struct GellMannLabel {
    enum class Kind { Sym, Antisym, Diag };
    Kind kind;
    int j;
    int k;  // unused for Diag

    std::string str() const;
};

/// The d^2-1 traceless Hermitian generators for one local dimension,
/// ordered: symmetric block, antisymmetric block (each (j,k) lexicographic),
/// then diagonal block. Normalized so tr(lambda_a lambda_b) = 2 delta_ab.
struct LocalBasis {
    int d;
    std::vector<Matrix> matrices;
    std::vector<GellMannLabel> labels;
};

LocalBasis gell_mann_basis(int d);

/// gell_mann_basis(2): exactly (sigma_x, sigma_y, sigma_z).
LocalBasis pauli_basis();

/// A + B + C, each embedded in the full tripartite space with identities.
struct CollectiveObservable {
    DimensionSpec dims;
    Matrix a, b, c;  // local parts, signs included
    Matrix total;    // A (x) I (x) I + I (x) B (x) I + I (x) I (x) C
};

CollectiveObservable collective(const Matrix& a, const Matrix& b, const Matrix& c,
                                const DimensionSpec& dims);

/// Sign triple applied to the three local parts of a collective observable.
struct SignPattern {
    int sa, sb, sc;
};

/// The four sign classes {(+,+,+),(+,+,-),(+,-,+),(-,+,+)}; the remaining
/// four patterns are global sign flips, which leave QFI unchanged.
std::array<SignPattern, 4> signed_pauli_families();

/// All d^2-1 Gell-Mann collective observables (same matrix on each party,
/// all signs +) for cubic dims.
std::vector<CollectiveObservable> gell_mann_family(int d);

/// Three-qubit Pauli family with signs (+,+,+), (+,+,+), (+,+,-):
/// A_1=B_1=C_1=sigma_x, A_2=B_2=C_2=sigma_y, A_3=B_3=-C_3=sigma_z.
std::vector<CollectiveObservable> example1_family();

}  // namespace triqfi
