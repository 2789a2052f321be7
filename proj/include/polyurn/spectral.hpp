#pragma once

#include <optional>
#include <vector>

#include "polyurn/numeric_linalg.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

struct EigenvalueInfo {
    ComplexVal value;
    std::optional<Rational> exact;  // set when the eigenvalue is known rational
};

// Flattened biorthogonal eigensystem (only built when the spectrum is fully
// rational and the matrix is diagonalizable): u_rows[j] . v_cols[k] = delta_jk
// exactly, column k an eigenvector for lambda_of[k].
struct DualBases {
    std::vector<Rational> lambda_of;
    std::vector<RatVector> v_cols;
    std::vector<RatVector> u_rows;
    std::size_t perron_index = 0;
};

struct SpectralOptions {
    std::size_t exact_spectrum_cap = 24;   // characteristic-polynomial route cap
    std::size_t diagonalizable_cap = 200;  // numeric multiplicity test cap
    bool want_dual_bases = false;
};

struct SpectralData {
    std::vector<EigenvalueInfo> eigenvalues;  // all q, sorted by desc (Re, Im)
    Rational lambda1;
    RatVector v1;  // right Perron vector, a . v1 = 1
    RatVector u1;  // left Perron vector, u1 . v1 = 1
    bool spectrum_exact = false;
    std::optional<bool> diagonalizable;  // unset when too large to decide
    std::optional<DualBases> dual_bases;
};

// Perron data of the urn's drift matrix.  lambda1, v1 and u1 are always
// exact: for balanced urns lambda1 equals the step increment and u1 equals
// the activity vector; otherwise the characteristic polynomial identifies
// lambda1 (subject to the exact-spectrum cap).  Throws DomainError when the
// largest eigenvalue is not real, positive and simple.
SpectralData spectral(const UrnSpec& spec, const SpectralOptions& opts = {});

// Whether the central limit regime applies: `normal` when every eigenvalue
// other than lambda1 has real part strictly below lambda1/2 (margin 1e-9 on
// numeric values, exact comparison on tagged ones), `boundary` when some
// eigenvalue sits within the margin, `not_normal` beyond it.
enum class Regime { normal, boundary, not_normal };
const char* regime_name(Regime r);
Regime classify_regime(const SpectralData& sd);

}  // namespace polyurn
