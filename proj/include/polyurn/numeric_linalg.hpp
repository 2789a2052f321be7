#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "polyurn/matrix.hpp"
#include "polyurn/poly.hpp"

namespace polyurn {

// Floating-point layer. All numeric work in the library runs in extended
// precision (long double): the rational layer is authoritative, and the
// extra mantissa bits keep residual checks comfortably below the pinned
// tolerances.
using Real = long double;
using ComplexVal = std::complex<Real>;

using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatC = Eigen::Matrix<ComplexVal, Eigen::Dynamic, Eigen::Dynamic>;
using VecC = Eigen::Matrix<ComplexVal, Eigen::Dynamic, 1>;

// Exact-to-float conversion (each entry accurate to the full long double
// mantissa).
MatR to_real(const RatMatrix& m);
VecR to_real(const RatVector& v);
RatMatrix to_rational_approx(const MatR& m, long denominator_bits);

// Eigenvalues of a real square matrix, sorted by descending real part and
// then descending imaginary part.  Conjugate pairs therefore end up
// adjacent (.. a+bi, a-bi ..).  If `polish` is given, each eigenvalue is
// refined by Newton iteration on that polynomial, keeping the refined value
// only when it reduces |p(z)|; pass the characteristic polynomial in a
// numerically benign form when coefficients would be ill-conditioned.
std::vector<ComplexVal> numeric_eigen(const MatR& a, const Poly* polish = nullptr);

// Eigenvalues together with right eigenvectors (columns of V, matching the
// sorted eigenvalue order).
struct EigenPairs {
    std::vector<ComplexVal> values;
    MatC vectors;
};
EigenPairs numeric_eigen_pairs(const MatR& a);

// Smallest singular value (used by tests to certify near-singularity
// claims).
Real min_singular_value(const MatR& a);

// Evaluate a polynomial with rational coefficients at a complex point.
ComplexVal eval_poly(const Poly& p, ComplexVal z);

// One guarded Newton step loop for a root of p near z0 (at most `iters`
// steps, keeps the best |p(z)| seen).
ComplexVal newton_polish(const Poly& p, ComplexVal z0, int iters = 12);

}  // namespace polyurn
