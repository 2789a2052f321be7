#pragma once

#include <optional>

#include "polyurn/matrix.hpp"
#include "polyurn/numeric_linalg.hpp"

namespace polyurn {

// Solvers for the continuous Lyapunov equation
//
//     F X + X F' + C = 0
//
// with symmetric C.  The pencil is nonsingular exactly when no two
// eigenvalues of F sum to zero; both solvers reject singular pencils.

// Largest dimension accepted by the exact solver.
inline constexpr std::size_t kExactLyapunovCap = 80;

// Reusable numeric solver for a fixed F (complex Schur factorization done
// once, each solve is a triangular sweep).
class LyapunovSchur {
  public:
    explicit LyapunovSchur(const MatR& f);
    MatR solve(const MatR& c) const;
    std::size_t size() const { return static_cast<std::size_t>(t_.rows()); }

  private:
    MatC u_;  // unitary factor
    MatC t_;  // upper triangular factor
};

MatR solve_lyapunov_numeric(const MatR& f, const MatR& c);

// Exact rational solution.  Strategy: one numeric Schur factorization acts
// as an approximate inverse inside iterative refinement with exact rational
// residuals; once the iterate has converged past the unknown denominators,
// each entry is reconstructed by continued fractions and the candidate is
// certified by exact substitution.  Small systems that fail to certify fall
// back to dense rational elimination on the symmetry-reduced system.
RatMatrix solve_lyapunov_exact(const RatMatrix& f, const RatMatrix& c);

// The exact rational value of a long double (every finite long double is a
// dyadic rational).
Rational exact_rational(Real x);
RatMatrix exact_rational(const MatR& m);

// Best small-denominator rational near x: walks the continued fraction of x
// and returns the convergent preceding the first partial quotient at least
// `quotient_threshold`.  Returns nullopt when no truncation point shows up
// and x itself has an implausibly large denominator.
std::optional<Rational> reconstruct_rational(const Rational& x,
                                             unsigned long quotient_threshold = (1ul << 24));

}  // namespace polyurn
