#pragma once

#include <utility>

#include "polyurn/spectral.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

// The two covariance routes.  Both compute the same law; the Lyapunov
// (integral) route also covers non-diagonalizable urns and is the
// authoritative one.
enum class LawMethod { dual_basis, lyapunov };
const char* law_method_name(LawMethod m);

// Gaussian limit of (X_n - n mu)/sqrt(n): exact rational form.
struct AsymptoticLaw {
    RatVector mu;
    RatMatrix sigma;
    Regime regime = Regime::normal;
    LawMethod method = LawMethod::lyapunov;
};

// Floating-point form for urns beyond the exact caps.
struct NumericLaw {
    VecR mu;
    MatR sigma;
    Regime regime = Regime::normal;
    LawMethod method = LawMethod::lyapunov;
};

// Integral route: deflate the Perron direction, M = A - lambda1 v1 u1', and
// solve (M - lambda1/2 I) X + X (M - lambda1/2 I)' = -P B P' with
// P = I - v1 u1'; then Sigma = s X, mu = lambda1 v1.  Requires a balanced
// urn in the normal regime.
AsymptoticLaw asymptotics_integral(const UrnSpec& spec, const SpectralData& sd);
NumericLaw asymptotics_integral_numeric(const UrnSpec& spec, const SpectralData& sd);

// Dual-basis route: Sigma = sum over non-Perron pairs of
// (u_j' B u_k) / (lambda1 - lambda_j - lambda_k) v_j v_k'.  The exact form
// needs sd.dual_bases; non-diagonalizable urns are refused with a pointer to
// the Lyapunov route.
AsymptoticLaw asymptotics_dual_basis(const UrnSpec& spec, const SpectralData& sd);
NumericLaw asymptotics_dual_basis_numeric(const UrnSpec& spec, const SpectralData& sd);

// Law of the scalar functional c . X_n: (mean rate c.mu, variance rate
// c' Sigma c).
std::pair<Rational, Rational> functional_law(const AsymptoticLaw& law, const RatVector& c);
std::pair<Real, Real> functional_law(const NumericLaw& law, const VecR& c);

}  // namespace polyurn
