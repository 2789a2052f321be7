#include "polyurn/law.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "polyurn/errors.hpp"
#include "polyurn/lyapunov.hpp"

namespace polyurn {

const char* law_method_name(LawMethod m) {
    return m == LawMethod::dual_basis ? "dual-basis" : "lyapunov";
}

namespace {

Regime require_normal(const SpectralData& sd) {
    Regime regime = classify_regime(sd);
    if (regime != Regime::normal)
        throw DomainError(std::string("the spectral regime is ") + regime_name(regime) +
                          ": some eigenvalue has real part at or above lambda1/2, so the "
                          "Gaussian limit law does not apply");
    return regime;
}

void require_balanced(const UrnSpec& spec, const SpectralData& sd) {
    auto s = spec.derive_step_increment();
    if (!s || *s != sd.lambda1)
        throw MethodError("the integral route requires a balanced urn (constant a.E(xi))");
}

RatVector scaled_vector(const Rational& c, const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

}  // namespace

AsymptoticLaw asymptotics_integral(const UrnSpec& spec, const SpectralData& sd) {
    AsymptoticLaw law;
    law.regime = require_normal(sd);
    require_balanced(spec, sd);
    law.method = LawMethod::lyapunov;
    law.mu = scaled_vector(sd.lambda1, sd.v1);

    const RatMatrix a = build_matrix_A(spec);
    const RatMatrix b = compute_B(spec, sd.v1).weighted;
    const RatMatrix proj = RatMatrix::identity(spec.q) - outer(sd.v1, sd.u1);
    RatMatrix f = a - sd.lambda1 * outer(sd.v1, sd.u1);
    const Rational half = sd.lambda1 / Rational(2);
    for (std::size_t i = 0; i < spec.q; ++i) f(i, i) -= half;
    const RatMatrix c = proj * b * proj.transpose();
    RatMatrix x = solve_lyapunov_exact(f, c);
    law.sigma = RatMatrix(spec.q, spec.q);
    for (std::size_t i = 0; i < spec.q; ++i)
        for (std::size_t j = 0; j < spec.q; ++j)
            if (!x(i, j).is_zero()) law.sigma(i, j) = sd.lambda1 * x(i, j);
    return law;
}

NumericLaw asymptotics_integral_numeric(const UrnSpec& spec, const SpectralData& sd) {
    NumericLaw law;
    law.regime = require_normal(sd);
    require_balanced(spec, sd);
    law.method = LawMethod::lyapunov;
    const Real lambda1 = sd.lambda1.to_long_double();
    law.mu = lambda1 * to_real(sd.v1);

    const MatR a = to_real(build_matrix_A(spec));
    const MatR b = to_real(compute_B(spec, sd.v1).weighted);
    const VecR v1 = to_real(sd.v1);
    const VecR u1 = to_real(sd.u1);
    const std::size_t q = spec.q;
    const MatR proj = MatR::Identity(q, q) - v1 * u1.transpose();
    MatR f = a - lambda1 * (v1 * u1.transpose());
    f -= (lambda1 / 2.0L) * MatR::Identity(q, q);
    const MatR c = proj * b * proj.transpose();
    law.sigma = lambda1 * solve_lyapunov_numeric(f, c);
    return law;
}

AsymptoticLaw asymptotics_dual_basis(const UrnSpec& spec, const SpectralData& sd) {
    AsymptoticLaw law;
    law.regime = require_normal(sd);
    law.method = LawMethod::dual_basis;
    law.mu = scaled_vector(sd.lambda1, sd.v1);
    if (!sd.dual_bases) {
        if (sd.diagonalizable == false)
            throw MethodError(
                "the drift matrix is not diagonalizable; the dual-basis sum does not apply — "
                "use the integral (Lyapunov) route");
        throw MethodError(
            "exact dual bases are unavailable (spectrum not fully rational or not computed); "
            "use the integral (Lyapunov) route");
    }
    const DualBases& db = *sd.dual_bases;
    const RatMatrix b = compute_B(spec, sd.v1).weighted;
    const std::size_t n = db.lambda_of.size();
    // Precompute B u_k.
    std::vector<RatVector> bu(n);
    for (std::size_t k = 0; k < n; ++k)
        if (k != db.perron_index) bu[k] = b * db.u_rows[k];
    law.sigma = RatMatrix(spec.q, spec.q);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == db.perron_index) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == db.perron_index) continue;
            const Rational denom = sd.lambda1 - db.lambda_of[j] - db.lambda_of[k];
            if (denom.is_zero())
                throw DomainError("dual-basis sum hits a resonance: lambda_j + lambda_k = lambda1");
            const Rational coeff = dot(db.u_rows[j], bu[k]) / denom;
            if (coeff.is_zero()) continue;
            for (std::size_t r = 0; r < spec.q; ++r) {
                if (db.v_cols[j][r].is_zero()) continue;
                const Rational left = coeff * db.v_cols[j][r];
                for (std::size_t c = 0; c < spec.q; ++c)
                    if (!db.v_cols[k][c].is_zero())
                        law.sigma(r, c) += left * db.v_cols[k][c];
            }
        }
    }
    return law;
}

NumericLaw asymptotics_dual_basis_numeric(const UrnSpec& spec, const SpectralData& sd) {
    NumericLaw law;
    law.regime = require_normal(sd);
    law.method = LawMethod::dual_basis;
    const Real lambda1 = sd.lambda1.to_long_double();
    law.mu = lambda1 * to_real(sd.v1);

    const MatR a = to_real(build_matrix_A(spec));
    const std::size_t q = spec.q;
    EigenPairs pairs = numeric_eigen_pairs(a);
    // Bilinear dual: rows of V^{-1} pair with the columns of V.
    Eigen::PartialPivLU<MatC> lu(pairs.vectors);
    MatC dual = lu.solve(MatC::Identity(q, q));
    if (q <= 200) {
        MatC resid = dual * pairs.vectors - MatC::Identity(q, q);
        if (resid.cwiseAbs().maxCoeff() > 1e-8L)
            throw MethodError(
                "numeric eigenvector basis is ill-conditioned (matrix likely not "
                "diagonalizable); use the integral (Lyapunov) route");
    }
    std::size_t perron = 0;
    Real best = -1;
    for (std::size_t i = 0; i < q; ++i) {
        Real d = std::abs(pairs.values[i] - ComplexVal(lambda1, 0));
        if (best < 0 || d < best) {
            best = d;
            perron = i;
        }
    }
    const MatC b = to_real(compute_B(spec, sd.v1).weighted).cast<ComplexVal>();
    MatC sigma = MatC::Zero(q, q);
    MatC bu = b * dual.transpose();  // column k = B u_k
    for (std::size_t j = 0; j < q; ++j) {
        if (j == perron) continue;
        for (std::size_t k = 0; k < q; ++k) {
            if (k == perron) continue;
            ComplexVal denom = ComplexVal(lambda1, 0) - pairs.values[j] - pairs.values[k];
            ComplexVal coeff = (dual.row(j) * bu.col(static_cast<Eigen::Index>(k)))(0, 0) / denom;
            sigma += coeff * (pairs.vectors.col(static_cast<Eigen::Index>(j)) *
                              pairs.vectors.col(static_cast<Eigen::Index>(k)).transpose());
        }
    }
    const Real residue = sigma.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-9L)
        throw ConvergenceError("dual-basis covariance has imaginary residue " +
                               std::to_string(static_cast<double>(residue)));
    MatR real_part = sigma.real();
    MatR transposed = real_part.transpose();
    law.sigma = (real_part + transposed) / 2.0L;
    return law;
}

std::pair<Rational, Rational> functional_law(const AsymptoticLaw& law, const RatVector& c) {
    if (c.size() != law.mu.size()) throw DimensionError("functional_law: wrong dimension");
    return {dot(c, law.mu), dot(c, law.sigma * c)};
}

std::pair<Real, Real> functional_law(const NumericLaw& law, const VecR& c) {
    if (c.size() != law.mu.size()) throw DimensionError("functional_law: wrong dimension");
    Real mean = c.dot(law.mu);
    Real var = c.dot(law.sigma * c);
    return {mean, var};
}

}  // namespace polyurn
