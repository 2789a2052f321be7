#include "polyurn/lyapunov.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>

#include "polyurn/errors.hpp"
#include "polyurn/exact_linalg.hpp"

namespace polyurn {

namespace {

std::string format_complex(ComplexVal z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.6Lg%+.6Lgi", z.real(), z.imag());
    return buf;
}

}  // namespace

LyapunovSchur::LyapunovSchur(const MatR& f) {
    if (f.rows() != f.cols()) throw DimensionError("LyapunovSchur: matrix not square");
    const Eigen::Index n = f.rows();
    MatC fc(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!std::isfinite(static_cast<double>(f(i, j))))
                throw DomainError("LyapunovSchur: non-finite matrix entry");
            fc(i, j) = ComplexVal(f(i, j), 0);
        }
    Eigen::ComplexSchur<MatC> schur(fc, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw ConvergenceError("Schur factorization failed for " + std::to_string(n) + "x" +
                               std::to_string(n) + " matrix");
    u_ = schur.matrixU();
    t_ = schur.matrixT();
    // The triangular sweep divides by lambda_i + lambda_k; reject pencils
    // where some pair of eigenvalues (nearly) cancels.
    Real scale = 0;
    for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(t_(i, i)));
    const Real tol = 1e-12L * (1.0L + scale);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = i; k < n; ++k)
            if (std::abs(t_(i, i) + t_(k, k)) < tol)
                throw DomainError("Lyapunov pencil is singular: eigenvalues " +
                                  format_complex(t_(i, i)) + " and " + format_complex(t_(k, k)) +
                                  " sum to zero");
}

MatR LyapunovSchur::solve(const MatR& c) const {
    const Eigen::Index n = t_.rows();
    if (c.rows() != n || c.cols() != n)
        throw DimensionError("LyapunovSchur::solve: right-hand side has wrong shape");
    MatC cc = c.cast<ComplexVal>();
    // Rotate into the Schur basis:  T Y + Y T' = -U^H C conj(U).
    MatC ct = u_.adjoint() * cc * u_.conjugate();
    MatC y = MatC::Zero(n, n);
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        VecC rhs = -ct.col(k);
        for (Eigen::Index j = k + 1; j < n; ++j) rhs -= t_(k, j) * y.col(j);
        // (T + T_kk I) y_k = rhs, upper triangular back substitution.
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            ComplexVal acc = rhs(i);
            for (Eigen::Index j = i + 1; j < n; ++j) acc -= t_(i, j) * y(j, k);
            y(i, k) = acc / (t_(i, i) + t_(k, k));
        }
    }
    MatC xc = u_ * y * u_.transpose();
    MatR x = xc.real();
    MatR xt = x.transpose();
    return (x + xt) / 2.0L;
}

MatR solve_lyapunov_numeric(const MatR& f, const MatR& c) {
    if (c.rows() != c.cols() || c.rows() != f.rows())
        throw DimensionError("solve_lyapunov_numeric: shape mismatch");
    return LyapunovSchur(f).solve(c);
}

Rational exact_rational(Real x) {
    if (!std::isfinite(static_cast<double>(x)))
        throw DomainError("exact_rational: non-finite value");
    if (x == 0.0L) return Rational(0);
    int e = 0;
    Real m = std::frexp(x, &e);  // x = m * 2^e, |m| in [1/2, 1)
    bool neg = m < 0;
    if (neg) m = -m;
    // m * 2^64 is an exact integer for a 64-bit mantissa.
    Real scaled = std::ldexp(m, 64);
    unsigned long long hi = static_cast<unsigned long long>(scaled);
    Real frac = scaled - static_cast<Real>(hi);
    // Guard against mantissas wider than 64 bits (not the case on x86-64,
    // but cheap to keep exact regardless).
    mpz_class num(static_cast<unsigned long>(hi >> 32));
    num <<= 32;
    num += static_cast<unsigned long>(hi & 0xffffffffull);
    int shift = e - 64;
    if (frac != 0.0L) {
        num <<= 32;
        num += static_cast<unsigned long>(static_cast<unsigned long long>(std::ldexp(frac, 32)));
        shift -= 32;
    }
    if (neg) num = -num;
    if (shift >= 0) return Rational(num << shift, mpz_class(1));
    return Rational(num, mpz_class(1) << (-shift));
}

RatMatrix exact_rational(const MatR& m) {
    RatMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = exact_rational(m(i, j));
    return out;
}

std::optional<Rational> reconstruct_rational(const Rational& x, unsigned long quotient_threshold) {
    mpz_class p = x.num(), q = x.den();
    // Convergents h/k of the continued fraction of p/q.
    mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    bool first = true;
    while (q != 0) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (!first && a >= quotient_threshold) {
            // Tail is negligible: the previous convergent is the candidate.
            return Rational(h_prev, k_prev);
        }
        mpz_class h = a * h_prev + h_prev2;
        mpz_class k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        p = q;
        q = r;
        first = false;
    }
    // Terminated exactly.  Accept only if the denominator is plausible for a
    // reconstructed value (a converging dyadic iterate has a huge one).
    if (mpz_sizeinbase(x.den().get_mpz_t(), 2) <= 128) return x;
    return std::nullopt;
}

namespace {

// Exact residual  F X + X F' + C.
RatMatrix lyapunov_residual(const RatMatrix& f, const RatMatrix& x, const RatMatrix& c) {
    RatMatrix fx = f * x;
    RatMatrix r(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            r(i, j) = fx(i, j) + fx(j, i) + c(i, j);
    return r;
}

// Dense exact solve on the q(q+1)/2 symmetry-reduced unknowns.
RatMatrix solve_lyapunov_dense(const RatMatrix& f, const RatMatrix& c) {
    const std::size_t q = f.rows();
    const std::size_t n = q * (q + 1) / 2;
    auto idx = [q](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return i * q - i * (i - 1) / 2 + (j - i);
    };
    RatMatrix sys(n, n);
    RatVector rhs(n);
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t s = r; s < q; ++s) {
            const std::size_t row = idx(r, s);
            rhs[row] = -c(r, s);
            for (std::size_t k = 0; k < q; ++k) {
                if (!f(r, k).is_zero()) sys(row, idx(k, s)) += f(r, k);
                if (!f(s, k).is_zero()) sys(row, idx(r, k)) += f(s, k);
            }
        }
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol)
        throw DomainError("Lyapunov pencil is singular (dense elimination found no solution)");
    RatMatrix x(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) {
            x(i, j) = (*sol)[idx(i, j)];
            x(j, i) = x(i, j);
        }
    return x;
}

}  // namespace

RatMatrix solve_lyapunov_exact(const RatMatrix& f, const RatMatrix& c) {
    if (f.rows() != f.cols()) throw DimensionError("solve_lyapunov_exact: matrix not square");
    if (c.rows() != f.rows() || c.cols() != f.cols())
        throw DimensionError("solve_lyapunov_exact: right-hand side has wrong shape");
    if (!c.is_symmetric())
        throw DomainError("solve_lyapunov_exact: right-hand side must be symmetric");
    const std::size_t q = f.rows();
    if (q == 0) return RatMatrix(0, 0);
    if (q > kExactLyapunovCap)
        throw CapError("solve_lyapunov_exact: dimension " + std::to_string(q) +
                       " exceeds the exact cap of " + std::to_string(kExactLyapunovCap));

    // Exact singularity precheck for modest sizes: eigenvalues lambda, -mu
    // coincide exactly when gcd(p(x), p(-x)) is non-constant.
    if (q <= 24) {
        Poly p = char_poly(f);
        std::vector<Rational> flipped(p.coeffs());
        for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
        Poly g = Poly::gcd(p, Poly(flipped));
        if (g.degree() > 0)
            throw DomainError(
                "Lyapunov pencil is singular: the spectrum contains eigenvalues summing to zero");
    }

    LyapunovSchur schur(to_real(f));  // also rejects near-singular pencils

    RatMatrix x(q, q);  // exact iterate, starts at zero
    RatMatrix residual = c;
    unsigned long threshold = 1ul << 24;
    std::optional<RatMatrix> last_candidate;
    for (int iter = 0; iter < 60; ++iter) {
        if (residual.is_zero()) return x;
        MatR delta = schur.solve(to_real(residual));
        x += exact_rational(delta);
        residual = lyapunov_residual(f, x, c);
        if (residual.is_zero()) return x;
        if (iter < 2) continue;
        if (residual.norm_inf().to_long_double() > 1e-40L) continue;
        // Converged well past double precision: attempt reconstruction.
        RatMatrix candidate(q, q);
        bool ok = true;
        for (std::size_t i = 0; i < q && ok; ++i)
            for (std::size_t j = i; j < q && ok; ++j) {
                auto r = reconstruct_rational(x(i, j), threshold);
                if (!r) {
                    ok = false;
                } else {
                    candidate(i, j) = *r;
                    candidate(j, i) = *r;
                }
            }
        if (ok) {
            if (lyapunov_residual(f, candidate, c).is_zero()) return candidate;
            // A wrong candidate repeating verbatim means the continued
            // fraction has a legitimately large partial quotient; look
            // deeper before truncating.
            if (last_candidate && candidate == *last_candidate && threshold < (1ul << 56))
                threshold <<= 8;
            last_candidate = std::move(candidate);
        }
    }
    if (q <= 40) return solve_lyapunov_dense(f, c);
    throw ConvergenceError("solve_lyapunov_exact: refinement did not certify a rational solution");
}

}  // namespace polyurn
