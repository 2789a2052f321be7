#include "polyurn/numeric_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "polyurn/errors.hpp"

namespace polyurn {

MatR to_real(const RatMatrix& m) {
    MatR out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(i, j).to_long_double();
    return out;
}

VecR to_real(const RatVector& v) {
    VecR out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = v[i].to_long_double();
    return out;
}

RatMatrix to_rational_approx(const MatR& m, long denominator_bits) {
    if (denominator_bits < 1 || denominator_bits > 256)
        throw DomainError("to_rational_approx: denominator_bits out of range");
    RatMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    mpz_class den = mpz_class(1) << denominator_bits;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Real x = m(i, j);
            if (!std::isfinite(static_cast<double>(x)))
                throw DomainError("to_rational_approx: non-finite entry");
            Real scaled = x * std::ldexp(1.0L, static_cast<int>(denominator_bits));
            mpz_class num;
            // Reassemble the long double into an exact integer numerator.
            bool neg = scaled < 0;
            Real mag = neg ? -scaled : scaled;
            Real whole = std::floor(mag + 0.5L);
            // 64-bit chunks.
            mpz_class acc = 0;
            Real rem = whole;
            std::vector<unsigned long> limbs;
            while (rem >= 1.0L) {
                Real lo = std::fmod(rem, 4294967296.0L);
                limbs.push_back(static_cast<unsigned long>(lo));
                rem = std::floor(rem / 4294967296.0L);
            }
            for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) {
                acc <<= 32;
                acc += *it;
            }
            num = neg ? mpz_class(-acc) : acc;
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(num, den);
        }
    }
    return out;
}

ComplexVal eval_poly(const Poly& p, ComplexVal z) {
    if (p.degree() < 0) return ComplexVal(0, 0);
    ComplexVal acc(0, 0);
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * z + ComplexVal(p[static_cast<std::size_t>(k)].to_long_double(), 0);
    return acc;
}

ComplexVal newton_polish(const Poly& p, ComplexVal z0, int iters) {
    if (p.degree() < 1) return z0;
    Poly dp = p.derivative();
    ComplexVal best = z0;
    Real best_abs = std::abs(eval_poly(p, z0));
    ComplexVal z = z0;
    for (int k = 0; k < iters; ++k) {
        ComplexVal fz = eval_poly(p, z);
        ComplexVal dz = eval_poly(dp, z);
        if (std::abs(dz) == 0.0L) break;
        z = z - fz / dz;
        Real a = std::abs(eval_poly(p, z));
        if (a < best_abs) {
            best_abs = a;
            best = z;
        } else if (a > 4.0L * best_abs) {
            break;  // diverging; keep the best seen
        }
    }
    return best;
}

namespace {

bool eig_order(const ComplexVal& x, const ComplexVal& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
}

void check_finite(const MatR& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!std::isfinite(static_cast<double>(a(i, j))))
                throw DomainError("numeric_eigen: non-finite matrix entry");
}

}  // namespace

std::vector<ComplexVal> numeric_eigen(const MatR& a, const Poly* polish) {
    if (a.rows() != a.cols()) throw DimensionError("numeric_eigen: matrix not square");
    check_finite(a);
    Eigen::EigenSolver<MatR> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigenvalue iteration failed for " + std::to_string(a.rows()) +
                               "x" + std::to_string(a.cols()) + " matrix");
    std::vector<ComplexVal> vals(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) vals[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    if (polish != nullptr)
        for (auto& z : vals) z = newton_polish(*polish, z);
    std::sort(vals.begin(), vals.end(), eig_order);
    return vals;
}

EigenPairs numeric_eigen_pairs(const MatR& a) {
    if (a.rows() != a.cols()) throw DimensionError("numeric_eigen_pairs: matrix not square");
    check_finite(a);
    Eigen::EigenSolver<MatR> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigenvalue iteration failed for " + std::to_string(a.rows()) +
                               "x" + std::to_string(a.cols()) + " matrix");
    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return eig_order(solver.eigenvalues()(x), solver.eigenvalues()(y));
    });
    EigenPairs out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(order[static_cast<std::size_t>(i)]);
        out.vectors.col(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    }
    return out;
}

Real min_singular_value(const MatR& a) {
    Eigen::JacobiSVD<MatR> svd(a);
    if (svd.singularValues().size() == 0) return 0.0L;
    return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace polyurn
