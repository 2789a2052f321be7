#include "polyurn/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyurn/errors.hpp"

namespace polyurn {

Poly char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(Rational(1));

    // Berkowitz iteration: p holds the monic characteristic polynomial of the
    // leading r x r submatrix in descending-power order p[0..r].
    std::vector<Rational> p{Rational(1), -m(0, 0)};
    for (std::size_t r = 2; r <= n; ++r) {
        // c[k] coefficients of the (r+1) x r Toeplitz transition matrix:
        // c0 = 1, c1 = -a_rr, ck = -(R * M^{k-2} * S) for the bordering
        // row R and column S of the leading submatrix.
        std::vector<Rational> c(r + 1);
        c[0] = Rational(1);
        c[1] = -m(r - 1, r - 1);
        RatVector v(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) v[i] = m(i, r - 1);
        for (std::size_t k = 2; k <= r; ++k) {
            Rational s;
            for (std::size_t i = 0; i < r - 1; ++i)
                if (!v[i].is_zero()) s += m(r - 1, i) * v[i];
            c[k] = -s;
            if (k == r) break;
            RatVector w(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i)
                for (std::size_t j = 0; j < r - 1; ++j)
                    if (!m(i, j).is_zero() && !v[j].is_zero()) w[i] += m(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<Rational> next(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            Rational s;
            const std::size_t jmax = std::min(i, r - 1);
            for (std::size_t j = (i > r ? i - r : 0); j <= jmax; ++j)
                if (!c[i - j].is_zero() && !p[j].is_zero()) s += c[i - j] * p[j];
            next[i] = std::move(s);
        }
        p = std::move(next);
    }
    // Convert descending to ascending order.
    std::reverse(p.begin(), p.end());
    return Poly(std::move(p));
}

namespace {

// Positive divisors of |x| by trial division; throws CapError if |x| has a
// prime factor too large to enumerate cheaply.
std::vector<mpz_class> small_divisors(mpz_class x, unsigned long limit = 1u << 20) {
    x = ::abs(x);
    if (x == 0) throw DomainError("divisors of zero");
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class d = 2; d * d <= x; ++d) {
        if (d > limit)
            throw CapError("divisor enumeration: factor exceeds trial-division cap");
        if (x % d == 0) {
            int e = 0;
            while (x % d == 0) {
                x /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (x > 1) factors.emplace_back(x, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, count] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int e = 1; e <= count; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    RationalRoots result;

    Poly work = p;
    // Roots at zero: strip trailing x factors first.
    int zero_mult = 0;
    while (work.degree() > 0 && work[0].is_zero()) {
        work = work.exact_divide(Poly({Rational(0), Rational(1)}));
        ++zero_mult;
    }

    if (work.degree() >= 1) {
        // Primitivize: integer coefficients, no common content.
        mpz_class den_lcm = 1;
        for (const auto& c : work.coeffs()) den_lcm = lcm(den_lcm, c.den());
        std::vector<mpz_class> ic;
        ic.reserve(work.coeffs().size());
        for (const auto& c : work.coeffs()) ic.push_back(c.num() * (den_lcm / c.den()));
        mpz_class content = 0;
        for (const auto& c : ic) content = gcd(content, c);
        const mpz_class lead = ic.back() / content;
        const mpz_class trail = ic.front() / content;

        // Cauchy bound on |root|: 1 + max |c_i| / |c_n|.
        Rational bound(1);
        for (std::size_t i = 0; i + 1 < ic.size(); ++i) {
            Rational q(::abs(ic[i]), ::abs(ic.back()));
            if (q > bound - Rational(1)) bound = Rational(1) + q;
        }

        // Fujiwara bound: |z| <= 2 max_k (|c_{n-k}| / |c_n|)^(1/k).  It is
        // far tighter than Cauchy when middle coefficients are huge (the
        // characteristic polynomials of integer matrices routinely are), and
        // a rounded-up power-of-two version of it is still a valid bound.
        {
            const std::size_t deg = ic.size() - 1;
            const double lead_bits = static_cast<double>(mpz_sizeinbase(ic.back().get_mpz_t(), 2));
            double max_log2 = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 1; k <= deg; ++k) {
                const mpz_class& c = ic[deg - k];
                if (c == 0) continue;
                const double cbits = static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2));
                // log2(|c|/|lead|) < cbits - lead_bits + 1
                max_log2 = std::max(max_log2, (cbits - lead_bits + 1) / static_cast<double>(k));
            }
            if (max_log2 > -std::numeric_limits<double>::infinity() && max_log2 < 60) {
                const long long f =
                    static_cast<long long>(std::ceil(std::exp2(max_log2)));
                const Rational fujiwara(2 * (f + 1));
                if (fujiwara < bound) bound = fujiwara;
            }
        }

        std::vector<Rational> candidates;
        for (const auto& s : small_divisors(lead)) {
            const Rational smax = bound * Rational(s, 1);
            if (smax > Rational(static_cast<long>(1) << 26, 1))
                throw CapError("rational root search: candidate range too large");
            const unsigned long rmax = mpz_class(smax.num() / smax.den() + 1).get_ui();
            for (unsigned long r = 1; r <= rmax; ++r) {
                if (!mpz_divisible_ui_p(trail.get_mpz_t(), r)) continue;
                Rational cand(mpz_class(r), s);
                candidates.push_back(cand);
                candidates.push_back(-cand);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& cand : candidates) {
            int mult = 0;
            while (work.degree() >= 1 && work.eval(cand).is_zero()) {
                work = work.exact_divide(Poly::linear_root(cand));
                ++mult;
            }
            if (mult > 0) result.roots.emplace_back(cand, mult);
        }
    }

    if (zero_mult > 0) result.roots.emplace_back(Rational(0), zero_mult);
    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    result.remainder = work;
    return result;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        const Rational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return rref(work).size();
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix work = m;
    const auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t freecol = 0; freecol < m.cols(); ++freecol) {
        if (is_pivot[freecol]) continue;
        RatVector v(m.cols());
        v[freecol] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, freecol);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw DimensionError("linear solve shape mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    RatVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw DomainError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace polyurn
