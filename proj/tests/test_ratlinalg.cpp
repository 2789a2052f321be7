#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyurn/errors.hpp"
#include "polyurn/exact_linalg.hpp"
#include "polyurn/lyapunov.hpp"
#include "polyurn/matrix.hpp"
#include "polyurn/numeric_linalg.hpp"
#include "polyurn/poly.hpp"
#include "polyurn/rational.hpp"
#include "polyurn/reference_data.hpp"
#include "test_util.hpp"

using namespace polyurn;
using testutil::mat_from;
using testutil::mat_from_longs;
using testutil::vec_from;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/8").str() == "-1/2");
    CHECK(Rational::parse("7").str() == "7/1");
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), SpecError);
    CHECK_THROWS_AS(Rational::parse(""), SpecError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic") {
    Rational a(2, 3), b(-1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(-1, 9));
    CHECK(a / b == Rational(-4));
    CHECK(abs(b) == Rational(1, 6));
    CHECK(b.inverse() == Rational(-6));
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK(a < Rational(3, 4));
    CHECK(Rational(5, 10) == Rational(1, 2));
}

TEST_CASE("conversion to long double is accurate to the mantissa") {
    auto roundtrip_close = [](const Rational& r) {
        Real x = r.to_long_double();
        Rational err = abs(exact_rational(x) - r);
        CHECK(err <= abs(r) * Rational(mpz_class(1), mpz_class(1) << 62));
    };
    roundtrip_close(Rational(1, 3));
    roundtrip_close(Rational(-22, 7));
    mpz_class big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    roundtrip_close(Rational(mpz_class(1), big));
    roundtrip_close(Rational(big, mpz_class(7)));
    roundtrip_close(Rational(big * 3 + 1, big * 7 + 5));
    CHECK(Rational(0).to_long_double() == 0.0L);
    CHECK(Rational(3, 8).to_long_double() == 0.375L);
    CHECK(Rational(-5, 4).to_long_double() == -1.25L);
}

TEST_CASE("exact dyadic value of a long double") {
    CHECK(exact_rational(0.375L) == Rational(3, 8));
    CHECK(exact_rational(-2.5L) == Rational(-5, 2));
    CHECK(exact_rational(0.0L) == Rational(0));
    CHECK(exact_rational(std::ldexp(1.0L, -80)) == Rational(mpz_class(1), mpz_class(1) << 80));
    Real third = 1.0L / 3.0L;
    CHECK(exact_rational(third).to_long_double() == third);
}

TEST_CASE("matrix algebra basics") {
    RatMatrix a = mat_from_longs(2, 2, {1, 2, 3, 4});
    RatMatrix b = mat_from_longs(2, 2, {0, 1, 1, 0});
    CHECK((a * b) == mat_from_longs(2, 2, {2, 1, 4, 3}));
    CHECK(a.transpose() == mat_from_longs(2, 2, {1, 3, 2, 4}));
    CHECK((a + b - b) == a);
    RatVector v{Rational(1), Rational(-1)};
    RatVector av = a * v;
    CHECK(av[0] == Rational(-1));
    CHECK(av[1] == Rational(-1));
    RatVector va = mul_vec_mat(v, a);
    CHECK(va[0] == Rational(-2));
    CHECK(va[1] == Rational(-2));
    CHECK(dot(v, v) == Rational(2));
    RatMatrix ov = outer(v, v);
    CHECK(ov(0, 1) == Rational(-1));
    CHECK(ov.is_symmetric());
    CHECK(a.norm_inf() == Rational(7));
    CHECK_THROWS_AS(a * RatMatrix(3, 3), DimensionError);
}

TEST_CASE("polynomial arithmetic and gcd") {
    Poly p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    Poly q = Poly::linear_root(Rational(1));           // x - 1
    auto [quot, rem] = p.divmod(q);
    CHECK(rem.degree() == -1);
    CHECK(quot == Poly({Rational(1), Rational(1)}));
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(Poly::gcd(p, q) == q);
    CHECK_THROWS_AS(p.exact_divide(Poly({Rational(1), Rational(1), Rational(1)})), DomainError);
    Poly z;
    CHECK(z.degree() == -1);
    CHECK((z * p).degree() == -1);
    CHECK(p.derivative() == Poly({Rational(0), Rational(2)}));
}

TEST_CASE("characteristic polynomial of small companions") {
    // Two-state balanced urn matrix [[-1,3],[2,-2]]: det(xI - A) = x^2+3x-4.
    RatMatrix a = mat_from_longs(2, 2, {-1, 3, 2, -2});
    Poly p = char_poly(a);
    CHECK(p == Poly({Rational(-4), Rational(3), Rational(1)}));
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == Rational(1));
    CHECK(rr.roots[1].first == Rational(-4));
    CHECK(rr.remainder.degree() == 0);
}

TEST_CASE("Cayley-Hamilton holds exactly") {
    RatMatrix a = mat_from_longs(3, 3, {2, -1, 0, 3, 1, -2, 0, 5, -4});
    a(0, 1) = Rational(-1, 2);
    a(2, 0) = Rational(7, 3);
    Poly p = char_poly(a);
    REQUIRE(p.degree() == 3);
    RatMatrix acc(3, 3);  // p(A)
    RatMatrix pw = RatMatrix::identity(3);
    for (int k = 0; k <= p.degree(); ++k) {
        acc += p[static_cast<std::size_t>(k)] * pw;
        pw = pw * a;
    }
    CHECK(acc.is_zero());
}

TEST_CASE("rational roots with multiplicity and deflation") {
    // (x-1)^2 (x+4) (x^2+1): rational part should strip three roots.
    Poly p = Poly::linear_root(Rational(1)) * Poly::linear_root(Rational(1)) *
             Poly::linear_root(Rational(-4)) * Poly({Rational(1), Rational(0), Rational(1)});
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == std::make_pair(Rational(1), 2));
    CHECK(rr.roots[1] == std::make_pair(Rational(-4), 1));
    CHECK(rr.remainder.degree() == 2);
    CHECK(rr.remainder.eval(Rational(0)) != Rational(0));
    // Non-integer rational roots: (2x-3)(3x+1).
    Poly q = Poly({Rational(-3), Rational(2)}) * Poly({Rational(1), Rational(3)});
    auto rq = rational_roots(q);
    REQUIRE(rq.roots.size() == 2);
    CHECK(rq.roots[0].first == Rational(3, 2));
    CHECK(rq.roots[1].first == Rational(-1, 3));
    // Zero roots are collected too: x^2 (x - 5).
    Poly z = Poly({Rational(0), Rational(0), Rational(-5), Rational(1)});
    auto rz = rational_roots(z);
    REQUIRE(rz.roots.size() == 2);
    CHECK(rz.roots[0] == std::make_pair(Rational(5), 1));
    CHECK(rz.roots[1] == std::make_pair(Rational(0), 2));
}

TEST_CASE("rref, rank, nullspace, solve, inverse") {
    RatMatrix a = mat_from_longs(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
    CHECK(rank(a) == 2);
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    RatVector prod = a * ns[0];
    CHECK(is_zero(prod));

    RatMatrix b = mat_from_longs(2, 2, {2, 1, 1, 1});
    RatMatrix binv = inverse(b);
    CHECK((b * binv) == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(a), DomainError);

    RatVector rhs{Rational(3), Rational(6), Rational(2)};
    auto sol = solve_linear(a, rhs);
    REQUIRE(sol.has_value());
    RatVector check = a * *sol;
    CHECK(check[0] == Rational(3));
    CHECK(check[2] == Rational(2));
    RatVector bad{Rational(3), Rational(7), Rational(2)};  // contradicts row 2 = 2*row 1
    CHECK_FALSE(solve_linear(a, bad).has_value());
}

TEST_CASE("reference five-type matrix has all-rational spectrum") {
    RatMatrix a = mat_from(5, refdata::kBinaryA);
    Poly p = char_poly(a);
    auto rr = rational_roots(p);
    CHECK(rr.remainder.degree() == 0);
    std::vector<std::pair<Rational, int>> expect = {
        {Rational(1), 1}, {Rational(0), 1}, {Rational(-2), 1}, {Rational(-3), 1}, {Rational(-4), 1}};
    CHECK(rr.roots == expect);
    // Perron eigenvector from the exact nullspace, normalized against the
    // activity vector, matches the stored one.
    RatMatrix shifted = a;
    for (std::size_t i = 0; i < 5; ++i) shifted(i, i) -= Rational(1);
    auto ns = nullspace(shifted);
    REQUIRE(ns.size() == 1);
    RatVector act = vec_from(5, refdata::kBinaryActivities);
    Rational scale = dot(act, ns[0]);
    RatVector v1 = vec_from(5, refdata::kBinaryV1);
    for (std::size_t i = 0; i < 5; ++i) CHECK(ns[0][i] / scale == v1[i]);
}

TEST_CASE("numeric eigenvalues with polish") {
    MatR a(2, 2);
    a << -1.0L, 3.0L, 2.0L, -2.0L;
    Poly p({Rational(-4), Rational(3), Rational(1)});
    auto vals = numeric_eigen(a, &p);
    REQUIRE(vals.size() == 2);
    CHECK(std::abs(vals[0] - ComplexVal(1, 0)) < 1e-15L);
    CHECK(std::abs(vals[1] - ComplexVal(-4, 0)) < 1e-15L);

    MatR rot(2, 2);
    rot << 0.0L, 1.0L, -1.0L, 0.0L;
    auto iv = numeric_eigen(rot);
    CHECK(std::abs(iv[0] - ComplexVal(0, 1)) < 1e-15L);
    CHECK(std::abs(iv[1] - ComplexVal(0, -1)) < 1e-15L);

    MatR bad(2, 3);
    bad.setZero();
    CHECK_THROWS_AS(numeric_eigen(bad), DimensionError);
}

TEST_CASE("minimum singular value") {
    MatR id = MatR::Identity(3, 3);
    CHECK(std::abs(min_singular_value(id) - 1.0L) < 1e-15L);
    MatR sing(2, 2);
    sing << 1.0L, 2.0L, 2.0L, 4.0L;
    CHECK(min_singular_value(sing) < 1e-15L);
}

TEST_CASE("exact Lyapunov solve on closed-form cases") {
    // Scalar: -3/2 x + x (-3/2) + 3 = 0  =>  x = 1.
    RatMatrix f1(1, 1), c1(1, 1);
    f1(0, 0) = Rational(-3, 2);
    c1(0, 0) = Rational(3);
    RatMatrix x1 = solve_lyapunov_exact(f1, c1);
    CHECK(x1(0, 0) == Rational(1));

    // Diagonal: F = diag(-1,-2), C = I  =>  X = diag(1/2, 1/4).
    RatMatrix f2 = mat_from_longs(2, 2, {-1, 0, 0, -2});
    RatMatrix c2 = RatMatrix::identity(2);
    RatMatrix x2 = solve_lyapunov_exact(f2, c2);
    CHECK(x2(0, 0) == Rational(1, 2));
    CHECK(x2(1, 1) == Rational(1, 4));
    CHECK(x2(0, 1) == Rational(0));

    // Dense non-normal case: verify by exact substitution.
    RatMatrix f3 = mat_from_longs(3, 3, {-2, 1, 0, 0, -1, 3, 1, 0, -5});
    f3(0, 1) = Rational(1, 3);
    RatMatrix c3 = mat_from_longs(3, 3, {2, 1, 0, 1, 4, -1, 0, -1, 6});
    RatMatrix x3 = solve_lyapunov_exact(f3, c3);
    CHECK(x3.is_symmetric());
    RatMatrix res = f3 * x3 + x3 * f3.transpose() + c3;
    CHECK(res.is_zero());
}

TEST_CASE("numeric Lyapunov agrees with exact") {
    RatMatrix f = mat_from_longs(3, 3, {-2, 1, 0, 0, -1, 3, 1, 0, -5});
    RatMatrix c = mat_from_longs(3, 3, {2, 1, 0, 1, 4, -1, 0, -1, 6});
    RatMatrix xe = solve_lyapunov_exact(f, c);
    MatR xn = solve_lyapunov_numeric(to_real(f), to_real(c));
    MatR diff = xn - to_real(xe);
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-15L);
    // Numeric residual of the numeric solution.
    MatR res = to_real(f) * xn + xn * to_real(f).transpose() + to_real(c);
    CHECK(res.cwiseAbs().maxCoeff() < 1e-15L);
}

TEST_CASE("singular Lyapunov pencils are rejected") {
    RatMatrix f = mat_from_longs(2, 2, {1, 0, 0, -1});  // 1 + (-1) = 0
    RatMatrix c = RatMatrix::identity(2);
    CHECK_THROWS_AS(solve_lyapunov_exact(f, c), DomainError);
    CHECK_THROWS_AS(solve_lyapunov_numeric(to_real(f), to_real(c)), DomainError);
    RatMatrix f0 = mat_from_longs(1, 1, {0});  // 0 + 0 = 0
    CHECK_THROWS_AS(solve_lyapunov_exact(f0, RatMatrix::identity(1)), DomainError);
    // Asymmetric right-hand side is a caller error.
    RatMatrix f1 = mat_from_longs(2, 2, {-1, 0, 0, -2});
    RatMatrix casym = mat_from_longs(2, 2, {1, 2, 0, 1});
    CHECK_THROWS_AS(solve_lyapunov_exact(f1, casym), DomainError);
}

TEST_CASE("rational reconstruction from dyadic approximations") {
    Rational target(355, 113);
    Rational noisy = target + Rational(mpz_class(1), mpz_class(1) << 100);
    auto rec = reconstruct_rational(noisy);
    REQUIRE(rec.has_value());
    CHECK(*rec == target);
    Rational below = target - Rational(mpz_class(3), mpz_class(1) << 90);
    rec = reconstruct_rational(below);
    REQUIRE(rec.has_value());
    CHECK(*rec == target);
    // Exact small rationals come back unchanged.
    rec = reconstruct_rational(Rational(-7, 3));
    REQUIRE(rec.has_value());
    CHECK(*rec == Rational(-7, 3));
}
