#pragma once

#include <utility>
#include <vector>

#include "polyurn/rational.hpp"

namespace polyurn {

// Univariate polynomial with exact rational coefficients, ascending order:
// c[0] + c[1] x + ... + c[deg] x^deg.  The zero polynomial is stored as {0}
// and reports degree -1.  Leading coefficient is never zero otherwise.
class Poly {
public:
    Poly() : c_{Rational(0)} {}
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    // x - r
    static Poly linear_root(const Rational& r);

    long degree() const;
    bool is_zero() const { return degree() < 0; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly derivative() const;
    Poly monic() const;  // throws DomainError on the zero polynomial

    // Exact Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Quotient of an exact division; throws DomainError on nonzero remainder.
    Poly exact_divide(const Poly& d) const;

    // Monic gcd.
    static Poly gcd(Poly a, Poly b);

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace polyurn
