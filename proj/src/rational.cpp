#include "polyurn/rational.hpp"

#include <cmath>
#include <ostream>

#include "polyurn/errors.hpp"

namespace polyurn {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ /= mpq_class(d);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(mpq_class(n));
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw DomainError("rational with zero denominator: " + text);
        mpq_class q(n);
        q /= mpq_class(d);
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw SpecError("unparseable rational: '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long double Rational::to_long_double() const {
    if (is_zero()) return 0.0L;
    // Compute floor(|num| * 2^k / den) with enough bits for the 64-bit
    // mantissa, then scale back.  GMP's get_d would round to 53 bits.
    mpz_class a = ::abs(v_.get_num());
    const mpz_class& b = v_.get_den();
    const long bits_a = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const long bits_b = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    const long k = 66 - (bits_a - bits_b);
    mpz_class t;
    if (k >= 0) {
        mpz_mul_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        t /= b;
    } else {
        mpz_fdiv_q_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
        t /= b;
    }
    // t has at most ~68 bits; split into 32-bit limbs that convert exactly.
    long double r = 0.0L;
    mpz_class rest = t;
    int shift = 0;
    while (rest != 0) {
        const unsigned long low = mpz_class(rest & 0xffffffff).get_ui();
        r += std::ldexp(static_cast<long double>(low), shift);
        rest >>= 32;
        shift += 32;
    }
    r = std::ldexp(r, static_cast<int>(-k));
    return sign() < 0 ? -r : r;
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(1) / *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polyurn
