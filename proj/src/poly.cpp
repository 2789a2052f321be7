#include "polyurn/poly.hpp"

#include <algorithm>

#include "polyurn/errors.hpp"

namespace polyurn {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rational(0));
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

void Poly::trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

long Poly::degree() const {
    if (c_.size() == 1 && c_[0].is_zero()) return -1;
    return static_cast<long>(c_.size()) - 1;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() == 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of the zero polynomial");
    const Rational inv = leading().inverse();
    std::vector<Rational> r(c_);
    for (auto& e : r) e *= inv;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<Rational> rem(c_);
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const Rational lead_inv = d.leading().inverse();
    for (long k = degree() - d.degree(); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k + d.degree());
        Rational factor = rem[top] * lead_inv;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem[static_cast<std::size_t>(k) + i] -= factor * d.c_[i];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_divide(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DomainError("polynomial division left a remainder");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

}  // namespace polyurn
