#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyurn/matrix.hpp"
#include "polyurn/poly.hpp"

namespace polyurn {

// Characteristic polynomial det(lambda*I - M), monic, by the Berkowitz
// method: division-free, exact, O(n^4) base operations.
Poly char_poly(const RatMatrix& m);

struct RationalRoots {
    // (root, multiplicity), roots in descending order.
    std::vector<std::pair<Rational, int>> roots;
    // Quotient after deflating every rational root; has no rational roots.
    Poly remainder;
};

// All rational roots of p with multiplicities, found from divisor candidates
// of the primitivized integer polynomial and removed by exact deflation, so
// that p = remainder * prod (x - root)^mult * leading-constant.
RationalRoots rational_roots(const Poly& p);

// Row-reduce m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of the right kernel {x : m x = 0}, from the reduced echelon form
// (one vector per free column, unit in that coordinate).  Empty if the
// kernel is trivial.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Solve a x = b exactly; std::nullopt if inconsistent.  If the system is
// underdetermined, free variables are set to zero.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

// Inverse of a square matrix; throws DomainError if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace polyurn
