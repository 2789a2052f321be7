#include "polyurn/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "polyurn/errors.hpp"
#include "polyurn/exact_linalg.hpp"

namespace polyurn {

namespace {

std::string arity_str(std::size_t m) { return std::to_string(m); }

}  // namespace

long SmallTreeType::activity() const {
    long w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) w += static_cast<long>(i + 1) * k[i];
    return w;
}

long SmallTreeType::leaf_count() const {
    long l = 0;
    for (std::size_t i = 1; i < k.size(); ++i) l += k[i];
    return l;
}

bool SmallTreeType::is_protected() const {
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] != 0) return false;
    return true;
}

std::string SmallTreeType::label() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ',';
        os << k[i];
    }
    os << ')';
    return os.str();
}

std::vector<SmallTreeType> enumerate_types(std::size_t m) {
    if (m < 2)
        throw DomainError("fringe configurations need arity m >= 2, got " + arity_str(m));
    std::vector<SmallTreeType> out;
    std::vector<long> k(m, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long budget) {
        if (pos == m) {
            out.push_back(SmallTreeType{k});
            return;
        }
        for (long v = budget; v >= 0; --v) {
            k[pos] = v;
            rec(pos + 1, budget - v);
        }
        k[pos] = 0;
    };
    rec(0, static_cast<long>(m));
    // The all-external full node (m,0,...,0) never occurs: a node becomes
    // full at the same moment one child receives a key.  It is the first
    // vector in descending order.
    out.erase(out.begin());
    return out;
}

ModelBundle protected_urn(std::size_t m, bool override_cap) {
    if (m < 2)
        throw DomainError("the composition urn needs arity m >= 2, got " + arity_str(m));
    constexpr std::size_t kArityCap = 8;
    if (m > kArityCap && !override_cap)
        throw CapError("arity " + arity_str(m) + " expands to C(2m,m)-1 ball types, beyond the default cap m <= " +
                       std::to_string(kArityCap) + "; pass the cap override to proceed");

    auto types = enumerate_types(m);
    const std::size_t q = types.size();
    std::map<std::vector<long>, std::size_t> index;
    for (std::size_t i = 0; i < q; ++i) index.emplace(types[i].k, i);

    UrnSpec spec;
    spec.q = q;
    spec.activities.reserve(q);
    spec.labels.reserve(q);
    for (const auto& t : types) {
        spec.activities.emplace_back(t.activity());
        spec.labels.push_back(t.label());
    }

    std::vector<long> fresh(m, 0);
    fresh[0] = static_cast<long>(m) - 1;
    fresh[1] = 1;
    const std::size_t fresh_idx = index.at(fresh);

    for (std::size_t t = 0; t < q; ++t) {
        const long w = types[t].activity();
        if (w == 0) continue;
        ReplacementRule rule;
        rule.drawn = t;
        const auto& k = types[t].k;
        // The key lands in one of the i+1 gaps of a child holding i keys.
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (k[i] == 0) continue;
            std::vector<long> next = k;
            --next[i];
            ++next[i + 1];
            std::vector<long> delta(q, 0);
            --delta[t];
            ++delta[index.at(next)];
            rule.outcomes.push_back(
                {Rational(static_cast<long>(i + 1) * k[i], w), std::move(delta)});
        }
        // The key lands below a full child: that child becomes the root of
        // a fresh configuration (m-1 external children plus the new 1-key
        // node) and leaves this one.
        if (k[m - 1] > 0) {
            std::vector<long> next = k;
            --next[m - 1];
            std::vector<long> delta(q, 0);
            --delta[t];
            ++delta[index.at(next)];
            ++delta[fresh_idx];
            rule.outcomes.push_back(
                {Rational(static_cast<long>(m) * k[m - 1], w), std::move(delta)});
        }
        spec.rules.push_back(std::move(rule));
    }
    spec.step_increment = Rational(1);
    spec.validate();

    ModelBundle b;
    b.model_name = "protected";
    b.m = m;
    b.spec = std::move(spec);
    b.types = std::move(types);

    RatVector prot(q, Rational(0));
    RatVector leaves(q, Rational(0));
    for (std::size_t i = 0; i < q; ++i) {
        if (b.types[i].is_protected()) prot[i] = Rational(1);
        leaves[i] = Rational(b.types[i].leaf_count());
    }
    b.functionals.emplace("protected", std::move(prot));
    b.functionals.emplace("leaves", std::move(leaves));

    b.start_state.assign(q, 0);
    b.start_state[fresh_idx] = 1;
    b.start_keys = static_cast<long>(m);
    return b;
}

ModelBundle node_urn(std::size_t m) {
    if (m < 2)
        throw DomainError("the gap urn needs arity m >= 2, got " + arity_str(m));
    const std::size_t q = m - 1;
    UrnSpec spec;
    spec.q = q;
    spec.activities.assign(q, Rational(1));
    for (std::size_t j = 1; j <= q; ++j) spec.labels.push_back("gap-" + std::to_string(j));

    // Type j: a gap whose key completes a j-key node.  For j <= m-2 the new
    // node is still unfilled and exposes j+1 gaps of type j+1; completing an
    // (m-1)-key node fills it and exposes its m external children.
    for (std::size_t j = 1; j <= q; ++j) {
        ReplacementRule rule;
        rule.drawn = j - 1;
        std::vector<long> delta(q, 0);
        delta[j - 1] -= static_cast<long>(j);
        if (j < m - 1)
            delta[j] += static_cast<long>(j) + 1;
        else
            delta[0] += static_cast<long>(m);
        rule.outcomes.push_back({Rational(1), std::move(delta)});
        spec.rules.push_back(std::move(rule));
    }
    spec.step_increment = Rational(1);
    spec.validate();

    ModelBundle b;
    b.model_name = "nodes";
    b.m = m;
    b.spec = std::move(spec);
    b.functionals.emplace("gaps", RatVector(q, Rational(1)));
    for (std::size_t i = 1; i + 1 <= m - 1; ++i) {
        RatVector f(q, Rational(0));
        f[i] = Rational(1, static_cast<long>(i) + 1);
        b.functionals.emplace("nodes-" + std::to_string(i), std::move(f));
    }
    b.start_state.assign(q, 0);
    b.start_state[0] = 1;
    b.start_keys = 0;
    return b;
}

ModelBundle leaves_gap_urn(std::size_t m) {
    if (m < 3)
        throw DomainError("the leaf-splitting gap urn needs arity m >= 3, got " + arity_str(m));
    const std::size_t q = m;
    UrnSpec spec;
    spec.q = q;
    spec.activities.assign(q, Rational(1));
    for (std::size_t j = 1; j + 1 <= m; ++j) spec.labels.push_back("gap-" + std::to_string(j));
    spec.labels.push_back("gap-leaf");

    for (std::size_t j = 1; j <= q; ++j) {
        ReplacementRule rule;
        rule.drawn = j - 1;
        std::vector<long> delta(q, 0);
        if (j <= m - 2) {
            delta[j - 1] -= static_cast<long>(j);
            delta[j] += static_cast<long>(j) + 1;
        } else if (j == m - 1) {
            // Completing an (m-1)-key node creates a full leaf; its m gaps
            // form the dedicated type.
            delta[m - 2] -= static_cast<long>(m) - 1;
            delta[m - 1] += static_cast<long>(m);
        } else {
            // A key below a full leaf: the leaf stops being one.  Its other
            // m-1 external children become plain gaps and the new 1-key
            // child exposes two more.
            delta[m - 1] -= static_cast<long>(m);
            delta[0] += static_cast<long>(m) - 1;
            delta[1] += 2;
        }
        rule.outcomes.push_back({Rational(1), std::move(delta)});
        spec.rules.push_back(std::move(rule));
    }
    spec.step_increment = Rational(1);
    spec.validate();

    ModelBundle b;
    b.model_name = "leaves";
    b.m = m;
    b.spec = std::move(spec);
    RatVector leaves(q, Rational(0));
    for (std::size_t j = 2; j <= m; ++j) leaves[j - 1] = Rational(1, static_cast<long>(j));
    b.functionals.emplace("leaves", std::move(leaves));
    b.functionals.emplace("gaps", RatVector(q, Rational(1)));
    b.start_state.assign(q, 0);
    b.start_state[0] = 1;
    b.start_keys = 0;
    return b;
}

ModelBundle one_protected_urn(std::size_t m) {
    if (m < 2)
        throw DomainError("the once-protected urn needs arity m >= 2, got " + arity_str(m));
    const std::size_t q = m + 1;
    UrnSpec spec;
    spec.q = q;
    spec.activities.reserve(q);
    spec.activities.emplace_back(1);  // external position not below a leaf
    spec.labels.push_back("external");
    for (std::size_t i = 1; i + 1 <= m; ++i) {
        spec.activities.emplace_back(static_cast<long>(i) + 1);  // a leaf with i keys has i+1 gaps
        spec.labels.push_back("leaf-" + std::to_string(i));
    }
    spec.activities.emplace_back(0);
    spec.labels.push_back("one-protected");

    {
        ReplacementRule rule;  // an external position becomes a 1-key leaf
        rule.drawn = 0;
        std::vector<long> delta(q, 0);
        delta[0] -= 1;
        delta[1] += 1;
        rule.outcomes.push_back({Rational(1), std::move(delta)});
        spec.rules.push_back(std::move(rule));
    }
    for (std::size_t i = 1; i + 2 <= m; ++i) {  // a leaf with i < m-1 keys absorbs the key
        ReplacementRule rule;
        rule.drawn = i;
        std::vector<long> delta(q, 0);
        delta[i] -= 1;
        delta[i + 1] += 1;
        rule.outcomes.push_back({Rational(1), std::move(delta)});
        spec.rules.push_back(std::move(rule));
    }
    {
        // A key below a full leaf: the leaf gains an internal child and is
        // never a leaf again; its other m-1 external children surface.
        ReplacementRule rule;
        rule.drawn = m - 1;
        std::vector<long> delta(q, 0);
        delta[m - 1] -= 1;
        delta[1] += 1;
        delta[0] += static_cast<long>(m) - 1;
        delta[m] += 1;
        rule.outcomes.push_back({Rational(1), std::move(delta)});
        spec.rules.push_back(std::move(rule));
    }
    spec.step_increment = Rational(1);
    spec.validate();

    ModelBundle b;
    b.model_name = "one-protected";
    b.m = m;
    b.spec = std::move(spec);
    RatVector once(q, Rational(0));
    once[m] = Rational(1);
    RatVector leaves(q, Rational(0));
    for (std::size_t i = 1; i + 1 <= m; ++i) leaves[i] = Rational(1);
    RatVector internal = leaves;
    internal[m] = Rational(1);
    b.functionals.emplace("one_protected", std::move(once));
    b.functionals.emplace("leaves", std::move(leaves));
    b.functionals.emplace("internal", std::move(internal));
    b.start_state.assign(q, 0);
    b.start_state[0] = 1;
    b.start_keys = 0;
    return b;
}

ModelBundle make_model(const std::string& name, std::size_t m, bool override_cap) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == "protected" || n == "two_protected" || n == "two-protected")
        return protected_urn(m, override_cap);
    if (n == "nodes") return node_urn(m);
    if (n == "leaves") return leaves_gap_urn(m);
    if (n == "one_protected" || n == "one-protected" || n == "oneprotected")
        return one_protected_urn(m);
    throw SpecError("unknown model '" + name +
                    "'; expected one of: protected, nodes, leaves, one_protected");
}

ClosedForms closed_forms(std::size_t m) {
    if (m < 3)
        throw DomainError("closed forms are stated for m >= 3, got " + arity_str(m));
    Rational h(0);
    for (std::size_t k = 1; k <= m; ++k) h += Rational(1, static_cast<long>(k));

    Rational telescoped(0);
    for (std::size_t k = 2; k <= m; ++k)
        telescoped += Rational(1, static_cast<long>(k) * (static_cast<long>(k) + 1));
    const Rational closed(static_cast<long>(m) - 1, 2 * (static_cast<long>(m) + 1));
    if (telescoped != closed)
        throw DomainError("telescoping identity failed at m = " + arity_str(m));

    ClosedForms cf;
    cf.harmonic = h;
    const Rational denom = h - Rational(1);
    cf.mu_leaves = closed / denom;
    cf.mu_one_protected = Rational(1, static_cast<long>(m) + 1) / denom;
    return cf;
}

Poly node_char_poly(std::size_t m) {
    if (m < 2)
        throw DomainError("the gap polynomial needs arity m >= 2, got " + arity_str(m));
    Poly prod = Poly::constant(Rational(1));
    for (std::size_t i = 1; i + 1 <= m; ++i)
        prod = prod * Poly({Rational(static_cast<long>(i)), Rational(1)});
    Rational fact(1);
    for (std::size_t i = 2; i <= m; ++i) fact = fact * Rational(static_cast<long>(i));
    return prod - Poly::constant(fact);
}

namespace {

// Evaluate prod_{i=1}^{m-1}(z+i) - m! and its derivative in product form,
// which stays well conditioned where the expanded coefficients do not.
void eval_product_form(std::size_t m, ComplexVal z, ComplexVal& p, ComplexVal& dp) {
    ComplexVal prod(1), dsum(0);
    for (std::size_t i = 1; i + 1 <= m; ++i) {
        const ComplexVal f = z + static_cast<Real>(i);
        prod *= f;
        dsum += ComplexVal(1) / f;
    }
    Real mfact = 1;
    for (std::size_t i = 2; i <= m; ++i) mfact *= static_cast<Real>(i);
    p = prod - mfact;
    dp = prod * dsum;
}

ComplexVal polish_product_root(std::size_t m, ComplexVal z) {
    ComplexVal best = z;
    Real best_abs = std::numeric_limits<Real>::infinity();
    for (int it = 0; it < 30; ++it) {
        ComplexVal p, dp;
        eval_product_form(m, z, p, dp);
        if (std::abs(p) < best_abs) {
            best_abs = std::abs(p);
            best = z;
        }
        if (std::abs(dp) == Real(0)) break;
        const ComplexVal step = p / dp;
        z -= step;
        if (std::abs(step) <= Real(1e-22L) * (Real(1) + std::abs(z))) {
            ComplexVal pf, dpf;
            eval_product_form(m, z, pf, dpf);
            if (std::abs(pf) < best_abs) best = z;
            break;
        }
    }
    return best;
}

}  // namespace

SpectralCondition spectral_condition(std::size_t m) {
    if (m < 2)
        throw DomainError("the spectral condition needs arity m >= 2, got " + arity_str(m));
    SpectralCondition sc;
    if (m == 2) {
        sc.holds = true;  // the polynomial is x - 1: no second root to weigh
        return sc;
    }
    const MatR aw = to_real(build_matrix_A(node_urn(m).spec));
    auto roots = numeric_eigen(aw);
    for (auto& z : roots) z = polish_product_root(m, z);

    std::size_t perron = 0;
    Real best = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Real d = std::abs(roots[i] - ComplexVal(1));
        if (d < best) {
            best = d;
            perron = i;
        }
    }
    Real lam2 = -std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i == perron) continue;
        lam2 = std::max(lam2, roots[i].real());
    }
    sc.lambda2_re = lam2;
    sc.holds = lam2 < Real(0.5L);
    return sc;
}

RatMatrix node_gap_projection(std::size_t m, const std::vector<SmallTreeType>& types) {
    if (m < 2)
        throw DomainError("the gap projection needs arity m >= 2, got " + arity_str(m));
    RatMatrix t(m - 1, types.size());
    for (std::size_t c = 0; c < types.size(); ++c) {
        const auto& k = types[c].k;
        if (k.size() != m)
            throw DimensionError("gap projection: configuration arity mismatch");
        // External children and the m gaps under each full child all
        // complete 1-key nodes; each child holding j-1 keys exposes j gaps.
        t(0, c) = Rational(k[0] + static_cast<long>(m) * k[m - 1]);
        for (std::size_t j = 2; j + 1 <= m; ++j)
            t(j - 1, c) = Rational(static_cast<long>(j) * k[j - 1]);
    }
    return t;
}

RootLinkReport check_root_embedding(std::size_t m) {
    if (m < 2)
        throw DomainError("the root embedding check needs arity m >= 2, got " + arity_str(m));
    if (m > 6)
        throw CapError("the root embedding check holds dense q x q exact matrices; beyond m = 6 "
                       "(923 types) that is out of reach");
    auto bundle = protected_urn(m);
    const RatMatrix a = build_matrix_A(bundle.spec);
    const RatMatrix aw = build_matrix_A(node_urn(m).spec);
    const RatMatrix t = node_gap_projection(m, bundle.types);
    const std::size_t q = bundle.spec.q;

    RootLinkReport rep;
    const RatMatrix lhs = t * a;
    const RatMatrix rhs = aw * t;
    rep.intertwines = (lhs == rhs);
    if (!rep.intertwines) {
        for (std::size_t i = 0; i < lhs.rows() && rep.detail.empty(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                if (lhs(i, j) != rhs(i, j)) {
                    rep.detail = "T*A and AW*T differ at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1) + ": " + lhs(i, j).str() +
                                 " vs " + rhs(i, j).str();
                    break;
                }
    }

    // Each root r of the gap polynomial is carried into the big spectrum by
    // a left eigenvector: if u'AW = r u', then (u'T) A = r (u'T).  We verify
    // the transported vector directly against A, exactly for rational roots
    // and to 1e-7 otherwise.
    const Poly phi = node_char_poly(m);
    rep.roots_contained = true;
    auto fail = [&rep](const std::string& msg) {
        rep.roots_contained = false;
        if (rep.detail.empty()) rep.detail = msg;
    };

    const auto rr = rational_roots(phi);
    for (const auto& [root, mult] : rr.roots) {
        RatMatrix shifted = aw.transpose();
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= root;
        const auto basis = nullspace(shifted);
        if (basis.empty()) {
            fail("no left eigenvector of the gap matrix for its own root " + root.str());
            continue;
        }
        const RatVector w = mul_vec_mat(basis.front(), t);
        if (is_zero(w)) {
            fail("the transported eigenvector for root " + root.str() + " vanished");
            continue;
        }
        const RatVector wa = mul_vec_mat(w, a);
        bool match = true;
        for (std::size_t j = 0; j < q && match; ++j) match = (wa[j] == root * w[j]);
        if (!match)
            fail("root " + root.str() + " of the gap polynomial is not an eigenvalue of the "
                 "composition matrix");
        (void)mult;
    }

    if (rr.remainder.degree() > 0) {
        const MatR awr = to_real(aw);
        const MatR ar = to_real(a);
        const MatR tr = to_real(t);
        const auto pairs = numeric_eigen_pairs(awr.transpose());
        Real anorm = 0;
        for (Eigen::Index i = 0; i < ar.rows(); ++i) anorm = std::max(anorm, ar.row(i).template lpNorm<1>());
        auto phi_roots = numeric_eigen(awr);
        for (auto& z : phi_roots) z = polish_product_root(m, z);
        for (const auto& z : phi_roots) {
            bool is_rational_root = false;
            for (const auto& [root, mult] : rr.roots) {
                (void)mult;
                if (std::abs(z - ComplexVal(root.to_long_double())) < Real(1e-6L))
                    is_rational_root = true;
            }
            if (is_rational_root) continue;
            std::size_t best = 0;
            Real bd = std::numeric_limits<Real>::infinity();
            for (std::size_t i = 0; i < pairs.values.size(); ++i) {
                const Real d = std::abs(pairs.values[i] - z);
                if (d < bd) {
                    bd = d;
                    best = i;
                }
            }
            const VecC u = pairs.vectors.col(static_cast<Eigen::Index>(best));
            const VecC w = tr.transpose().cast<ComplexVal>() * u;
            const Real wnorm = w.template lpNorm<Eigen::Infinity>();
            const VecC resid = ar.transpose().cast<ComplexVal>() * w - z * w;
            const Real rnorm = resid.template lpNorm<Eigen::Infinity>();
            if (!(rnorm <= Real(1e-7L) * (anorm + std::abs(z)) * wnorm)) {
                std::ostringstream os;
                os << "gap-polynomial root " << static_cast<double>(z.real()) << "+"
                   << static_cast<double>(z.imag()) << "i is not certified in the composition "
                   << "spectrum (residual " << static_cast<double>(rnorm) << ")";
                fail(os.str());
            }
        }
    }
    return rep;
}

std::vector<std::vector<long>> reference_type_order(std::size_t m) {
    if (m == 2)
        return {{0, 2}, {1, 1}, {0, 1}, {1, 0}, {0, 0}};
    if (m == 3)
        return {{0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1},
                {0, 1, 1}, {1, 2, 0}, {2, 0, 1}, {0, 2, 0}, {1, 0, 1}, {2, 1, 0}, {0, 0, 1},
                {1, 1, 0}, {0, 1, 0}, {2, 0, 0}, {1, 0, 0}, {0, 0, 0}};
    throw DomainError("a reference type order is recorded only for m = 2 and m = 3");
}

std::vector<std::size_t> reference_permutation(std::size_t m) {
    const auto ref = reference_type_order(m);
    const auto types = enumerate_types(m);
    std::map<std::vector<long>, std::size_t> index;
    for (std::size_t i = 0; i < types.size(); ++i) index.emplace(types[i].k, i);
    std::vector<std::size_t> perm;
    perm.reserve(ref.size());
    for (const auto& k : ref) {
        auto it = index.find(k);
        if (it == index.end())
            throw DomainError("reference order lists a configuration outside the canonical set");
        perm.push_back(it->second);
    }
    return perm;
}

RatMatrix apply_permutation(const RatMatrix& mat, const std::vector<std::size_t>& perm) {
    if (mat.rows() != perm.size() || mat.cols() != perm.size())
        throw DimensionError("permutation size does not match the matrix");
    RatMatrix out(perm.size(), perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r)
        for (std::size_t s = 0; s < perm.size(); ++s) out(r, s) = mat(perm[r], perm[s]);
    return out;
}

RatVector apply_permutation(const RatVector& vec, const std::vector<std::size_t>& perm) {
    if (vec.size() != perm.size())
        throw DimensionError("permutation size does not match the vector");
    RatVector out(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) out[r] = vec[perm[r]];
    return out;
}

}  // namespace polyurn
