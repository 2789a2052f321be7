#include "polyurn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "polyurn/errors.hpp"
#include "polyurn/exact_linalg.hpp"

namespace polyurn {

namespace {

RatMatrix shifted(const RatMatrix& a, const Rational& lambda) {
    RatMatrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i) s(i, i) -= lambda;
    return s;
}

// Identify lambda1 when the urn is not balanced: largest rational root of
// the characteristic polynomial, confirmed dominant against the numeric
// spectrum.
Rational lambda1_from_roots(const RatMatrix& a, const std::vector<ComplexVal>& numeric,
                            const SpectralOptions& opts) {
    if (a.rows() > opts.exact_spectrum_cap)
        throw CapError("spectral: unbalanced urn of dimension " + std::to_string(a.rows()) +
                       " exceeds the exact-spectrum cap " +
                       std::to_string(opts.exact_spectrum_cap));
    auto rr = rational_roots(char_poly(a));
    if (rr.roots.empty())
        throw DomainError("spectral: the largest eigenvalue is not rational");
    const Rational lambda1 = rr.roots.front().first;  // roots sorted descending
    const Real l1 = lambda1.to_long_double();
    for (const auto& z : numeric)
        if (z.real() > l1 + 1e-9L)
            throw DomainError("spectral: the largest eigenvalue is not rational");
    if (lambda1.sign() <= 0)
        throw DomainError("spectral: largest eigenvalue " + lambda1.str() + " is not positive");
    return lambda1;
}

}  // namespace

SpectralData spectral(const UrnSpec& spec, const SpectralOptions& opts) {
    spec.validate();
    const RatMatrix a = build_matrix_A(spec);
    const std::size_t q = spec.q;
    SpectralData sd;

    const MatR a_num = to_real(a);
    std::vector<ComplexVal> numeric = numeric_eigen(a_num);

    std::optional<Rational> s = spec.step_increment ? spec.step_increment
                                                    : spec.derive_step_increment();
    if (s && s->sign() > 0) {
        sd.lambda1 = *s;
        // Balanced urn: the activity vector is an exact left eigenvector.
        RatVector left = mul_vec_mat(spec.activities, a);
        for (std::size_t j = 0; j < q; ++j)
            if (left[j] != sd.lambda1 * spec.activities[j])
                throw DomainError("spectral: balance violated at type " + std::to_string(j + 1));
        sd.u1 = spec.activities;
    } else {
        sd.lambda1 = lambda1_from_roots(a, numeric, opts);
    }

    // Right Perron vector from the exact nullspace, normalized a . v1 = 1.
    auto right = nullspace(shifted(a, sd.lambda1));
    if (right.empty())
        throw DomainError("spectral: " + sd.lambda1.str() + " is not an eigenvalue");
    if (right.size() > 1)
        throw DomainError("spectral: largest eigenvalue " + sd.lambda1.str() +
                          " is not simple (eigenspace dimension " +
                          std::to_string(right.size()) + ")");
    Rational scale = dot(spec.activities, right[0]);
    if (scale.is_zero())
        throw DomainError("spectral: Perron vector is orthogonal to the activities");
    sd.v1.resize(q);
    for (std::size_t i = 0; i < q; ++i) sd.v1[i] = right[0][i] / scale;

    if (sd.u1.empty()) {
        auto left = nullspace(shifted(a.transpose(), sd.lambda1));
        if (left.size() != 1)
            throw DomainError("spectral: largest eigenvalue " + sd.lambda1.str() +
                              " is not simple on the left");
        Rational pairing = dot(left[0], sd.v1);
        if (pairing.is_zero())
            throw DomainError("spectral: left and right Perron vectors are orthogonal");
        sd.u1.resize(q);
        for (std::size_t i = 0; i < q; ++i) sd.u1[i] = left[0][i] / pairing;
    }

    // Exact spectrum for modest sizes.  The root search is an enhancement:
    // if its internal caps trip (wild coefficient growth), fall back to the
    // numeric-only view instead of failing.
    std::vector<std::pair<Rational, int>> exact_roots;
    bool have_char_poly = false;
    if (q <= opts.exact_spectrum_cap) {
        try {
            auto rr = rational_roots(char_poly(a));
            exact_roots = rr.roots;
            sd.spectrum_exact = rr.remainder.degree() <= 0;
            have_char_poly = true;
        } catch (const CapError&) {
            sd.spectrum_exact = false;
        }
    }

    sd.eigenvalues.resize(q);
    for (std::size_t i = 0; i < q; ++i) sd.eigenvalues[i].value = numeric[i];
    // Snap numeric values onto known rational eigenvalues (including lambda1
    // itself for large urns, where the balance argument supplies it).
    std::vector<std::pair<Rational, int>> to_tag = exact_roots;
    if (!have_char_poly) to_tag.push_back({sd.lambda1, 1});
    std::vector<bool> tagged(q, false);
    for (const auto& [root, mult] : to_tag) {
        const Real rv = root.to_long_double();
        for (int occurrence = 0; occurrence < mult; ++occurrence) {
            std::size_t best = q;
            Real best_dist = 0;
            for (std::size_t i = 0; i < q; ++i) {
                if (tagged[i]) continue;
                Real d = std::abs(sd.eigenvalues[i].value - ComplexVal(rv, 0));
                if (best == q || d < best_dist) {
                    best = i;
                    best_dist = d;
                }
            }
            if (best == q) break;
            tagged[best] = true;
            sd.eigenvalues[best].exact = root;
            sd.eigenvalues[best].value = ComplexVal(rv, 0);
        }
    }
    std::sort(sd.eigenvalues.begin(), sd.eigenvalues.end(),
              [](const EigenvalueInfo& x, const EigenvalueInfo& y) {
                  if (x.value.real() != y.value.real()) return x.value.real() > y.value.real();
                  return x.value.imag() > y.value.imag();
              });

    // Algebraic simplicity of lambda1.
    if (sd.spectrum_exact || have_char_poly) {
        for (const auto& [root, mult] : exact_roots)
            if (root == sd.lambda1 && mult != 1)
                throw DomainError("spectral: largest eigenvalue " + sd.lambda1.str() +
                                  " has algebraic multiplicity " + std::to_string(mult));
    } else {
        const Real l1 = sd.lambda1.to_long_double();
        const Real tol = 1e-8L * (1.0L + a_num.cwiseAbs().maxCoeff());
        int close = 0;
        for (const auto& info : sd.eigenvalues)
            if (std::abs(info.value - ComplexVal(l1, 0)) < tol) ++close;
        if (close != 1)
            throw DomainError("spectral: largest eigenvalue " + sd.lambda1.str() +
                              " is not numerically simple (" + std::to_string(close) +
                              " eigenvalues nearby)");
    }

    // Diagonalizability.
    if (sd.spectrum_exact) {
        bool diag = true;
        for (const auto& [root, mult] : exact_roots) {
            if (mult == 1) continue;
            std::size_t nullity = q - rank(shifted(a, root));
            if (nullity != static_cast<std::size_t>(mult)) diag = false;
        }
        sd.diagonalizable = diag;
    } else if (q <= opts.diagonalizable_cap) {
        // Numeric test: cluster close eigenvalues, compare the cluster size
        // with the numeric nullity at the cluster center.
        const Real scale_n = 1.0L + a_num.cwiseAbs().maxCoeff();
        const Real cluster_tol = 1e-7L * scale_n;
        bool diag = true;
        std::size_t i = 0;
        while (i < q) {
            std::size_t j = i + 1;
            while (j < q &&
                   std::abs(sd.eigenvalues[j].value - sd.eigenvalues[i].value) < cluster_tol)
                ++j;
            const std::size_t size = j - i;
            if (size >= 2) {
                ComplexVal center(0, 0);
                for (std::size_t k = i; k < j; ++k) center += sd.eigenvalues[k].value;
                center /= static_cast<Real>(size);
                MatC shifted_num = a_num.cast<ComplexVal>();
                for (std::size_t d = 0; d < q; ++d)
                    shifted_num(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)) -=
                        center;
                Eigen::JacobiSVD<MatC> svd(shifted_num);
                std::size_t nullity = 0;
                for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
                    if (svd.singularValues()(k) < 1e-9L * scale_n) ++nullity;
                if (nullity != size) diag = false;
            }
            i = j;
        }
        sd.diagonalizable = diag;
    }

    // Exact dual bases.
    if (opts.want_dual_bases && sd.spectrum_exact && sd.diagonalizable == true) {
        DualBases db;
        const RatMatrix at = a.transpose();
        for (const auto& [root, mult] : exact_roots) {
            if (root == sd.lambda1) {
                db.perron_index = db.lambda_of.size();
                db.lambda_of.push_back(root);
                db.v_cols.push_back(sd.v1);
                db.u_rows.push_back(sd.u1);
                continue;
            }
            auto vs = nullspace(shifted(a, root));
            auto us = nullspace(shifted(at, root));
            if (vs.size() != static_cast<std::size_t>(mult) || us.size() != vs.size())
                throw DomainError("spectral: eigenspace dimension mismatch at " + root.str());
            // Biorthogonalize within the eigenspace: G = U V, U := G^{-1} U.
            const std::size_t k = vs.size();
            RatMatrix g(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) g(r, c) = dot(us[r], vs[c]);
            RatMatrix ginv = inverse(g);  // invertible for a semisimple eigenvalue
            for (std::size_t r = 0; r < k; ++r) {
                RatVector u(q);
                for (std::size_t c = 0; c < k; ++c)
                    if (!ginv(r, c).is_zero()) u = u + ginv(r, c) * us[c];
                db.lambda_of.push_back(root);
                db.v_cols.push_back(vs[r]);
                db.u_rows.push_back(std::move(u));
            }
        }
        sd.dual_bases = std::move(db);
    }
    return sd;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::normal: return "normal";
        case Regime::boundary: return "boundary";
        case Regime::not_normal: return "not-normal";
    }
    return "?";
}

Regime classify_regime(const SpectralData& sd) {
    // Skip exactly one instance of lambda1 (the Perron eigenvalue).
    std::size_t perron = sd.eigenvalues.size();
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i)
        if (sd.eigenvalues[i].exact && *sd.eigenvalues[i].exact == sd.lambda1) {
            perron = i;
            break;
        }
    if (perron == sd.eigenvalues.size()) {
        const Real l1 = sd.lambda1.to_long_double();
        Real best = 0;
        for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
            Real d = std::abs(sd.eigenvalues[i].value - ComplexVal(l1, 0));
            if (perron == sd.eigenvalues.size() || d < best) {
                perron = i;
                best = d;
            }
        }
    }
    const Rational half = sd.lambda1 / Rational(2);
    const Real half_num = half.to_long_double();
    bool boundary = false;
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        if (i == perron) continue;
        const auto& info = sd.eigenvalues[i];
        if (info.exact) {
            if (*info.exact == half) {
                boundary = true;
            } else if (*info.exact > half) {
                return Regime::not_normal;
            }
            continue;
        }
        const Real d = info.value.real() - half_num;
        if (d > 1e-9L) return Regime::not_normal;
        if (d >= -1e-9L) boundary = true;
    }
    return boundary ? Regime::boundary : Regime::normal;
}

}  // namespace polyurn
