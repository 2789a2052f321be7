#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyurn/numeric_linalg.hpp"
#include "polyurn/poly.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

// Urn models for random m-ary search trees.  Four constructions share this
// header: the composition-typed fringe urn counting protected nodes, two
// gap-typed urns (node counts, leaves), and the node-typed one-protected
// urn.

// A fringe configuration: a full node whose young children are described by
// k = (k_0,...,k_{m-1}) with k_i children holding i keys (k_0 of them
// external).  Children that have grown internal are no longer tracked.
struct SmallTreeType {
    std::vector<long> k;

    long activity() const;            // number of gaps: sum (i+1) k_i
    long leaf_count() const;          // young children holding keys: sum_{i>=1} k_i
    bool is_protected() const;        // no young keyed children at all
    std::string label() const;        // "(k0,k1,...)"
    bool operator==(const SmallTreeType&) const = default;
    bool operator<(const SmallTreeType& o) const { return k < o.k; }
};

// All valid fringe configurations for arity m, lexicographically descending
// on (k_0,...,k_{m-1}).  Excludes the unreachable all-external full node, so
// the count is C(2m, m) - 1.  Throws DomainError for m < 2.
std::vector<SmallTreeType> enumerate_types(std::size_t m);

// A fully assembled model: the urn, display/type metadata, the linear
// functionals of interest, and the tree-process start state.
struct ModelBundle {
    std::string model_name;
    std::size_t m = 0;
    UrnSpec spec;
    std::vector<SmallTreeType> types;            // composition model only
    std::map<std::string, RatVector> functionals;
    std::vector<long> start_state;               // ball counts at n0 keys
    long start_keys = 0;                         // n0
};

// Composition-typed urn over all fringe configurations.  Functionals:
// "protected" (indicator of protected configurations) and "leaves".  Start:
// one ball (m-1,1,0,...,0) after n0 = m keys.  The default cap m <= 8 keeps
// q = C(2m,m)-1 within dense-linear-algebra reach; pass override_cap to
// exceed it.
ModelBundle protected_urn(std::size_t m, bool override_cap = false);

// Gap-typed urn with one type per "gap completing a j-key node",
// j = 1..m-1; all activities 1.  Functionals: "gaps" (all ones) and
// "nodes-j" = e_j / j (count of (j-1)-key nodes) for j >= 2.
ModelBundle node_urn(std::size_t m);

// Gap-typed urn that splits off the gaps below full leaves as an m-th type.
// Functional "leaves" = sum_{j=2}^{m} e_j / j.  Requires m >= 3.
ModelBundle leaves_gap_urn(std::size_t m);

// Node-typed urn with m+1 types: external positions not under a leaf
// (activity 1), leaves with 1..m-1 keys (activities 2..m), and an inert
// type counting nodes that ceased to be leaves.  Functionals:
// "one_protected", "leaves", "internal".
ModelBundle one_protected_urn(std::size_t m);

// Lookup by CLI name; aliases: protected == two_protected/two-protected,
// one_protected == one-protected.  Throws SpecError for unknown names.
ModelBundle make_model(const std::string& name, std::size_t m, bool override_cap = false);

// Exact closed forms for the leaf and one-protected mean rates, m >= 3:
// mu = 1/(H_m - 1) times (m-1)/(2(m+1)) resp. 1/(m+1).  Also certifies the
// telescoping identity sum_{k=2}^{m} 1/(k(k+1)) = (m-1)/(2(m+1)).
struct ClosedForms {
    Rational harmonic;          // H_m
    Rational mu_leaves;
    Rational mu_one_protected;
};
ClosedForms closed_forms(std::size_t m);

// Characteristic polynomial of the node urn: prod_{i=1}^{m-1}(x+i) - m!.
Poly node_char_poly(std::size_t m);

// Whether every non-Perron root of the node-urn polynomial has real part
// below 1/2 (the condition for the Gaussian node-count law).  Roots are
// computed from the matrix and polished on the stable product form.
// lambda2_re is empty for m = 2, where 1 is the only root.
struct SpectralCondition {
    bool holds = false;
    std::optional<Real> lambda2_re;
};
SpectralCondition spectral_condition(std::size_t m);

// The integer map T with W = T X sending composition-urn counts to
// gap-type counts: row 1 sums k_0 + m k_{m-1}, row j sums j k_{j-1}.
RatMatrix node_gap_projection(std::size_t m, const std::vector<SmallTreeType>& types);

// Certifies the embedding of the node urn in the composition urn:
// T A = A_W T exactly, and every root of the node polynomial lies in the
// spectrum of A (exact containment for rational roots, 1e-7 otherwise).
// Capped at m <= 6 (the numeric spectrum of A is needed).
struct RootLinkReport {
    bool intertwines = false;
    bool roots_contained = false;
    std::string detail;  // first failure witness; empty when ok
    bool ok() const { return intertwines && roots_contained; }
};
RootLinkReport check_root_embedding(std::size_t m);

// Published type orders for m = 2 and 3 (used to compare matrices
// entry-exactly against the stored reference tables), and the permutation
// sending a reference position to its canonical index.
std::vector<std::vector<long>> reference_type_order(std::size_t m);
std::vector<std::size_t> reference_permutation(std::size_t m);

// Reindex a matrix/vector whose rows and columns follow canonical order
// into the order given by perm (entry r of the result is entry perm[r]).
RatMatrix apply_permutation(const RatMatrix& mat, const std::vector<std::size_t>& perm);
RatVector apply_permutation(const RatVector& vec, const std::vector<std::size_t>& perm);

}  // namespace polyurn
