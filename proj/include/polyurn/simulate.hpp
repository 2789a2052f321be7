#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyurn/models.hpp"
#include "polyurn/serialize.hpp"

namespace polyurn {

// Counter-based pseudo-random stream: output k of stream (seed, id) is a
// pure function of (seed, id, k), so trials are reproducible independently
// of execution order and thread count.
class SplitStream {
public:
    SplitStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    // Uniform draw from [0, bound); unbiased via threshold rejection.
    // Throws DomainError for bound == 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Census of one tree.
struct TreeStats {
    long n = 0;
    long two_protected = 0;  // non-leaf, no child is a leaf
    long one_protected = 0;  // non-leaf internal nodes
    long leaves = 0;         // internal, all children external (or none)
    long internal = 0;       // nodes holding at least one key
    std::vector<long> key_count_profile;  // [i] = positions holding i keys, i < m
};

// Field lookup by statistic name ("two_protected", "one_protected",
// "leaves", "internal").  Throws SpecError for unknown names.
long stat_by_name(const TreeStats& s, const std::string& name);

// Random m-ary search tree grown by uniform gap choice.  Keys are never
// materialized: a node only records how many it holds, which determines the
// shape distribution exactly.  Node slots live in an index arena; every node
// carries the gap count of its subtree so an insertion descends in O(depth).
class MSTree {
public:
    explicit MSTree(std::size_t m);  // throws DomainError for m < 2

    std::size_t arity() const { return m_; }
    long key_count() const { return n_; }
    long gap_count() const { return n_ + 1; }

    // Keeps allocated capacity; resets to the empty tree.
    void clear();

    // Inserts one key into gap `rank` (symmetric order, 0-based).  Throws
    // DomainError unless 0 <= rank <= key_count().
    void insert_at_gap(long rank);

    // Index of the node whose gap has this rank; no mutation.
    std::size_t gap_node(long rank) const;

    TreeStats stats() const;

    // Arena introspection (stable indices; root is node 0).
    std::size_t node_count() const { return arena_.size(); }
    long keys_of(std::size_t idx) const { return arena_[idx].keys; }
    std::int64_t parent_of(std::size_t idx) const { return arena_[idx].parent; }
    bool is_full(std::size_t idx) const { return arena_[idx].first_child >= 0; }
    std::size_t child_of(std::size_t idx, std::size_t slot) const;
    // Internal node with no internal children.
    bool is_leaf(std::size_t idx) const;

private:
    struct Slot {
        long keys = 0;
        std::int64_t parent = -1;
        std::int64_t first_child = -1;
        long subtree_gaps = 1;
    };

    std::size_t m_;
    long n_ = 0;
    std::vector<Slot> arena_;
};

// Canonical composition-type table with reverse lookup.
struct TypeIndex {
    explicit TypeIndex(std::size_t m);
    std::size_t size() const { return types.size(); }
    // Throws DomainError for compositions outside the table.
    std::size_t index_of(const std::vector<long>& k) const;

    std::size_t m;
    std::vector<SmallTreeType> types;
    std::map<std::vector<long>, std::size_t> position;
};

// Cuts every edge joining two internal non-leaves and counts the resulting
// small trees per composition type: entry t = number of non-leaf nodes whose
// young (external or leaf) children form composition types[t].  Requires
// key_count >= m so the root itself is a non-leaf.
std::vector<long> forest_decompose(const MSTree& tree, const TypeIndex& index);

// Streaming moment accumulator (count/mean/M2..M4 plus an integer histogram
// while every observed value is integral).  Merging is associative and
// order-independent up to floating rounding.
class SimStats {
public:
    explicit SimStats(std::string name = "");

    void add(double x);
    void merge(const SimStats& other);  // names must agree; throws SpecError

    const std::string& name() const { return name_; }
    long long count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const;      // sample variance, 0 below two observations
    double std_error() const;     // sqrt(variance / count)
    double skewness() const;
    double excess_kurtosis() const;
    double min() const { return min_; }
    double max() const { return max_; }

    // Integer value counts; empty once any non-integral value was added.
    const std::map<long long, long long>& histogram() const { return histogram_; }
    bool histogram_valid() const { return histogram_valid_; }

    friend Json json_of(const SimStats& s);
    friend SimStats sim_stats_from_json(const Json& j);

private:
    std::string name_;
    long long count_ = 0;
    double mean_ = 0, m2_ = 0, m3_ = 0, m4_ = 0;
    double min_ = 0, max_ = 0;
    std::map<long long, long long> histogram_;
    bool histogram_valid_ = true;
};

SimStats sim_stats_from_json(const Json& j);

// CSV surface: one row per statistic with the run context attached.
std::string sim_stats_csv_header();
std::string sim_stats_csv_row(const SimStats& s, std::size_t m, long n, std::uint64_t seed);

// Monte Carlo over freshly grown trees: trial t draws from stream (seed, t),
// inserts n keys, and records every requested statistic.  Deterministic in
// (seed, n, trials).  Throws SpecError for unknown statistic names,
// DomainError for n < 1 or trials < 1.
std::map<std::string, SimStats> run_mc_tree(std::size_t m, long n, long trials,
                                            std::uint64_t seed,
                                            const std::vector<std::string>& statistics);

// Monte Carlo over the ball process itself: starts from the bundle's start
// state and draws balls proportionally to activity until the tree the urn
// mirrors would hold n keys.  Statistics are the bundle's functionals,
// evaluated exactly on the final state.  Sampling is integer-exact (no
// floating point in the dynamics).
std::map<std::string, SimStats> run_mc_urn(const ModelBundle& bundle, long n, long trials,
                                           std::uint64_t seed,
                                           const std::vector<std::string>& functionals);

// Exact distribution of one statistic at a fixed key count.
struct ExactDist {
    long n = 0;
    std::map<long, Rational> pmf;

    Rational mean() const;
    Rational variance() const;
    Rational total() const;  // must be 1
    bool operator==(const ExactDist&) const = default;
};

Json json_of(const ExactDist& d);
ExactDist exact_dist_from_json(const Json& j);

// Exhaustive enumeration of all gap-choice sequences (n! paths at depth n),
// aggregated into the exact distribution of the statistic for every
// 1 <= n <= n_max.  Throws CapError for n_max > 9.
std::map<long, ExactDist> exact_small_n(std::size_t m, long n_max, const std::string& statistic);

// Grows one tree key by key and checks, from the m-th key on, that every
// observed forest transition is a legal outcome of the drawn composition
// type's replacement rule.
struct ConsistencyReport {
    long steps_checked = 0;
    std::optional<std::string> first_violation;
    bool ok() const { return !first_violation.has_value(); }
};

ConsistencyReport urn_tree_consistency(std::size_t m, long n, std::uint64_t seed);

}  // namespace polyurn
