#include "polyurn/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polyurn/errors.hpp"

namespace polyurn {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

SplitStream::SplitStream(std::uint64_t seed, std::uint64_t stream_id)
    : base_(mix64(seed + 0x3C6EF372FE94F82AULL) ^ mix64(stream_id * kGamma + 0xD1B54A32D192ED03ULL)) {}

std::uint64_t SplitStream::next_u64() { return mix64(base_ + (++counter_) * kGamma); }

std::uint64_t SplitStream::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("uniform draw from an empty range");
    // Reject the low region whose size is 2^64 mod bound, so every residue
    // is hit by the same number of 64-bit values.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

long stat_by_name(const TreeStats& s, const std::string& name) {
    if (name == "two_protected") return s.two_protected;
    if (name == "one_protected") return s.one_protected;
    if (name == "leaves") return s.leaves;
    if (name == "internal") return s.internal;
    throw SpecError("unknown tree statistic '" + name +
                    "' (known: two_protected, one_protected, leaves, internal)");
}

MSTree::MSTree(std::size_t m) : m_(m) {
    if (m < 2) throw DomainError("search trees need arity m >= 2");
    clear();
}

void MSTree::clear() {
    arena_.clear();
    arena_.push_back(Slot{});
    n_ = 0;
}

std::size_t MSTree::child_of(std::size_t idx, std::size_t slot) const {
    if (!is_full(idx)) throw DomainError("child_of: node has no children");
    if (slot >= m_) throw DomainError("child_of: slot out of range");
    return static_cast<std::size_t>(arena_[idx].first_child) + slot;
}

bool MSTree::is_leaf(std::size_t idx) const {
    const Slot& s = arena_[idx];
    if (s.keys == 0) return false;  // external positions are not nodes
    if (s.first_child < 0) return true;
    for (std::size_t j = 0; j < m_; ++j)
        if (arena_[static_cast<std::size_t>(s.first_child) + j].keys > 0) return false;
    return true;
}

std::size_t MSTree::gap_node(long rank) const {
    if (rank < 0 || rank > n_)
        throw DomainError("gap rank " + std::to_string(rank) + " outside [0, " +
                          std::to_string(n_) + "]");
    std::size_t idx = 0;
    long r = rank;
    while (arena_[idx].first_child >= 0) {
        const std::size_t base = static_cast<std::size_t>(arena_[idx].first_child);
        bool descended = false;
        for (std::size_t j = 0; j < m_; ++j) {
            const long g = arena_[base + j].subtree_gaps;
            if (r < g) {
                idx = base + j;
                descended = true;
                break;
            }
            r -= g;
        }
        if (!descended) throw Error("gap accounting corrupted: rank exceeds subtree gaps");
    }
    return idx;
}

void MSTree::insert_at_gap(long rank) {
    const std::size_t idx = gap_node(rank);
    arena_[idx].keys += 1;
    n_ += 1;
    if (arena_[idx].keys == static_cast<long>(m_) - 1) {
        // The node fills: its remaining gaps move into m fresh external
        // children (net one more gap, matching the new key count).
        const std::int64_t base = static_cast<std::int64_t>(arena_.size());
        for (std::size_t j = 0; j < m_; ++j) {
            Slot child;
            child.parent = static_cast<std::int64_t>(idx);
            arena_.push_back(child);
        }
        arena_[idx].first_child = base;
        arena_[idx].subtree_gaps = static_cast<long>(m_);
    } else {
        arena_[idx].subtree_gaps += 1;
    }
    for (std::int64_t p = arena_[idx].parent; p >= 0; p = arena_[static_cast<std::size_t>(p)].parent)
        arena_[static_cast<std::size_t>(p)].subtree_gaps += 1;
}

TreeStats MSTree::stats() const {
    TreeStats st;
    st.n = n_;
    st.key_count_profile.assign(m_, 0);
    for (std::size_t idx = 0; idx < arena_.size(); ++idx) {
        const Slot& s = arena_[idx];
        st.key_count_profile[static_cast<std::size_t>(s.keys)] += 1;
        if (s.keys == 0) continue;
        st.internal += 1;
        if (is_leaf(idx)) {
            st.leaves += 1;
            continue;
        }
        st.one_protected += 1;
        bool no_leaf_child = true;
        for (std::size_t j = 0; j < m_ && no_leaf_child; ++j) {
            const std::size_t c = static_cast<std::size_t>(s.first_child) + j;
            if (arena_[c].keys > 0 && is_leaf(c)) no_leaf_child = false;
        }
        if (no_leaf_child) st.two_protected += 1;
    }
    return st;
}

TypeIndex::TypeIndex(std::size_t arity) : m(arity), types(enumerate_types(arity)) {
    for (std::size_t t = 0; t < types.size(); ++t) position[types[t].k] = t;
}

std::size_t TypeIndex::index_of(const std::vector<long>& k) const {
    auto it = position.find(k);
    if (it == position.end()) {
        std::ostringstream os;
        os << "composition (";
        for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
        os << ") is not a valid fringe type for m = " << m;
        throw DomainError(os.str());
    }
    return it->second;
}

namespace {

// Composition of one non-leaf node's young children.
std::vector<long> young_composition(const MSTree& tree, std::size_t root) {
    std::vector<long> k(tree.arity(), 0);
    for (std::size_t j = 0; j < tree.arity(); ++j) {
        const std::size_t c = tree.child_of(root, j);
        const long kc = tree.keys_of(c);
        if (kc == 0)
            k[0] += 1;
        else if (tree.is_leaf(c))
            k[static_cast<std::size_t>(kc)] += 1;
        // grown (non-leaf) children root their own small trees
    }
    return k;
}

}  // namespace

std::vector<long> forest_decompose(const MSTree& tree, const TypeIndex& index) {
    if (tree.arity() != index.m)
        throw DimensionError("forest_decompose: tree arity " + std::to_string(tree.arity()) +
                             " vs type table for m = " + std::to_string(index.m));
    if (tree.key_count() < static_cast<long>(tree.arity()))
        throw DomainError("forest decomposition needs at least m keys so the root is a non-leaf");
    std::vector<long> x(index.size(), 0);
    for (std::size_t idx = 0; idx < tree.node_count(); ++idx) {
        if (tree.keys_of(idx) != static_cast<long>(tree.arity()) - 1) continue;  // not full
        if (tree.is_leaf(idx)) continue;
        x[index.index_of(young_composition(tree, idx))] += 1;
    }
    return x;
}

SimStats::SimStats(std::string name) : name_(std::move(name)) {}

void SimStats::add(double x) {
    if (histogram_valid_) {
        const double r = std::nearbyint(x);
        if (r == x && std::abs(x) < 9.0e15) {
            histogram_[static_cast<long long>(r)] += 1;
        } else {
            histogram_valid_ = false;
            histogram_.clear();
        }
    }
    if (count_ == 0) {
        min_ = max_ = x;
    } else {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }
    const long long n1 = count_;
    count_ += 1;
    const double delta = x - mean_;
    const double delta_n = delta / static_cast<double>(count_);
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * static_cast<double>(n1);
    mean_ += delta_n;
    m4_ += term1 * delta_n2 *
               static_cast<double>(count_ * count_ - 3 * count_ + 3) +
           6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
    m3_ += term1 * delta_n * static_cast<double>(count_ - 2) - 3.0 * delta_n * m2_;
    m2_ += term1;
}

void SimStats::merge(const SimStats& other) {
    if (name_ != other.name_)
        throw SpecError("merging statistics with different names: '" + name_ + "' vs '" +
                        other.name_ + "'");
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const long double na = static_cast<long double>(count_);
    const long double nb = static_cast<long double>(other.count_);
    const long double n = na + nb;
    const long double d = static_cast<long double>(other.mean_) - static_cast<long double>(mean_);
    const long double ma = m2_, mb = other.m2_;
    const long double ta = m3_, tb = other.m3_;
    const long double qa = m4_, qb = other.m4_;

    const long double mean = static_cast<long double>(mean_) + d * nb / n;
    const long double m2 = ma + mb + d * d * na * nb / n;
    const long double m3 = ta + tb + d * d * d * na * nb * (na - nb) / (n * n) +
                           3.0L * d * (na * mb - nb * ma) / n;
    const long double m4 = qa + qb +
                           d * d * d * d * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                           6.0L * d * d * (na * na * mb + nb * nb * ma) / (n * n) +
                           4.0L * d * (na * tb - nb * ta) / n;

    count_ += other.count_;
    mean_ = static_cast<double>(mean);
    m2_ = static_cast<double>(m2);
    m3_ = static_cast<double>(m3);
    m4_ = static_cast<double>(m4);
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
    if (histogram_valid_ && other.histogram_valid_) {
        for (const auto& [v, c] : other.histogram_) histogram_[v] += c;
    } else {
        histogram_valid_ = false;
        histogram_.clear();
    }
}

double SimStats::variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

double SimStats::std_error() const {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
}

double SimStats::skewness() const {
    if (count_ < 2 || m2_ <= 0.0) return 0.0;
    const double n = static_cast<double>(count_);
    return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
}

double SimStats::excess_kurtosis() const {
    if (count_ < 2 || m2_ <= 0.0) return 0.0;
    const double n = static_cast<double>(count_);
    return n * m4_ / (m2_ * m2_) - 3.0;
}

Json json_of(const SimStats& s) {
    Json j;
    j["statistic"] = s.name_;
    j["trials"] = s.count_;
    j["mean"] = s.mean_;
    j["m2"] = s.m2_;
    j["m3"] = s.m3_;
    j["m4"] = s.m4_;
    j["min"] = s.min_;
    j["max"] = s.max_;
    j["variance"] = s.variance();
    j["std_error"] = s.std_error();
    j["skewness"] = s.skewness();
    j["excess_kurtosis"] = s.excess_kurtosis();
    if (s.histogram_valid_) {
        Json h = Json::object();
        for (const auto& [v, c] : s.histogram_) h[std::to_string(v)] = c;
        j["histogram"] = std::move(h);
    } else {
        j["histogram"] = nullptr;
    }
    return j;
}

SimStats sim_stats_from_json(const Json& j) {
    if (!j.is_object()) throw SpecError("statistics summary: expected a JSON object");
    try {
        SimStats s(j.at("statistic").get<std::string>());
        s.count_ = j.at("trials").get<long long>();
        s.mean_ = j.at("mean").get<double>();
        s.m2_ = j.at("m2").get<double>();
        s.m3_ = j.at("m3").get<double>();
        s.m4_ = j.at("m4").get<double>();
        s.min_ = j.at("min").get<double>();
        s.max_ = j.at("max").get<double>();
        const Json& h = j.at("histogram");
        if (h.is_null()) {
            s.histogram_valid_ = false;
        } else {
            for (const auto& [key, val] : h.items())
                s.histogram_[std::stoll(key)] = val.get<long long>();
        }
        return s;
    } catch (const Json::exception& e) {
        throw SpecError(std::string("statistics summary: ") + e.what());
    }
}

std::string sim_stats_csv_header() {
    return csv_row({"statistic", "m", "n", "trials", "mean", "variance", "std_error", "seed"});
}

std::string sim_stats_csv_row(const SimStats& s, std::size_t m, long n, std::uint64_t seed) {
    return csv_row({s.name(), std::to_string(m), std::to_string(n), std::to_string(s.count()),
                    format_double(s.mean()), format_double(s.variance()),
                    format_double(s.std_error()), std::to_string(seed)});
}

namespace {

void check_mc_bounds(long n, long trials) {
    if (n < 1) throw DomainError("Monte Carlo needs n >= 1 keys");
    if (trials < 1) throw DomainError("Monte Carlo needs at least one trial");
}

}  // namespace

std::map<std::string, SimStats> run_mc_tree(std::size_t m, long n, long trials,
                                            std::uint64_t seed,
                                            const std::vector<std::string>& statistics) {
    check_mc_bounds(n, trials);
    {
        TreeStats probe;  // name validation up front
        for (const auto& name : statistics) (void)stat_by_name(probe, name);
    }
    std::map<std::string, SimStats> out;
    for (const auto& name : statistics) out.emplace(name, SimStats(name));

    MSTree tree(m);
    for (long t = 0; t < trials; ++t) {
        SplitStream rng(seed, static_cast<std::uint64_t>(t));
        tree.clear();
        for (long k = 0; k < n; ++k)
            tree.insert_at_gap(static_cast<long>(rng.below(static_cast<std::uint64_t>(k) + 1)));
        const TreeStats s = tree.stats();
        for (auto& [name, acc] : out) acc.add(static_cast<double>(stat_by_name(s, name)));
    }
    return out;
}

namespace {

// Exact integer sampler over one replacement rule: outcome probabilities
// scaled by their common denominator.
struct OutcomeSampler {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> cumulative;
};

std::uint64_t to_u64(const mpz_class& z, const char* what) {
    if (z < 0 || !z.fits_ulong_p())
        throw CapError(std::string(what) + ": value does not fit a machine word");
    return static_cast<std::uint64_t>(z.get_ui());
}

}  // namespace

std::map<std::string, SimStats> run_mc_urn(const ModelBundle& bundle, long n, long trials,
                                           std::uint64_t seed,
                                           const std::vector<std::string>& functionals) {
    if (trials < 1) throw DomainError("Monte Carlo needs at least one trial");
    if (n < bundle.start_keys)
        throw DomainError("urn mode starts at " + std::to_string(bundle.start_keys) +
                          " keys; requested n = " + std::to_string(n));
    std::vector<const RatVector*> coeffs;
    for (const auto& name : functionals) {
        auto it = bundle.functionals.find(name);
        if (it == bundle.functionals.end())
            throw SpecError("model '" + bundle.model_name + "' has no functional '" + name + "'");
        coeffs.push_back(&it->second);
    }

    const UrnSpec& spec = bundle.spec;
    const std::size_t q = spec.q;

    // Integer activity weights over the common denominator.
    mpz_class act_scale = 1;
    for (const auto& a : spec.activities) act_scale = lcm(act_scale, a.den());
    std::vector<std::uint64_t> weight(q);
    for (std::size_t i = 0; i < q; ++i) {
        mpz_class w = spec.activities[i].num() * (act_scale / spec.activities[i].den());
        weight[i] = to_u64(w, "activity weight");
    }

    // Integer outcome samplers per positive-activity type.
    std::vector<OutcomeSampler> samplers(q);
    std::vector<const ReplacementRule*> rules(q, nullptr);
    for (std::size_t i = 0; i < q; ++i) {
        const ReplacementRule* rule = spec.rule_for(i);
        rules[i] = rule;
        if (!rule) continue;
        mpz_class den = 1;
        for (const auto& o : rule->outcomes) den = lcm(den, o.prob.den());
        OutcomeSampler s;
        s.total = to_u64(den, "outcome denominator");
        std::uint64_t cum = 0;
        for (const auto& o : rule->outcomes) {
            cum += to_u64(o.prob.num() * (den / o.prob.den()), "outcome weight");
            s.cumulative.push_back(cum);
        }
        samplers[i] = std::move(s);
    }

    std::map<std::string, SimStats> out;
    for (const auto& name : functionals) out.emplace(name, SimStats(name));

    const long draws_per_trial = n - bundle.start_keys;
    std::vector<long long> x(q);
    for (long t = 0; t < trials; ++t) {
        SplitStream rng(seed, static_cast<std::uint64_t>(t));
        for (std::size_t i = 0; i < q; ++i) x[i] = bundle.start_state[i];
        for (long step = 0; step < draws_per_trial; ++step) {
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < q; ++i)
                total += weight[i] * static_cast<std::uint64_t>(x[i]);
            if (total == 0) throw Error("urn died: total activity reached zero");
            std::uint64_t r = rng.below(total);
            std::size_t drawn = q;
            for (std::size_t i = 0; i < q; ++i) {
                const std::uint64_t w = weight[i] * static_cast<std::uint64_t>(x[i]);
                if (r < w) {
                    drawn = i;
                    break;
                }
                r -= w;
            }
            if (drawn == q) throw Error("draw selection overran the activity prefix sums");
            const ReplacementRule* rule = rules[drawn];
            std::size_t choice = 0;
            if (rule->outcomes.size() > 1) {
                const std::uint64_t u = rng.below(samplers[drawn].total);
                while (samplers[drawn].cumulative[choice] <= u) ++choice;
            }
            const auto& delta = rule->outcomes[choice].delta;
            for (std::size_t i = 0; i < q; ++i) x[i] += delta[i];
        }
        for (std::size_t f = 0; f < functionals.size(); ++f) {
            Rational value;
            const RatVector& c = *coeffs[f];
            for (std::size_t i = 0; i < q; ++i)
                if (!c[i].is_zero()) value += c[i] * Rational(static_cast<long>(x[i]));
            out.at(functionals[f]).add(value.to_double());
        }
    }
    return out;
}

Rational ExactDist::total() const {
    Rational t;
    for (const auto& [v, p] : pmf) t += p;
    return t;
}

Rational ExactDist::mean() const {
    Rational m;
    for (const auto& [v, p] : pmf) m += Rational(v) * p;
    return m;
}

Rational ExactDist::variance() const {
    Rational m = mean(), s;
    for (const auto& [v, p] : pmf) s += Rational(v) * Rational(v) * p;
    return s - m * m;
}

Json json_of(const ExactDist& d) {
    Json j;
    j["n"] = d.n;
    Json pmf = Json::object();
    for (const auto& [v, p] : d.pmf) pmf[std::to_string(v)] = p.str();
    j["pmf"] = std::move(pmf);
    return j;
}

ExactDist exact_dist_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("pmf"))
        throw SpecError("exact distribution: expected {\"n\", \"pmf\"}");
    ExactDist d;
    d.n = j["n"].get<long>();
    for (const auto& [key, val] : j["pmf"].items())
        d.pmf[std::stol(key)] = rational_from_json(val);
    if (d.total() != Rational(1))
        throw SpecError("exact distribution: probabilities sum to " + d.total().str() +
                        ", not 1");
    return d;
}

namespace {

void enumerate_paths(const MSTree& tree, const Rational& prob, long n_max,
                     const std::string& statistic,
                     std::map<long, std::map<long, Rational>>& acc) {
    const long k = tree.key_count();
    if (k >= 1) acc[k][stat_by_name(tree.stats(), statistic)] += prob;
    if (k == n_max) return;
    const long gaps = tree.gap_count();
    const Rational p = prob / Rational(gaps);
    for (long g = 0; g < gaps; ++g) {
        MSTree next = tree;
        next.insert_at_gap(g);
        enumerate_paths(next, p, n_max, statistic, acc);
    }
}

}  // namespace

std::map<long, ExactDist> exact_small_n(std::size_t m, long n_max, const std::string& statistic) {
    if (n_max < 1) throw DomainError("exhaustive enumeration needs n_max >= 1");
    if (n_max > 9)
        throw CapError("exhaustive enumeration visits n! gap sequences; capped at n_max = 9");
    {
        TreeStats probe;
        (void)stat_by_name(probe, statistic);
    }
    std::map<long, std::map<long, Rational>> acc;
    enumerate_paths(MSTree(m), Rational(1), n_max, statistic, acc);
    std::map<long, ExactDist> out;
    for (auto& [n, pmf] : acc) {
        ExactDist d;
        d.n = n;
        d.pmf = std::move(pmf);
        if (d.total() != Rational(1))
            throw Error("enumeration accounting error: path probabilities sum to " +
                        d.total().str() + " at n = " + std::to_string(n));
        out[n] = std::move(d);
    }
    return out;
}

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

ConsistencyReport urn_tree_consistency(std::size_t m, long n, std::uint64_t seed) {
    if (n < static_cast<long>(m))
        throw DomainError("consistency check needs n >= m so the forest is nonempty");
    const ModelBundle bundle = protected_urn(m);
    const TypeIndex index(m);
    MSTree tree(m);
    SplitStream rng(seed, 0);
    ConsistencyReport rep;

    for (long k = 0; k < static_cast<long>(m); ++k)
        tree.insert_at_gap(static_cast<long>(rng.below(static_cast<std::uint64_t>(k) + 1)));

    std::vector<long> x = forest_decompose(tree, index);
    {
        long balls = 0;
        for (long c : x) balls += c;
        std::vector<long> fresh(m, 0);
        fresh[0] = static_cast<long>(m) - 1;
        fresh[1] = 1;
        if (balls != 1 || x[index.index_of(fresh)] != 1) {
            rep.first_violation = "start state at n = m does not decompose to one fresh ball";
            return rep;
        }
    }

    for (long key = static_cast<long>(m); key < n; ++key) {
        const long rank = static_cast<long>(rng.below(static_cast<std::uint64_t>(tree.gap_count())));
        const std::size_t w = tree.gap_node(rank);

        // The ball owning this gap: externals belong to their full parent's
        // ball unless that parent is itself still a leaf (then to the
        // grandparent's); a keyed leaf's own gaps belong to its parent's.
        std::int64_t root;
        if (tree.keys_of(w) == 0) {
            const std::int64_t v = tree.parent_of(w);
            if (v < 0) {
                rep.first_violation = "external root with n >= m";
                return rep;
            }
            root = tree.is_leaf(static_cast<std::size_t>(v)) ? tree.parent_of(static_cast<std::size_t>(v)) : v;
        } else {
            root = tree.parent_of(w);
        }
        if (root < 0) {
            rep.first_violation = "gap at step " + std::to_string(key) + " lies outside every ball";
            return rep;
        }

        const std::vector<long> comp = young_composition(tree, static_cast<std::size_t>(root));
        const std::size_t drawn = index.index_of(comp);
        if (x[drawn] == 0) {
            rep.first_violation = "drawn type " + index.types[drawn].label() +
                                  " has zero balls at step " + std::to_string(key);
            return rep;
        }

        tree.insert_at_gap(rank);
        const std::vector<long> x_new = forest_decompose(tree, index);
        std::vector<long> delta(x_new.size());
        for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = x_new[i] - x[i];

        const ReplacementRule* rule = bundle.spec.rule_for(drawn);
        bool legal = false;
        if (rule)
            for (const auto& o : rule->outcomes)
                if (o.delta == delta) {
                    legal = true;
                    break;
                }
        if (!legal) {
            rep.first_violation = "transition at step " + std::to_string(key) + " from type " +
                                  index.types[drawn].label() + " changed the forest by " +
                                  join_longs(delta) + ", which matches no replacement outcome";
            return rep;
        }
        x = x_new;
        rep.steps_checked += 1;
    }
    return rep;
}

}  // namespace polyurn
