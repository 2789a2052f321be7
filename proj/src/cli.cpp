#include "polyurn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyurn/errors.hpp"
#include "polyurn/law.hpp"
#include "polyurn/ledger.hpp"
#include "polyurn/models.hpp"
#include "polyurn/serialize.hpp"
#include "polyurn/simulate.hpp"
#include "polyurn/spectral.hpp"

namespace polyurn::cli {
namespace {

// ---------------------------------------------------------------------------
// shared formatting helpers

// Display form: integers drop the unit denominator ("1", not "1/1").  The
// machine-facing JSON keeps the uniform "p/q" encoding.
std::string rat_str(const Rational& r) {
    std::string s = r.str();
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
    return s;
}

std::string cx_str(const ComplexVal& z) {
    const double re = static_cast<double>(z.real());
    const double im = static_cast<double>(z.imag());
    if (im == 0) return format_double(re);
    std::string s = format_double(re);
    s += (im < 0 ? "-" : "+");
    s += format_double(std::abs(im));
    s += "i";
    return s;
}

std::string eigenvalue_text(const SpectralData& sd) {
    std::string s;
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        if (i) s += ", ";
        const auto& e = sd.eigenvalues[i];
        s += e.exact ? rat_str(*e.exact) : cx_str(e.value);
    }
    return s;
}

std::string vec_text(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

Json json_of_real_vec(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_double());
    return a;
}

// Largest real part among non-Perron eigenvalues; empty for 1x1 urns.
std::optional<double> second_real_part(const SpectralData& sd) {
    std::optional<double> best;
    for (std::size_t i = 1; i < sd.eigenvalues.size(); ++i) {
        const double re = static_cast<double>(sd.eigenvalues[i].value.real());
        if (!best || re > *best) best = re;
    }
    return best;
}

// ---------------------------------------------------------------------------
// theory lookup shared by simulate (tree and urn mode)

struct StatRef {
    const char* model;
    const char* functional;
};

std::optional<StatRef> stat_ref(const std::string& stat, std::size_t m) {
    if (stat == "two_protected") return StatRef{"protected", "protected"};
    if (stat == "leaves") {
        if (m >= 3) return StatRef{"leaves", "leaves"};
        return StatRef{"one_protected", "leaves"};
    }
    if (stat == "one_protected") return StatRef{"one_protected", "one_protected"};
    if (stat == "internal") return StatRef{"one_protected", "internal"};
    return std::nullopt;
}

struct Theory {
    Rational mean_rate;
    Rational variance_rate;
};

// Exact limit law for one statistic, when the matching urn stays small
// enough for the exact pipeline.  Silent on any cap or regime obstruction:
// the simulation output simply carries no theory columns then.
std::optional<Theory> try_theory(const std::string& stat, std::size_t m) {
    const auto ref = stat_ref(stat, m);
    if (!ref) return std::nullopt;
    try {
        const ModelBundle bundle = make_model(ref->model, m);
        if (bundle.spec.q > 24) return std::nullopt;
        const SpectralData sd = spectral(bundle.spec);
        if (classify_regime(sd) != Regime::normal) return std::nullopt;
        const AsymptoticLaw law = asymptotics_integral(bundle.spec, sd);
        const auto [mu, var] = functional_law(law, bundle.functionals.at(ref->functional));
        return Theory{mu, var};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// types

int cmd_types(std::size_t m, const std::string& out_fmt, bool cap_override,
              std::ostream& out) {
    if (m > 12 && !cap_override)
        throw CapError("types at arity " + std::to_string(m) +
                       " enumerate millions of compositions; pass --cap-override to force");
    const auto types = enumerate_types(m);

    if (out_fmt == "json") {
        Json j;
        j["m"] = m;
        j["count"] = types.size();
        Json rows = Json::array();
        for (std::size_t i = 0; i < types.size(); ++i) {
            Json r;
            r["index"] = i;
            r["label"] = types[i].label();
            r["activity"] = types[i].activity();
            r["protected"] = types[i].is_protected();
            r["leaves"] = types[i].leaf_count();
            rows.push_back(std::move(r));
        }
        j["types"] = std::move(rows);
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (out_fmt == "csv") {
        out << "index,label,activity,protected,leaves\n";
        for (std::size_t i = 0; i < types.size(); ++i) {
            out << csv_row({std::to_string(i), csv_cell(types[i].label()),
                            std::to_string(types[i].activity()),
                            types[i].is_protected() ? "1" : "0",
                            std::to_string(types[i].leaf_count())});
        }
        return kOk;
    }

    std::size_t label_w = 5;
    for (const auto& t : types) label_w = std::max(label_w, t.label().size());
    out << "arity " << m << ": " << types.size() << " composition types\n";
    out << "index  " << std::string(label_w - 5, ' ') << "label"
        << "  activity  protected  leaves\n";
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::string idx = std::to_string(i);
        std::string act = std::to_string(types[i].activity());
        out << std::string(5 - std::min<std::size_t>(5, idx.size()), ' ') << idx << "  "
            << std::string(label_w - types[i].label().size(), ' ') << types[i].label()
            << "  " << std::string(8 - std::min<std::size_t>(8, act.size()), ' ') << act
            << "  " << (types[i].is_protected() ? "      yes" : "       no") << "  "
            << std::string(6 - std::min<std::size_t>(6, std::to_string(types[i].leaf_count()).size()), ' ')
        << types[i].leaf_count() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& model, std::size_t m, const std::string& spec_path,
                const std::vector<std::string>& functionals, const std::string& precision,
                const std::string& out_fmt, bool cap_override, std::ostream& out,
                std::ostream& err) {
    ModelBundle bundle;
    if (!spec_path.empty()) {
        if (!functionals.empty())
            throw SpecError("--functional needs a named model; spec files carry no functionals");
        std::ifstream in(spec_path);
        if (!in) throw SpecError("cannot open spec file '" + spec_path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw SpecError("malformed spec file '" + spec_path + "': " + e.what());
        }
        bundle.spec = urn_spec_from_json(j);
        bundle.model_name = "spec-file";
    } else {
        bundle = make_model(model, m, cap_override);
    }

    const SpectralData sd = spectral(bundle.spec);
    const Regime regime = classify_regime(sd);

    bool exact_mode;
    if (precision == "exact") {
        if (!sd.spectrum_exact) {
            err << "error: the spectrum of this urn has no exact representation at this "
                   "size; rerun with --precision float\n";
            return kCapExceeded;
        }
        exact_mode = true;
    } else if (precision == "float") {
        exact_mode = false;
    } else {
        exact_mode = sd.spectrum_exact;
    }

    // mu = lambda1 v1 is exact regardless of the spectrum cap.
    RatVector mu(bundle.spec.q, Rational(0));
    for (std::size_t i = 0; i < bundle.spec.q; ++i) mu[i] = sd.lambda1 * sd.v1[i];

    std::optional<AsymptoticLaw> exact_law;
    std::optional<NumericLaw> float_law;
    if (regime == Regime::normal) {
        if (exact_mode)
            exact_law = asymptotics_integral(bundle.spec, sd);
        else
            float_law = asymptotics_integral_numeric(bundle.spec, sd);
    }

    // Requested functional laws (all of the bundle's by default).
    std::vector<std::string> wanted = functionals;
    if (wanted.empty())
        for (const auto& [name, c] : bundle.functionals) wanted.push_back(name);
    for (const auto& name : wanted)
        if (!bundle.functionals.count(name))
            throw SpecError("model '" + bundle.model_name + "' has no functional '" + name +
                            "'");

    const char* warning =
        "no Gaussian limit: some eigenvalue has real part >= lambda1/2; covariance omitted";

    if (out_fmt == "json") {
        Json j;
        j["model"] = bundle.model_name;
        if (spec_path.empty()) j["m"] = bundle.m;
        j["q"] = bundle.spec.q;
        j["precision"] = exact_mode ? "exact" : "float";
        j["regime"] = regime_name(regime);
        if (regime != Regime::normal) j["warning"] = warning;
        j["spectral"] = json_of(sd);
        j["mu"] = exact_mode ? json_of(mu) : json_of_real_vec(mu);
        if (exact_law) j["sigma"] = json_of(exact_law->sigma);
        if (float_law) {
            Json rows = Json::array();
            for (Eigen::Index r = 0; r < float_law->sigma.rows(); ++r) {
                Json row = Json::array();
                for (Eigen::Index c = 0; c < float_law->sigma.cols(); ++c)
                    row.push_back(static_cast<double>(float_law->sigma(r, c)));
                rows.push_back(std::move(row));
            }
            j["sigma"] = std::move(rows);
        }
        if (regime == Regime::normal) j["method"] = law_method_name(LawMethod::lyapunov);
        Json fl = Json::object();
        for (const auto& name : wanted) {
            const RatVector& c = bundle.functionals.at(name);
            Json one;
            Rational mean(0);
            for (std::size_t i = 0; i < c.size(); ++i) mean += c[i] * mu[i];
            one["mean_rate"] = exact_mode ? json_of(mean) : Json(mean.to_double());
            if (exact_law) {
                const auto [mr, vr] = functional_law(*exact_law, c);
                one["variance_rate"] = json_of(vr);
            } else if (float_law) {
                const auto [mr, vr] = functional_law(*float_law, to_real(c));
                one["variance_rate"] = static_cast<double>(vr);
            }
            fl[name] = std::move(one);
        }
        j["functionals"] = std::move(fl);
        out << j.dump(2) << "\n";
        return kOk;
    }

    // pretty
    out << "model: " << bundle.model_name;
    if (spec_path.empty()) out << "  (m = " << bundle.m << ")";
    out << "\n";
    out << "types: " << bundle.spec.q << "\n";
    out << "precision: " << (exact_mode ? "exact" : "float") << "\n";
    if (regime == Regime::normal)
        out << "regime: normal\n";
    else
        out << "regime: " << regime_name(regime) << " -- " << warning << "\n";
    out << "lambda1: " << rat_str(sd.lambda1) << "\n";
    out << "eigenvalues: " << eigenvalue_text(sd)
        << (sd.spectrum_exact ? "  [exact]" : "  [numeric]") << "\n";
    if (exact_mode)
        out << "mu: " << vec_text(mu) << "\n";
    else {
        out << "mu: (";
        for (std::size_t i = 0; i < mu.size(); ++i)
            out << (i ? ", " : "") << format_double(mu[i].to_double());
        out << ")\n";
    }
    if (exact_law) {
        out << "sigma:\n";
        for (std::size_t r = 0; r < exact_law->sigma.rows(); ++r) {
            out << "  [";
            for (std::size_t c = 0; c < exact_law->sigma.cols(); ++c)
                out << (c ? ", " : "") << rat_str(exact_law->sigma(r, c));
            out << "]\n";
        }
    } else if (float_law) {
        out << "sigma:\n";
        for (Eigen::Index r = 0; r < float_law->sigma.rows(); ++r) {
            out << "  [";
            for (Eigen::Index c = 0; c < float_law->sigma.cols(); ++c)
                out << (c ? ", " : "")
                    << format_double(static_cast<double>(float_law->sigma(r, c)));
            out << "]\n";
        }
    }
    for (const auto& name : wanted) {
        const RatVector& c = bundle.functionals.at(name);
        Rational mean(0);
        for (std::size_t i = 0; i < c.size(); ++i) mean += c[i] * mu[i];
        out << "functional " << name << ": mean rate = "
            << (exact_mode ? rat_str(mean) : format_double(mean.to_double()));
        if (exact_law) {
            const auto [mr, vr] = functional_law(*exact_law, c);
            out << ", variance rate = " << rat_str(vr);
        } else if (float_law) {
            const auto [mr, vr] = functional_law(*float_law, to_real(c));
            out << ", variance rate = " << format_double(static_cast<double>(vr));
        }
        out << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(std::size_t m, long n, long trials, std::uint64_t seed,
                 std::vector<std::string> stats, const std::string& mode,
                 const std::string& out_fmt, bool cap_override, std::ostream& out) {
    // Deduplicate while keeping a deterministic (sorted) order.
    std::sort(stats.begin(), stats.end());
    stats.erase(std::unique(stats.begin(), stats.end()), stats.end());
    if (stats.empty()) stats.push_back("two_protected");

    if (!cap_override && n > 0 && trials > 0 &&
        static_cast<double>(n) * static_cast<double>(trials) > 1e9)
        throw CapError("n * trials exceeds 1e9 tree operations; pass --cap-override to force");

    std::map<std::string, SimStats> results;
    if (mode == "urn") {
        std::optional<std::string> model;
        std::vector<std::string> functionals;
        for (const auto& s : stats) {
            const auto ref = stat_ref(s, m);
            if (!ref)
                throw SpecError("unknown statistic '" + s +
                                "'; expected two_protected, one_protected, leaves or internal");
            if (model && *model != ref->model)
                throw SpecError("urn mode runs one urn per invocation; statistics '" + stats[0] +
                                "' and '" + s + "' live in different urns");
            model = ref->model;
            functionals.push_back(ref->functional);
        }
        std::sort(functionals.begin(), functionals.end());
        functionals.erase(std::unique(functionals.begin(), functionals.end()),
                          functionals.end());
        const ModelBundle bundle = make_model(*model, m, cap_override);
        results = run_mc_urn(bundle, n, trials, seed, functionals);
    } else {
        results = run_mc_tree(m, n, trials, seed, stats);
    }

    // Theory per output row.  In urn mode rows are keyed by functional name,
    // so translate each requested statistic to its row key first.
    std::map<std::string, std::optional<Theory>> theory;
    for (const auto& s : stats) {
        std::string key = s;
        if (mode == "urn") key = stat_ref(s, m)->functional;
        theory[key] = try_theory(s, m);
    }
    bool all_theory = true;
    for (const auto& [key, th] : theory) all_theory = all_theory && th.has_value();

    if (out_fmt == "json") {
        Json j;
        j["mode"] = mode;
        j["m"] = m;
        j["n"] = n;
        j["trials"] = trials;
        j["seed"] = seed;
        Json rows = Json::array();
        for (const auto& [key, st] : results) {
            Json r;
            r["stats"] = json_of(st);
            if (const auto& th = theory.at(key)) {
                Json t;
                t["mean_rate"] = json_of(th->mean_rate);
                t["variance_rate"] = json_of(th->variance_rate);
                const double tmean = th->mean_rate.to_double() * static_cast<double>(n);
                const double tvar = th->variance_rate.to_double() * static_cast<double>(n);
                t["mean"] = tmean;
                t["variance"] = tvar;
                if (st.std_error() > 0)
                    t["z_mean"] = (st.mean() - tmean) / st.std_error();
                else
                    t["z_mean"] = nullptr;
                if (tvar > 0)
                    t["variance_ratio"] = st.variance() / tvar;
                else
                    t["variance_ratio"] = nullptr;
                r["theory"] = std::move(t);
            }
            rows.push_back(std::move(r));
        }
        j["results"] = std::move(rows);
        out << j.dump(2) << "\n";
        return kOk;
    }

    if (out_fmt == "csv") {
        std::string header = sim_stats_csv_header();
        if (all_theory) {
            header.pop_back();  // trailing newline
            header += ",theory_mean,theory_variance,z_mean\n";
        }
        out << header;
        for (const auto& [key, st] : results) {
            std::string row = sim_stats_csv_row(st, m, n, seed);
            if (all_theory) {
                const Theory& th = *theory.at(key);
                const double tmean = th.mean_rate.to_double() * static_cast<double>(n);
                const double tvar = th.variance_rate.to_double() * static_cast<double>(n);
                row.pop_back();
                row += "," + format_double(tmean) + "," + format_double(tvar) + ",";
                row += st.std_error() > 0
                           ? format_double((st.mean() - tmean) / st.std_error())
                           : std::string();
                row += "\n";
            }
            out << row;
        }
        return kOk;
    }

    // pretty
    out << "simulate (" << mode << " mode): m=" << m << " n=" << n << " trials=" << trials
        << " seed=" << seed << "\n";
    for (const auto& [key, st] : results) {
        out << key << ": mean=" << format_double(st.mean())
            << " variance=" << format_double(st.variance())
            << " std_error=" << format_double(st.std_error()) << "\n";
        if (const auto& th = theory.at(key)) {
            const double tmean = th->mean_rate.to_double() * static_cast<double>(n);
            const double tvar = th->variance_rate.to_double() * static_cast<double>(n);
            out << "  theory: mean=" << format_double(tmean) << " (rate "
                << rat_str(th->mean_rate) << ") variance=" << format_double(tvar) << " (rate "
                << rat_str(th->variance_rate) << ")";
            if (st.std_error() > 0)
                out << " z_mean=" << format_double((st.mean() - tmean) / st.std_error());
            out << "\n";
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// spectral

int cmd_spectral(const std::string& model, std::size_t m, const std::string& out_fmt,
                 bool cap_override, std::ostream& out) {
    if (m > 64 && !cap_override)
        throw CapError("spectral analysis above arity 64 is uncharted; pass --cap-override");
    const ModelBundle bundle = make_model(model, m, cap_override);
    const SpectralData sd = spectral(bundle.spec);

    std::optional<double> lambda2;
    bool holds;
    const bool is_nodes = bundle.model_name == "nodes";
    if (is_nodes) {
        // The gap-polynomial roots are polished on the stable product form;
        // prefer that estimate for the verdict.
        const SpectralCondition cond = spectral_condition(m);
        holds = cond.holds;
        if (cond.lambda2_re) lambda2 = static_cast<double>(*cond.lambda2_re);
    } else {
        lambda2 = second_real_part(sd);
        holds = !lambda2 || *lambda2 < 0.5;
    }

    // Root containment of the gap polynomial inside the composition urn's
    // spectrum; only established for small arity.
    std::optional<RootLinkReport> link;
    if (is_nodes && m <= 6) link = check_root_embedding(m);

    if (out_fmt == "json") {
        Json j;
        j["model"] = bundle.model_name;
        j["m"] = m;
        j["q"] = bundle.spec.q;
        j["lambda1"] = json_of(sd.lambda1);
        Json evs = Json::array();
        for (const auto& e : sd.eigenvalues) {
            Json one;
            one["re"] = static_cast<double>(e.value.real());
            one["im"] = static_cast<double>(e.value.imag());
            if (e.exact) one["exact"] = json_of(*e.exact);
            evs.push_back(std::move(one));
        }
        j["eigenvalues"] = std::move(evs);
        j["spectrum_exact"] = sd.spectrum_exact;
        j["lambda2_re"] = lambda2 ? Json(*lambda2) : Json(nullptr);
        j["condition_holds"] = holds;
        if (link) {
            Json l;
            l["intertwines"] = link->intertwines;
            l["roots_contained"] = link->roots_contained;
            if (!link->detail.empty()) l["detail"] = link->detail;
            j["root_link"] = std::move(l);
        }
        out << j.dump(2) << "\n";
        return kOk;
    }

    out << "model: " << bundle.model_name << "  (m = " << m << ", " << bundle.spec.q
        << " types)\n";
    out << "eigenvalues: " << eigenvalue_text(sd)
        << (sd.spectrum_exact ? "  [exact]" : "  [numeric]") << "\n";
    if (lambda2)
        out << "largest non-Perron real part: " << format_double(*lambda2) << "\n";
    else
        out << "largest non-Perron real part: none (single eigenvalue)\n";
    out << "normal-limit condition (Re lambda2 < 1/2): " << (holds ? "holds" : "FAILS")
        << "\n";
    if (link) {
        out << "gap-polynomial root containment: "
            << (link->ok() ? "verified" : std::string("FAILED: ") + link->detail) << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(std::size_t m, long n_max, const std::string& stat,
               const std::string& out_fmt, std::ostream& out) {
    const auto dists = exact_small_n(m, n_max, stat);

    if (out_fmt == "json") {
        Json j;
        j["m"] = m;
        j["statistic"] = stat;
        j["max_n"] = n_max;
        Json arr = Json::array();
        for (const auto& [n, d] : dists) {
            Json one = json_of(d);
            one["mean"] = json_of(d.mean());
            one["variance"] = json_of(d.variance());
            arr.push_back(std::move(one));
        }
        j["distributions"] = std::move(arr);
        out << j.dump(2) << "\n";
        return kOk;
    }

    out << "exact distribution of " << stat << " at arity " << m << "\n";
    for (const auto& [n, d] : dists) {
        out << "n=" << n << "  mean=" << rat_str(d.mean())
            << "  variance=" << rat_str(d.variance()) << "  pmf:";
        for (const auto& [value, p] : d.pmf) out << " " << value << " -> " << rat_str(p);
        out << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& out_fmt, std::ostream& out) {
    const LedgerReport report = run_ledger();
    if (out_fmt == "json")
        out << json_of(report).dump(2) << "\n";
    else
        out << ledger_pretty(report);
    return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Polya urns for m-ary search trees: exact limit laws, "
                 "simulation, and a reproduction ledger"};
    app.name("polyurn");
    app.require_subcommand(1);

    // -- types
    auto* t_cmd = app.add_subcommand("types", "list the composition ball types at one arity");
    std::size_t t_m = 2;
    std::string t_out = "pretty";
    bool t_cap = false;
    t_cmd->add_option("--m", t_m, "arity of the search tree")->required();
    t_cmd->add_option("--out", t_out, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    t_cmd->add_flag("--cap-override", t_cap, "ignore the enumeration size cap");

    // -- analyze
    auto* a_cmd = app.add_subcommand(
        "analyze", "compute the asymptotic limit law of an urn model");
    std::string a_model = "protected";
    std::size_t a_m = 2;
    std::string a_spec, a_precision = "auto", a_out = "pretty";
    std::vector<std::string> a_functionals;
    bool a_cap = false;
    a_cmd->add_option("--m", a_m, "arity of the search tree");
    a_cmd->add_option("--model", a_model,
                      "one of: protected, nodes, leaves, one_protected");
    a_cmd->add_option("--spec", a_spec, "analyze a raw urn spec from a JSON file instead");
    a_cmd->add_option("--functional", a_functionals,
                      "restrict the reported functional laws (repeatable)");
    a_cmd->add_option("--precision", a_precision,
                      "exact refuses urns whose spectrum has no exact form; "
                      "auto falls back to float")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    a_cmd->add_option("--out", a_out, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    a_cmd->add_flag("--cap-override", a_cap, "ignore model size caps");

    // -- simulate
    auto* s_cmd = app.add_subcommand("simulate", "Monte Carlo over random trees or the urn");
    std::size_t s_m = 2;
    long s_n = 0, s_trials = 100;
    std::uint64_t s_seed = 1;
    std::vector<std::string> s_stats;
    std::string s_mode = "tree", s_out = "csv";
    bool s_cap = false;
    s_cmd->add_option("--m", s_m, "arity of the search tree")->required();
    s_cmd->add_option("--n", s_n, "keys per tree")->required();
    s_cmd->add_option("--trials", s_trials, "independent trees");
    s_cmd->add_option("--seed", s_seed, "base seed; trial t uses stream (seed, t)");
    s_cmd->add_option("--stat", s_stats,
                      "two_protected, one_protected, leaves or internal (repeatable)");
    s_cmd->add_option("--mode", s_mode, "grow real trees, or drive the urn directly")
        ->check(CLI::IsMember({"tree", "urn"}));
    s_cmd->add_option("--out", s_out, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    s_cmd->add_flag("--cap-override", s_cap, "ignore the n*trials work cap");

    // -- spectral
    auto* p_cmd = app.add_subcommand(
        "spectral", "eigenvalues and the normal-limit spectral condition");
    std::size_t p_m = 2;
    std::string p_model = "nodes", p_out = "pretty";
    bool p_cap = false;
    p_cmd->add_option("--m", p_m, "arity of the search tree")->required();
    p_cmd->add_option("--model", p_model,
                      "one of: protected, nodes, leaves, one_protected");
    p_cmd->add_option("--out", p_out, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    p_cmd->add_flag("--cap-override", p_cap, "ignore model size caps");

    // -- oracle
    auto* o_cmd = app.add_subcommand(
        "oracle", "exhaustive small-n distributions by path enumeration");
    std::size_t o_m = 2;
    long o_n = 6;
    std::string o_stat = "two_protected", o_out = "pretty";
    o_cmd->add_option("--m", o_m, "arity of the search tree")->required();
    o_cmd->add_option("--n", o_n, "largest key count to enumerate (n! paths, n <= 9)");
    o_cmd->add_option("--stat", o_stat,
                      "two_protected, one_protected, leaves or internal");
    o_cmd->add_option("--out", o_out, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));

    // -- verify
    auto* v_cmd = app.add_subcommand(
        "verify", "recompute every recorded constant and compare bit-exactly");
    std::string v_out = "pretty";
    v_cmd->add_option("--out", v_out, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (app.got_subcommand(t_cmd)) return cmd_types(t_m, t_out, t_cap, out);
        if (app.got_subcommand(a_cmd))
            return cmd_analyze(a_model, a_m, a_spec, a_functionals, a_precision, a_out,
                               a_cap, out, err);
        if (app.got_subcommand(s_cmd))
            return cmd_simulate(s_m, s_n, s_trials, s_seed, s_stats, s_mode, s_out, s_cap,
                                out);
        if (app.got_subcommand(p_cmd)) return cmd_spectral(p_model, p_m, p_out, p_cap, out);
        if (app.got_subcommand(o_cmd)) return cmd_oracle(o_m, o_n, o_stat, o_out, out);
        if (app.got_subcommand(v_cmd)) return cmd_verify(v_out, out);
        err << "error: no command selected\n";
        return kUsageError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace polyurn::cli
