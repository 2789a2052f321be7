#include "polyurn/serialize.hpp"

#include <charconv>
#include <system_error>

#include "polyurn/errors.hpp"

namespace polyurn {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc())
        throw DomainError("format_double: value does not fit the buffer");
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double out = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw SpecError("parse_double: not a decimal number: '" + std::string(text) + "'");
    return out;
}

Json json_of(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string())
        throw SpecError("rational: expected a \"p/q\" string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Json json_of(const RatVector& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(json_of(r));
    return arr;
}

RatVector rat_vector_from_json(const Json& j) {
    if (!j.is_array()) throw SpecError("rational vector: expected an array, got " + j.dump());
    RatVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json json_of(const RatMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(json_of(a.row(i)));
    return rows;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw SpecError("rational matrix: expected an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    RatMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        RatVector r = rat_vector_from_json(j[i]);
        if (r.size() != cols)
            throw SpecError("rational matrix: ragged rows (row 0 has " + std::to_string(cols) +
                            " entries, row " + std::to_string(i) + " has " +
                            std::to_string(r.size()) + ")");
        for (std::size_t k = 0; k < cols; ++k) a(i, k) = std::move(r[k]);
    }
    return a;
}

namespace {

template <typename T>
Json long_array(const std::vector<T>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(static_cast<long long>(x));
    return arr;
}

std::vector<long> longs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw SpecError(std::string(what) + ": expected an array of integers");
    std::vector<long> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw SpecError(std::string(what) + ": non-integer entry " + e.dump());
        out.push_back(e.get<long>());
    }
    return out;
}

const Json& field(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw SpecError(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

Json json_of(const UrnSpec& spec) {
    Json j;
    j["q"] = spec.q;
    j["activities"] = json_of(spec.activities);
    if (!spec.labels.empty()) j["labels"] = spec.labels;
    if (spec.step_increment) j["step_increment"] = json_of(*spec.step_increment);
    Json rules = Json::array();
    for (const auto& rule : spec.rules) {
        Json jr;
        jr["drawn"] = rule.drawn;
        Json outs = Json::array();
        for (const auto& o : rule.outcomes) {
            Json jo;
            jo["p"] = json_of(o.prob);
            jo["delta"] = long_array(o.delta);
            outs.push_back(std::move(jo));
        }
        jr["outcomes"] = std::move(outs);
        rules.push_back(std::move(jr));
    }
    j["rules"] = std::move(rules);
    return j;
}

UrnSpec urn_spec_from_json(const Json& j) {
    if (!j.is_object()) throw SpecError("urn spec: expected a JSON object");
    UrnSpec spec;
    spec.q = field(j, "q", "urn spec").get<std::size_t>();
    spec.activities = rat_vector_from_json(field(j, "activities", "urn spec"));
    if (auto it = j.find("labels"); it != j.end())
        spec.labels = it->get<std::vector<std::string>>();
    if (auto it = j.find("step_increment"); it != j.end())
        spec.step_increment = rational_from_json(*it);
    for (const auto& jr : field(j, "rules", "urn spec")) {
        ReplacementRule rule;
        rule.drawn = field(jr, "drawn", "replacement rule").get<std::size_t>();
        for (const auto& jo : field(jr, "outcomes", "replacement rule")) {
            ReplacementOutcome o;
            o.prob = rational_from_json(field(jo, "p", "replacement outcome"));
            o.delta = longs_from_json(field(jo, "delta", "replacement outcome"), "delta");
            rule.outcomes.push_back(std::move(o));
        }
        spec.rules.push_back(std::move(rule));
    }
    spec.validate();
    return spec;
}

Json json_of(const AsymptoticLaw& law) {
    Json j;
    j["mu"] = json_of(law.mu);
    j["sigma"] = json_of(law.sigma);
    j["regime"] = regime_name(law.regime);
    j["method"] = law_method_name(law.method);
    return j;
}

AsymptoticLaw law_from_json(const Json& j) {
    if (!j.is_object()) throw SpecError("law: expected a JSON object");
    AsymptoticLaw law;
    law.mu = rat_vector_from_json(field(j, "mu", "law"));
    law.sigma = rat_matrix_from_json(field(j, "sigma", "law"));
    law.regime = regime_from_name(field(j, "regime", "law").get<std::string>());
    law.method = law_method_from_name(field(j, "method", "law").get<std::string>());
    return law;
}

Json json_of(const NumericLaw& law) {
    Json j;
    Json mu = Json::array();
    for (Eigen::Index i = 0; i < law.mu.size(); ++i)
        mu.push_back(static_cast<double>(law.mu[i]));
    j["mu"] = std::move(mu);
    Json sigma = Json::array();
    for (Eigen::Index i = 0; i < law.sigma.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < law.sigma.cols(); ++k)
            row.push_back(static_cast<double>(law.sigma(i, k)));
        sigma.push_back(std::move(row));
    }
    j["sigma"] = std::move(sigma);
    j["regime"] = regime_name(law.regime);
    j["method"] = law_method_name(law.method);
    return j;
}

Json json_of(const SpectralData& sd) {
    Json j;
    j["lambda1"] = json_of(sd.lambda1);
    j["v1"] = json_of(sd.v1);
    j["u1"] = json_of(sd.u1);
    Json eigs = Json::array();
    for (const auto& e : sd.eigenvalues) {
        Json je;
        je["re"] = static_cast<double>(e.value.real());
        je["im"] = static_cast<double>(e.value.imag());
        if (e.exact) je["exact"] = json_of(*e.exact);
        eigs.push_back(std::move(je));
    }
    j["eigenvalues"] = std::move(eigs);
    j["spectrum_exact"] = sd.spectrum_exact;
    if (sd.diagonalizable)
        j["diagonalizable"] = *sd.diagonalizable;
    else
        j["diagonalizable"] = nullptr;
    return j;
}

Json json_of(const ModelBundle& bundle) {
    Json j;
    j["model"] = bundle.model_name;
    j["m"] = bundle.m;
    j["spec"] = json_of(bundle.spec);
    Json types = Json::array();
    for (const auto& t : bundle.types) types.push_back(long_array(t.k));
    j["types"] = std::move(types);
    Json fn;
    for (const auto& [name, vec] : bundle.functionals) fn[name] = json_of(vec);
    j["functionals"] = std::move(fn);
    j["start_state"] = long_array(bundle.start_state);
    j["start_keys"] = bundle.start_keys;
    return j;
}

ModelBundle model_bundle_from_json(const Json& j) {
    if (!j.is_object()) throw SpecError("model bundle: expected a JSON object");
    ModelBundle b;
    b.model_name = field(j, "model", "model bundle").get<std::string>();
    b.m = field(j, "m", "model bundle").get<std::size_t>();
    b.spec = urn_spec_from_json(field(j, "spec", "model bundle"));
    for (const auto& jt : field(j, "types", "model bundle"))
        b.types.push_back(SmallTreeType{longs_from_json(jt, "type")});
    for (const auto& [name, vec] : field(j, "functionals", "model bundle").items())
        b.functionals[name] = rat_vector_from_json(vec);
    b.start_state = longs_from_json(field(j, "start_state", "model bundle"), "start_state");
    b.start_keys = field(j, "start_keys", "model bundle").get<long>();
    for (const auto& [name, vec] : b.functionals)
        if (vec.size() != b.spec.q)
            throw SpecError("model bundle: functional '" + name + "' has " +
                            std::to_string(vec.size()) + " entries for a " +
                            std::to_string(b.spec.q) + "-type urn");
    return b;
}

const char* regime_name_of(Regime r) { return regime_name(r); }

Regime regime_from_name(std::string_view name) {
    if (name == "normal") return Regime::normal;
    if (name == "boundary") return Regime::boundary;
    if (name == "not-normal") return Regime::not_normal;
    throw SpecError("unknown regime name: '" + std::string(name) + "'");
}

LawMethod law_method_from_name(std::string_view name) {
    if (name == "dual-basis") return LawMethod::dual_basis;
    if (name == "lyapunov") return LawMethod::lyapunov;
    throw SpecError("unknown law method: '" + std::string(name) + "'");
}

std::string csv_cell(std::string_view raw) {
    const bool needs_quotes = raw.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(raw);
    std::string out;
    out.reserve(raw.size() + 2);
    out.push_back('"');
    for (char c : raw) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_cell(cells[i]);
    }
    out.push_back('\n');
    return out;
}

}  // namespace polyurn
