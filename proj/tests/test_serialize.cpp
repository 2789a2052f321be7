#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "polyurn/errors.hpp"
#include "polyurn/law.hpp"
#include "polyurn/models.hpp"
#include "polyurn/serialize.hpp"
#include "polyurn/spectral.hpp"

using namespace polyurn;

namespace {

bool same_spec(const UrnSpec& a, const UrnSpec& b) {
    if (a.q != b.q || a.activities != b.activities || a.labels != b.labels) return false;
    if (a.step_increment != b.step_increment) return false;
    if (a.rules.size() != b.rules.size()) return false;
    for (std::size_t i = 0; i < a.rules.size(); ++i) {
        if (a.rules[i].drawn != b.rules[i].drawn) return false;
        const auto& oa = a.rules[i].outcomes;
        const auto& ob = b.rules[i].outcomes;
        if (oa.size() != ob.size()) return false;
        for (std::size_t k = 0; k < oa.size(); ++k)
            if (oa[k].prob != ob[k].prob || oa[k].delta != ob[k].delta) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("double formatting is shortest round-trip") {
    const double samples[] = {0.0,          1.0,   -2.5e-7, 1.0 / 3.0, 0.1,
                              57.0 / 700.0, 1e300, -0.0,    4.9e-324};
    for (double x : samples) {
        const std::string s = format_double(x);
        CHECK(parse_double(s) == x);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1.0) == "1");
    CHECK_THROWS_AS(parse_double("1.5x"), SpecError);
    CHECK_THROWS_AS(parse_double(""), SpecError);
    CHECK_THROWS_AS(parse_double("  2"), SpecError);
}

TEST_CASE("rational json uses p/q strings and accepts bare integers") {
    CHECK(json_of(Rational(3, 4)).get<std::string>() == "3/4");
    CHECK(json_of(Rational(-7)).get<std::string>() == "-7/1");
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK(rational_from_json(Json("22/7")) == Rational(22, 7));
    for (const Rational& r : {Rational(0), Rational(-3, 8), Rational(1692302314867L, 1)})
        CHECK(rational_from_json(json_of(r)) == r);
    CHECK_THROWS_AS(rational_from_json(Json::array()), SpecError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), DomainError);
    CHECK_THROWS_AS(rational_from_json(Json("pi")), SpecError);
}

TEST_CASE("vector and matrix round-trips") {
    RatVector v{Rational(1, 2), Rational(-3), Rational(0)};
    CHECK(rat_vector_from_json(json_of(v)) == v);

    RatMatrix a(2, 3);
    a(0, 0) = Rational(1, 7);
    a(1, 2) = Rational(-9, 2);
    CHECK(rat_matrix_from_json(json_of(a)) == a);

    Json ragged = Json::array({Json::array({"1/1", "2/1"}), Json::array({"3/1"})});
    CHECK_THROWS_AS(rat_matrix_from_json(ragged), SpecError);
    CHECK_THROWS_AS(rat_vector_from_json(Json("not-an-array")), SpecError);
}

TEST_CASE("urn spec json round-trip preserves every field") {
    const ModelBundle bundle = make_model("protected", 2);
    const Json j = json_of(bundle.spec);
    CHECK(same_spec(urn_spec_from_json(j), bundle.spec));

    // The parse boundary re-validates: corrupt a probability so the outcome
    // law no longer sums to one.
    Json bad = j;
    bad["rules"][0]["outcomes"][0]["p"] = "1/2";
    CHECK_THROWS_AS(urn_spec_from_json(bad), SpecError);

    Json missing = j;
    missing.erase("activities");
    CHECK_THROWS_AS(urn_spec_from_json(missing), SpecError);
}

TEST_CASE("asymptotic law round-trip") {
    const ModelBundle bundle = make_model("protected", 2);
    const SpectralData sd = spectral(bundle.spec);
    const AsymptoticLaw law = asymptotics_integral(bundle.spec, sd);

    const Json j = json_of(law);
    CHECK(j["regime"] == "normal");
    CHECK(j["method"] == "lyapunov");
    const AsymptoticLaw back = law_from_json(j);
    CHECK(back.mu == law.mu);
    CHECK(back.sigma == law.sigma);
    CHECK(back.regime == law.regime);
    CHECK(back.method == law.method);

    // The dumped text parses back to the identical document.
    CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("numeric law and spectral reports serialize") {
    const ModelBundle bundle = make_model("protected", 2);
    const SpectralData sd = spectral(bundle.spec);

    const NumericLaw nlaw = asymptotics_integral_numeric(bundle.spec, sd);
    const Json jn = json_of(nlaw);
    CHECK(jn["mu"].size() == bundle.spec.q);
    CHECK(jn["sigma"].size() == bundle.spec.q);
    CHECK(jn["mu"][0].get<double>() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    const Json js = json_of(sd);
    CHECK(js["lambda1"] == "1/1");
    CHECK(js["spectrum_exact"] == true);
    CHECK(js["diagonalizable"] == true);
    CHECK(js["eigenvalues"].size() == bundle.spec.q);
    bool saw_exact_perron = false;
    for (const auto& e : js["eigenvalues"])
        if (e.contains("exact") && e["exact"] == "1/1") saw_exact_perron = true;
    CHECK(saw_exact_perron);
}

TEST_CASE("model bundle round-trip, composition and gap models") {
    for (const char* name : {"protected", "leaves", "one_protected"}) {
        const std::size_t m = std::string(name) == "leaves" ? 3 : 2;
        const ModelBundle b = make_model(name, m);
        const ModelBundle back = model_bundle_from_json(json_of(b));
        CHECK(back.model_name == b.model_name);
        CHECK(back.m == b.m);
        CHECK(same_spec(back.spec, b.spec));
        CHECK(back.types == b.types);
        CHECK(back.functionals == b.functionals);
        CHECK(back.start_state == b.start_state);
        CHECK(back.start_keys == b.start_keys);
    }

    // A functional of the wrong width is rejected at the parse boundary.
    Json j = json_of(make_model("protected", 2));
    j["functionals"]["protected"].push_back("1/1");
    CHECK_THROWS_AS(model_bundle_from_json(j), SpecError);
}

TEST_CASE("emission is byte-deterministic") {
    const std::string a = json_of(make_model("protected", 3)).dump(2);
    const std::string b = json_of(make_model("protected", 3)).dump(2);
    CHECK(a == b);
    const Json parsed = Json::parse(a);
    CHECK(json_of(model_bundle_from_json(parsed)).dump(2) == a);
}

TEST_CASE("enum names parse back") {
    for (Regime r : {Regime::normal, Regime::boundary, Regime::not_normal})
        CHECK(regime_from_name(regime_name(r)) == r);
    for (LawMethod mth : {LawMethod::dual_basis, LawMethod::lyapunov})
        CHECK(law_method_from_name(law_method_name(mth)) == mth);
    CHECK_THROWS_AS(regime_from_name("diffuse"), SpecError);
    CHECK_THROWS_AS(law_method_from_name("spectral"), SpecError);
}

TEST_CASE("csv quoting") {
    CHECK(csv_cell("plain") == "plain");
    CHECK(csv_cell("a,b") == "\"a,b\"");
    CHECK(csv_cell("he said \"hi\"") == "\"he said \"\"hi\"\"\"");
    CHECK(csv_row({"x", "1", "2.5"}) == "x,1,2.5\n");
    CHECK(csv_row({"a,b", "c"}) == "\"a,b\",c\n");
    CHECK(csv_row({"line\nbreak"}) == "\"line\nbreak\"\n");
}
