// Checks for the randomized verification suites: the registry, the
// deterministic replay guarantees of the reports, and the samplers they
// are built on.

#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "lfd/automorphism.hpp"
#include "lfd/errors.hpp"
#include "lfd/verify.hpp"

using namespace lfd;

namespace {

const std::vector<std::string> kExpectedSuites = {
    "thm-3.2",           "thm-3.3",        "thm-3.4",
    "thm-3.6",           "thm-3.7",        "thm-3.8",
    "prop-nontrivial",   "lemma-comm-exp", "prop-lnd-equality",
    "prop-criterion",    "example-semisimple", "cor-ker-subgroup",
    "thm-isotropy-lfa",  "remark-resonance",   "eq-conj-exp",
};

} // namespace

TEST_SUITE("verify") {

TEST_CASE("suite registry is complete and ordered") {
    const std::vector<std::string>& names = suite_names();
    CHECK(names == kExpectedSuites);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() ==
          names.size());
}

TEST_CASE("every registered suite passes on random samples") {
    for (const std::string& name : suite_names()) {
        const SuiteReport rep = run_suite(name, 0xC0FFEEULL, 5);
        INFO(report_text(rep));
        CHECK(rep.passed());
        CHECK(rep.suite == name);
        CHECK(rep.seed == 0xC0FFEEULL);
        // Deterministic single-example suites clamp the sample count.
        if (name == "example-semisimple") {
            CHECK(rep.samples == 1);
        } else {
            CHECK(rep.samples == 5);
        }
    }
}

TEST_CASE("reports replay byte-identically for a fixed seed") {
    for (const std::string& name :
         {std::string("thm-3.2"), std::string("eq-conj-exp")}) {
        const SuiteReport a = run_suite(name, 99, 4);
        const SuiteReport b = run_suite(name, 99, 4);
        CHECK(report_json(a, /*include_timing=*/false) ==
              report_json(b, /*include_timing=*/false));
        // A different seed changes only the seed field here (the suites
        // pass either way), so determinism is not vacuous: feed the seed
        // into the body via the failure-free JSON shape below.
        const SuiteReport c = run_suite(name, 100, 4);
        CHECK(report_json(a, false) != report_json(c, false));
    }
}

TEST_CASE("report JSON carries the documented fields") {
    const SuiteReport rep = run_suite("prop-criterion", 7, 3);
    const auto timed = nlohmann::json::parse(report_json(rep, true));
    CHECK(timed.at("suite") == "prop-criterion");
    CHECK(timed.at("seed") == 7);
    CHECK(timed.at("samples") == 3);
    CHECK(timed.at("failures").is_array());
    CHECK(timed.at("failures").empty());
    CHECK(timed.contains("ms"));

    const auto bare = nlohmann::json::parse(report_json(rep, false));
    CHECK_FALSE(bare.contains("ms"));

    const std::string text = report_text(rep);
    CHECK(text.find("prop-criterion") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("unknown suite names are rejected with the full menu") {
    CHECK_THROWS_AS(run_suite("bogus", 1, 1), UnknownSuite);
    try {
        run_suite("bogus", 1, 1);
    } catch (const UnknownSuite& e) {
        const std::string msg = e.what();
        CHECK(msg.find("bogus") != std::string::npos);
        for (const std::string& name : suite_names())
            CHECK(msg.find(name) != std::string::npos);
        CHECK(msg.find("all") != std::string::npos);
    }
}

TEST_CASE("run_all_suites covers the registry in order") {
    const std::vector<SuiteReport> reps = run_all_suites(5, 3);
    REQUIRE(reps.size() == suite_names().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].suite == suite_names()[i]);
        INFO(report_text(reps[i]));
        CHECK(reps[i].passed());
    }
}

TEST_CASE("samplers are deterministic and honor their contracts") {
    Rng a(42), b(42);
    for (int i = 0; i < 8; ++i)
        CHECK(a.next() == b.next());

    Rng r(7);
    for (int i = 0; i < 50; ++i) {
        const long v = r.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }

    Rng rs(11);
    for (int i = 0; i < 30; ++i) {
        const Rat q = sample_rat(rs, /*nonzero=*/true);
        CHECK(q != 0);
        CHECK(sample_scalar(rs, true) != Coeff(0));
    }

    // Polynomial slots: univariate in the requested variable, bounded
    // degree, nonzero on request.
    Rng rp(13);
    for (int i = 0; i < 20; ++i) {
        const Poly2 px = sample_poly(rp, /*in_x=*/true, 4, true);
        CHECK(!px.is_zero());
        CHECK(px.degree_y() <= 0);
        CHECK(px.degree() <= 4);
        const Poly2 py = sample_poly(rp, /*in_x=*/false, 3, true);
        CHECK(!py.is_zero());
        CHECK(py.degree_x() <= 0);
        CHECK(py.degree() <= 3);
    }

    // Sampled words flatten to genuine automorphisms: composing with the
    // inverse word returns the identity map.
    Rng rw(17);
    for (int i = 0; i < 10; ++i) {
        const AutWord w = sample_word(rw);
        CHECK(flatten(concat(w, invert(w))) == identity_map());
    }
}

} // TEST_SUITE
