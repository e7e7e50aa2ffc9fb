#include "doctest.h"

#include "quadsurd/harness.hpp"

#include "json.hpp"

#include <regex>

using namespace quadsurd;
using namespace quadsurd::harness;

TEST_CASE("exact limit tokens") {
    auto l = ExactLimit::parse("5/4");
    CHECK(l.q == Rat(5, 4));
    CHECK_FALSE(l.times_sqrt2);
    CHECK(l.str() == "5/4");

    l = ExactLimit::parse("3*sqrt2");
    CHECK(l.q == 3);
    CHECK(l.times_sqrt2);
    CHECK(l.str() == "3*sqrt2");

    l = ExactLimit::parse("sqrt2");
    CHECK(l.q == 1);
    CHECK(l.str() == "sqrt2");
    CHECK(l.value(200).to_double() == doctest::Approx(1.41421356));

    CHECK_THROWS_AS(ExactLimit::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(ExactLimit::parse("-2"), std::invalid_argument);
    CHECK_THROWS_AS(ExactLimit::parse("0"), std::invalid_argument);
}

TEST_CASE("suite names round-trip") {
    for (SuiteId id : all_suites()) CHECK(suite_from_string(to_string(id)) == id);
    CHECK_FALSE(suite_from_string("conj11").has_value());
}

TEST_CASE("empty suite list gives an empty passing report") {
    RunConfig cfg;
    Report rep = run_suite(cfg);
    CHECK(rep.suites.empty());
    CHECK(rep.all_pass());
}

TEST_CASE("conjecture 2 suite reproduces the printed list") {
    Report rep = verify_conjecture(SuiteId::conj2, 1, 7, PrecisionContext(60));
    REQUIRE(rep.suites.size() == 1);
    CHECK(rep.suites[0].pass == 7);
    CHECK(rep.suites[0].fail == 0);
    CHECK(rep.suites[0].cases[1].recognized == "4 (-12 + 5 sqrt(6)) pi");
    CHECK(rep.all_pass());
}

TEST_CASE("closed-form verification wrapper") {
    Report rep = verify_closed_forms(6, {Rat(2)}, PrecisionContext(60));
    CHECK(rep.all_pass());
    CHECK(rep.suites.size() == 4);
    CHECK_THROWS_AS(verify_closed_forms(101, {Rat(2)}, PrecisionContext(60)),
                    std::domain_error);
}

namespace {
std::string strip_timing(std::string s) {
    s = std::regex_replace(s, std::regex("\"ms\": \\d+"), "\"ms\": 0");
    return s;
}
}  // namespace

TEST_CASE("reports are deterministic modulo timing") {
    RunConfig cfg;
    cfg.suites = {SuiteId::conj4, SuiteId::series};
    cfg.series_terms = 2000;
    cfg.fourier_terms = 500;
    Report a = run_suite(cfg);
    Report b = run_suite(cfg);
    CHECK(a.all_pass());
    CHECK(strip_timing(a.to_json()) == strip_timing(b.to_json()));
    // schema sanity
    auto j = nlohmann::json::parse(a.to_json());
    CHECK(j.contains("environment"));
    CHECK(j["suites"][0].contains("cases"));
    auto& c0 = j["suites"][0]["cases"][0];
    for (const char* field :
         {"id", "params", "computed", "recognized", "expected", "offset", "status",
          "residual", "digits", "ms"})
        CHECK(c0.contains(field));
}

TEST_CASE("integral cache: soundness and reuse") {
    auto dir = std::filesystem::temp_directory_path() / "quadsurd_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto file = dir / "integrals.jsonl";

    RunConfig cfg;
    cfg.suites = {SuiteId::conj2};
    cfg.m_range = {1u, 5u};
    cfg.cache_file = file;

    Report first = run_suite(cfg);
    CHECK(first.all_pass());
    CHECK(first.cache_misses == 5);
    CHECK(first.cache_hits == 0);

    Report second = run_suite(cfg);
    CHECK(second.all_pass());
    CHECK(second.cache_hits == 5);
    for (size_t i = 0; i < first.suites[0].cases.size(); ++i)
        CHECK(first.suites[0].cases[i].computed == second.suites[0].cases[i].computed);

    IntegralCache cache(file);
    CHECK(cache.size() == 5);
    cache.clear();
    CHECK_FALSE(std::filesystem::exists(file));
    std::filesystem::remove_all(dir);
}

TEST_CASE("threaded run matches sequential run") {
    RunConfig cfg;
    cfg.suites = {SuiteId::conj2};
    Report seq = run_suite(cfg);
    cfg.threads = 4;
    Report par = run_suite(cfg);
    auto normalize = [](std::string s) {
        return std::regex_replace(strip_timing(std::move(s)),
                                  std::regex("\"threads\": \\d+"), "\"threads\": 0");
    };
    CHECK(normalize(seq.to_json()) == normalize(par.to_json()));
}

TEST_CASE("conjecture 8 over the short user range still passes") {
    Report rep = verify_conjecture(SuiteId::conj8, 1, 17, PrecisionContext(60));
    CHECK(rep.all_pass());
    CHECK(rep.suites[0].cases.size() == 17);
}
