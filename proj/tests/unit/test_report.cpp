#include <doctest.h>

#include <chevkit/report.hpp>

#include <json.hpp>

using namespace chevkit;

TEST_CASE("every check passes on the bundled data") {
  const auto rep = verify_paper();
  CHECK(rep.all_pass());
  CHECK(rep.passed() == 17);
  CHECK(rep.failed() == 0);
  std::vector<std::string> ids;
  for (const auto& c : rep.checks) {
    ids.push_back(c.id);
    CHECK_MESSAGE(c.pass, c.id, ": ", c.details);
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(ids == check_ids());
}

TEST_CASE("report schema and determinism") {
  const auto a = verify_paper().to_json();
  const auto b = verify_paper().to_json();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j.at("version") == 1);
  CHECK(j.at("summary").at("pass") == 17);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK_FALSE(j.contains("timing"));
  for (const auto& c : j.at("checks")) {
    CHECK(c.size() == 4);
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("details"));
    CHECK(c.at("status") == "PASS");
  }
  const auto timed = nlohmann::json::parse(verify_paper().to_json(true));
  CHECK(timed.at("timing").at("elapsed_ms").size() == 17);
  CHECK(timed.at("checks") == j.at("checks"));
  CHECK(verify_paper().to_text() == verify_paper().to_text());
}

TEST_CASE("brute-force field option") {
  VerifyOptions gf2;
  gf2.brute_field = GF2m::with_degree(1);
  auto details = [](const VerificationReport& r) {
    for (const auto& c : r.checks) {
      if (c.id == "non-conjugacy-field") return c.details;
    }
    return std::string();
  };
  const auto r2 = verify_paper(gf2);
  CHECK(r2.all_pass());
  CHECK(details(r2).find("128 candidates") != std::string::npos);
  CHECK(details(r2).find("gf2") != std::string::npos);
  CHECK(details(verify_paper()).find("16384 candidates") != std::string::npos);
}

TEST_CASE("corrupted root table: roots fails and the pipeline continues") {
  VerifyOptions opts;
  opts.table = LabelTable::read_csv(CHEVKIT_FIXTURES "/e7_roots_corrupted.csv");
  const auto rep = verify_paper(opts);
  REQUIRE(rep.checks.size() == 17);
  CHECK(rep.checks[0].id == "roots");
  CHECK_FALSE(rep.checks[0].pass);
  CHECK(rep.checks[0].details.find("label 3") != std::string::npos);
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.failed() >= 1);
  for (size_t i = 1; i < rep.checks.size(); ++i) {
    CHECK_MESSAGE(!rep.checks[i].pass, rep.checks[i].id);
    CHECK(rep.checks[i].details.find("label") != std::string::npos);
  }
  CHECK(verify_paper(opts).to_json() == rep.to_json());
}
