#include "qramsey/report.hpp"

#include <doctest.h>

#include <regex>

using namespace qramsey;

TEST_CASE("rationals serialize as exact fraction strings") {
  CHECK(to_json(PosRational(22, 4)) == Json("11/2"));
  CHECK(to_json(PosRational(4)) == Json("4"));
  CHECK(to_json(NonnegRational()) == Json("0"));
  CHECK(rational_from_json(Json("7/3")) == PosRational(7, 3));
}

TEST_CASE("family json round trip") {
  NFamily f = NFamily::parse(3, "1|2,3");
  CHECK(family_from_json(to_json(f), 3) == f);
}

TEST_CASE("report envelope") {
  ReportBuilder rb("demo", Json{{"k", 2}});
  rb.stats(17, 0);
  Json j = rb.json();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "demo");
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  CHECK(j["found"] == false);

  rb.check("alpha", true).check("beta", true);
  CHECK(rb.all_checks_pass());
  rb.check("gamma", false);
  CHECK_FALSE(rb.all_checks_pass());
}

TEST_CASE("emit/parse round trip preserves the document") {
  ReportBuilder rb("hindman", Json{{"coloring", Json{{"kind", "val2_parity"}}}, {"k", 2}});
  rb.found(true)
      .witness(Json{{"x", Json::array({"1", "1/3"})}})
      .check("reverify", true)
      .stats(4, 12);
  std::string text = rb.str();
  Json parsed = Json::parse(text);
  CHECK(parsed == rb.json());
}

TEST_CASE("reports are deterministic and free of floating-point tokens") {
  auto build = [] {
    ReportBuilder rb("build", Json{{"n", 3}, {"q", "1,2"}});
    rb.witness(Json{{"v", Json::array({"1", "3", "2/5"})}}).check("consistent q=1", true);
    rb.stats(123, 0);
    return rb.str();
  };
  std::string a = build(), b = build();
  CHECK(a == b);
  std::regex fp(R"([0-9]\.[0-9]|[0-9][eE][+-][0-9])");
  CHECK_FALSE(std::regex_search(a, fp));
}

TEST_CASE("weights serialize by pair literal") {
  RatioIndex omega({RatioPair{IndexSet::of({1}), IndexSet::of({2})}});
  RatioWeights w = RatioWeights(omega).set(omega[0], NonnegRational(3, 2));
  Json j = to_json(w);
  CHECK(j == Json{{"1|2", "3/2"}});
}
