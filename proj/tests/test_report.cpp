#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "holoform/report.hpp"

using namespace holoform;

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(1e-5) == "1.000000000000e-05");
  CHECK(format_number(-2.5e-7) == "-2.500000000000e-07");
  CHECK(format_number(1e-4) == "0.0001");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("csv layout") {
  ResultTable t;
  t.command = "norm";
  ResultRow a;
  a.label = "besov_norm";
  a.params = {{"f", "gap:beta=0.5,ratio=2"}, {"p", "2"}};
  a.value = 0.5;
  a.refinement_delta = 1e-6;
  t.rows.push_back(a);
  ResultRow b;
  b.label = "x";
  b.pass = false;
  b.error = "said \"no\"";
  t.rows.push_back(b);
  const std::string csv = to_csv(t);
  CHECK(csv ==
        "label,params,value,refinement_delta,pass,error\n"
        "besov_norm,\"f=gap:beta=0.5,ratio=2;p=2\",0.5,1.000000000000e-06,true,\n"
        "x,,0,0,false,\"said \"\"no\"\"\"\n");
  CHECK(to_csv(t) == csv);
  CHECK_FALSE(t.all_pass());
}

TEST_CASE("json layout") {
  ResultTable t;
  t.command = "verify";
  t.seed = 7;
  ResultRow r;
  r.label = "diverging";
  r.value = std::numeric_limits<double>::infinity();
  t.rows.push_back(r);
  const nlohmann::json j = to_json(t);
  CHECK(j["metadata"]["version"] == "0.1.0");
  CHECK(j["metadata"]["seed"] == 7);
  CHECK(j["metadata"]["command"] == "verify");
  CHECK(j["metadata"].contains("timestamp"));
  CHECK_FALSE(to_json(t, false)["metadata"].contains("timestamp"));
  CHECK(j["rows"][0]["value"] == "inf");
  CHECK(j["all_pass"] == true);
  CHECK(to_json(t, false).dump() == to_json(t, false).dump());
}

TEST_CASE("comparability rows") {
  ComparabilityReport r;
  r.label = "thm21 t=3";
  r.left = 2.0;
  r.right = 1.0;
  r.ratio = 2.0;
  r.pass = true;
  r.classification = "finite";
  ResultTable t;
  append_reports(t, {r, r});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].value == 2.0);
  CHECK(t.rows[0].params[3].second == "finite");
  CHECK(t.extra["reports"].size() == 2);
  CHECK(to_json(r)["mode"] == "two-sided");
}
