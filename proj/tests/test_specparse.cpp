#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "holoform/specparse.hpp"

using namespace holoform;

namespace {

std::string data(const std::string& name) {
  return std::string(HOLOFORM_TEST_DATA) + "/" + name;
}

template <class F>
ParseError catch_parse(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("weight specs") {
  CHECK(parse_weight("power:q=0.3")(0.5) == doctest::Approx(std::pow(0.5, 0.3)).epsilon(1e-15));
  const WeightFun pl = parse_weight("powerlog:q=0.3,beta=1");
  CHECK(pl(0.5) > 0.0);
  const WeightFun tab = parse_weight("table:" + data("sqrt_weight.csv"));
  CHECK(tab(0.25) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(tab(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(parse_weight("cubic:q=1"), ParseError);
  CHECK_THROWS_AS(parse_weight("power:q="), ParseError);
  CHECK_THROWS_AS(parse_weight("power:r=0.3"), ParseError);
  CHECK_THROWS_AS(parse_weight("table:/nonexistent/weights.csv"), ParseError);
}

TEST_CASE("weight table text") {
  const auto knots = parse_weight_table("t,K\n0.1,0.2\n# comment\n0.5,0.6\n", "mem");
  REQUIRE(knots.size() == 2);
  CHECK(knots[1].first == 0.5);
  CHECK(knots[1].second == 0.6);
  const ParseError e = catch_parse([] { parse_weight_table("0.1,0.2\n0.5,x\n", "mem"); });
  CHECK(e.line() == 2);
}

TEST_CASE("function specs") {
  const auto gap = std::get<GapSpec>(parse_function("gap:beta=0.5,ratio=3,kmax=4"));
  CHECK(gap.beta == 0.5);
  CHECK(gap.ratio == 3);
  CHECK(gap.k_max == 4);
  CHECK(std::get<GapSpec>(parse_function("gap:beta=0.7")).ratio == 2);
  CHECK(std::get<PowerSingularSpec>(parse_function("powsing:gamma=0.8")).gamma == 0.8);
  CHECK(std::get<MonomialSpec>(parse_function("mono:n=5")).n == 5);
  const auto poly = std::get<PolynomialSpec>(parse_function("poly:1,0,0.5"));
  REQUIRE(poly.coeffs.size() == 3);
  CHECK(poly.coeffs[2] == cplx(0.5));
  CHECK_THROWS_AS(parse_function("sin:x=1"), ParseError);
  CHECK_THROWS_AS(parse_function("mono:n=2.5"), ParseError);
  const ParseError e = catch_parse([] { parse_function("poly:1,zz"); });
  CHECK(e.column() == 8);
}

TEST_CASE("space specs") {
  const SpaceParams sp = parse_space("p=3,s=0.6,sigma=0.5,K=powerlog:q=0.2,beta=1");
  CHECK(sp.p == 3.0);
  CHECK(sp.s == 0.6);
  CHECK(sp.sigma == 0.5);
  CHECK(sp.W.describe().find("powerlog") != std::string::npos);
  const SpaceParams d = parse_space("s=0.7");
  CHECK(d.p == 2.0);
  CHECK(d.s == 0.7);
  CHECK_THROWS_AS(parse_space("p=0.5"), ParseError);
  CHECK_THROWS_AS(parse_space("p=2,t=1"), ParseError);
}

TEST_CASE("real lists") {
  const auto v = parse_real_list("1, 2.5,-3e-2");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == -0.03);
  const ParseError e = catch_parse([] { parse_real_list("1,,2", "x", 4, 10); });
  CHECK(e.line() == 4);
  CHECK(e.column() >= 10);
}

TEST_CASE("key value files") {
  const KeyValueConfig kv = parse_config_text("# header\n\na=1\nb = two\nc=0.5 # trailing\n", "mem");
  REQUIRE(kv.entries.size() == 3);
  CHECK(kv.get_int("a", 0) == 1);
  CHECK(kv.get("b").value() == "two");
  CHECK(kv.get_real("c", 0.0) == 0.5);
  CHECK(kv.get_real("missing", 7.0) == 7.0);
  CHECK(kv.unknown({"a", "c"}).size() == 1);
  const ParseError bad = catch_parse([&] { kv.get_real("b", 0.0); });
  CHECK(bad.line() == 4);
  const ParseError dup = catch_parse([] { parse_config_text("a=1\na=2\n", "mem"); });
  CHECK(dup.line() == 2);
  CHECK_THROWS_AS(parse_config_text("just words\n", "mem"), ParseError);
  CHECK_THROWS_AS(load_config(data("no_such_file.txt")), ParseError);
}

TEST_CASE("system files") {
  const ODESystem sys = parse_system(load_config(data("cos_system.txt")), 32);
  CHECK(sys.n == 2);
  REQUIRE(sys.A.size() == 2);
  CHECK(sys.A[0].coeff(0) == cplx(0.01));
  CHECK(sys.A[1].is_zero());
  CHECK(sys.rhs.is_zero());
  REQUIRE(sys.init.size() == 2);
  CHECK(sys.init[0] == cplx(1.0));
  const ODESystem third = parse_system(load_config(data("third_order.txt")), 32);
  CHECK(third.n == 3);
  const ParseError e = catch_parse([] { parse_system(load_config(data("bad_system.txt")), 32); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 14);
  CHECK(std::string(e.what()).find("bad_system.txt:2:14") != std::string::npos);
  CHECK_THROWS_AS(parse_system(parse_config_text("n=1\nA3=poly:1\n", "mem"), 8), ParseError);
  const ODESystem dflt = parse_system(parse_config_text("n=3\n", "mem"), 8);
  CHECK(dflt.init == std::vector<cplx>{1.0, 0.0, 0.0});
}
