#include <doctest.h>

#include <sstream>

#include "newton_certify/cli.hpp"
#include "newton_certify/json_io.hpp"

using namespace newton_certify;
using json_io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args, unsigned long long seed = 0) {
  std::ostringstream out;
  const int code = cli::run(args, out, seed);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  Result a = run({"certify", "--n", "3", "--points", "1,1,0;1,0,1;0,1,1"});
  CHECK(a.code == 0);
  CHECK(a.out == "{\"kind\":\"matching\",\"sigma\":[2,3,1]}\n");

  Result b = run({"morse", "--n", "2", "--poly", "x1^2 + x2^3"});
  CHECK(b.code == 0);
  CHECK(b.json()["kind"] == "never_morse");
  CHECK(b.json()["is_morse"] == false);

  Result c = run({"milnor", "--n", "2", "--poly", "x1^3 + x2^3"});
  CHECK(c.code == 0);
  CHECK(c.out == "{\"mu\":4,\"conditional\":true}\n");
}

TEST_CASE("cli golden outputs") {
  CHECK(run({"certify", "--points", "2,0,0;1,1,0;1,0,1"}).out ==
        "{\"kind\":\"cover\",\"I\":[1],\"J\":[1],\"halfspace\":{\"coeffs\":[2,0,0],\"rhs\":2}}\n");
  CHECK(run({"newton", "--n", "2", "--poly", "x1^2 + x1*x2 + x2^2"}).out ==
        "{\"n\":2,\"generators\":[[0,2],[2,0]],\"orthant_recession\":false}\n");
  CHECK(run({"newton", "--n", "2", "--poly", "x1^2 + x1^2*x2", "--polyhedron"}).out ==
        "{\"n\":2,\"generators\":[[2,0]],\"orthant_recession\":true}\n");
  CHECK(run({"contains-o", "--points", "2,0;0,2"}).out ==
        "{\"contains\":true,\"witness\":{\"points\":[[0,2],[2,0]],\"weights\":[\"1/2\",\"1/2\"]}}\n");
  CHECK(run({"stencil", "--points", "2,0"}).out == "{\"n\":2,\"bits\":[[1,0],[0,0]]}\n");
  CHECK(run({"face", "--n", "2", "--poly", "x1^2 + x1*x2 + x2^3", "--w", "1,1"}).out ==
        "{\"face\":\"x1^2 + x1*x2\"}\n");
  CHECK(run({"face", "--n", "2", "--poly", "x1^2 + x2^2", "--w", "1,2"}).out == "{\"face\":\"x1^2\"}\n");
  CHECK(run({"milnor", "--n", "2", "--poly", "x1^2*x2^2"}).out == "{\"mu\":\"infinite\",\"conditional\":true}\n");
  CHECK(run({"minimal", "--points", "2,0;1,1;0,2"}).out ==
        "{\"polytope\":{\"n\":2,\"generators\":[[1,1]],\"orthant_recession\":false},"
        "\"witness\":{\"points\":[[1,1]],\"weights\":[1]}}\n");
}

TEST_CASE("cli contains-o separation is checkable") {
  Result r = run({"contains-o", "--points", "2,0,0;1,1,0"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["contains"] == false);
  const Halfspace h{{json_io::parse_rational(j["separation"]["coeffs"][0]),
                     json_io::parse_rational(j["separation"]["coeffs"][1]),
                     json_io::parse_rational(j["separation"]["coeffs"][2])},
                    json_io::parse_rational(j["separation"]["rhs"])};
  CHECK(h.contains(LatticePoint{2, 0, 0}));
  CHECK(h.contains(LatticePoint{1, 1, 0}));
  CHECK_FALSE(h.contains(barycenter(3)));
}

TEST_CASE("cli polytope input as JSON") {
  Result r = run({"certify", "--polytope", R"({"n":3,"generators":[[1,1,0],[1,0,1],[0,1,1]],"orthant_recession":false})"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"kind\":\"matching\",\"sigma\":[2,3,1]}\n");
}

TEST_CASE("cli morse sample is deterministic in the seed") {
  const std::vector<std::string> args{"morse", "--n", "2", "--poly", "x1*x2 + x1^5"};
  Result a = run(args, 5), b = run(args, 5), c = run(args, 6);
  std::vector<std::string> explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "5"});
  Result d = run(explicit_seed, 99);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out == d.out);
  CHECK(a.json()["kind"] == "generically_morse");
  CHECK(a.json()["sample"]["seed"] == 5);
}

TEST_CASE("cli errors") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"certify"}).code == 2);
  CHECK(run({"milnor", "--poly", "x1^2"}).code == 2);
  CHECK(run({"face", "--n", "2", "--poly", "x1^2"}).code == 2);
  CHECK(run({"certify", "--points", "1,1", "--frobnicate"}).code == 2);

  Result bad_poly = run({"milnor", "--n", "2", "--poly", "x1^^2"});
  CHECK(bad_poly.code == 1);
  CHECK(bad_poly.json().contains("error"));
  CHECK(run({"certify", "--n", "3", "--points", "1,1;0,2"}).code == 1);
  CHECK(run({"certify", "--points", "1,1,0;1,1"}).code == 1);
  CHECK(run({"certify", "--points", "3,0"}).code == 1);
  CHECK(run({"certify", "--points", "a,b"}).code == 1);
  CHECK(run({"face", "--n", "2", "--poly", "x1^2", "--w", "1,-1"}).code == 1);
  CHECK(run({"minimal", "--points", "2,0"}).code == 1);
  CHECK(run({"certify", "--polytope", "{not json"}).code == 1);

  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("certify") != std::string::npos);
}

TEST_CASE("json round trips") {
  LatticePolytope m(3, {{1, 1, 0}, {0, 0, 2}}, true);
  CHECK(json_io::parse_polytope(json_io::polytope(m)) == m);
  CHECK(json_io::parse_rational(json_io::rational(Rational(-3) / 4)) == Rational(-3) / 4);
  CHECK(json_io::rational(Rational(6) / 3) == Json(2));
  Certificate cover = CoverCertificate{{{0}, {0}}, separating_halfspace({{0}, {0}}, 3)};
  Certificate back = json_io::parse_certificate(json_io::certificate(cover));
  CHECK(json_io::certificate(back) == json_io::certificate(cover));
  Certificate match = MatchingCertificate{{1, 2, 0}};
  CHECK(std::get<MatchingCertificate>(json_io::parse_certificate(json_io::certificate(match))).sigma ==
        Permutation{1, 2, 0});
  CHECK_THROWS(json_io::parse_polytope(Json::parse(R"({"n":2,"generators":[[1]],"orthant_recession":false})")));
}
