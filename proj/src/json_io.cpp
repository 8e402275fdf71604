#include "newton_certify/json_io.hpp"

#include <limits>

#include "newton_certify/error.hpp"

namespace newton_certify::json_io {

Json rational(const Rational& r) {
  if (is_integer(r)) {
    BigInt v = boost::multiprecision::numerator(r);
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
  }
  return r.str();
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error("expected an integer or a \"p/q\" rational, got " + j.dump());
}

Json polytope(const LatticePolytope& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(g);
  return Json{{"n", m.n()}, {"generators", gens}, {"orthant_recession", m.orthant_recession()}};
}

LatticePolytope parse_polytope(const Json& j) {
  try {
    return LatticePolytope(j.at("n").get<int>(), j.at("generators").get<std::vector<LatticePoint>>(),
                           j.value("orthant_recession", false));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed polytope JSON: ") + e.what());
  }
}

Json convex_combination(const ConvexCombination& c) {
  Json weights = Json::array();
  for (const auto& w : c.weights()) weights.push_back(rational(w));
  Json out{{"points", c.points()}, {"weights", weights}};
  if (!c.recession().empty()) {
    Json rec = Json::array();
    for (const auto& r : c.recession()) rec.push_back(rational(r));
    out["recession"] = rec;
  }
  return out;
}

Json halfspace(const Halfspace& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(rational(c));
  return Json{{"coeffs", coeffs}, {"rhs", rational(h.rhs)}};
}

namespace {

Json one_based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::vector<int> zero_based(const Json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>() - 1);
  return out;
}

}  // namespace

Json certificate(const Certificate& c) {
  if (const auto* m = std::get_if<MatchingCertificate>(&c))
    return Json{{"kind", "matching"}, {"sigma", one_based(m->sigma)}};
  const auto& cc = std::get<CoverCertificate>(c);
  return Json{{"kind", "cover"},
              {"I", one_based(cc.cover.rows)},
              {"J", one_based(cc.cover.cols)},
              {"halfspace", halfspace(cc.halfspace)}};
}

Certificate parse_certificate(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matching") return MatchingCertificate{zero_based(j.at("sigma"))};
    if (kind == "cover") {
      CoverCertificate c;
      c.cover.rows = zero_based(j.at("I"));
      c.cover.cols = zero_based(j.at("J"));
      for (const auto& x : j.at("halfspace").at("coeffs")) c.halfspace.coeffs.push_back(parse_rational(x));
      c.halfspace.rhs = parse_rational(j.at("halfspace").at("rhs"));
      return c;
    }
    throw Error("unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
}

Json stencil(const Stencil& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.n(); ++j) row.push_back(s(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return Json{{"n", s.n()}, {"bits", rows}};
}

Json verdict(const MorseVerdict& v) {
  return Json{{"kind", v.kind == MorseKind::GenericallyMorse ? "generically_morse" : "never_morse"},
              {"certificate", certificate(v.evidence)}};
}

Json milnor(const MilnorNumber& mu) {
  Json value = mu.infinite() ? Json("infinite") : Json(*mu.value);
  return Json{{"mu", value}, {"conditional", true}};
}

}  // namespace newton_certify::json_io
