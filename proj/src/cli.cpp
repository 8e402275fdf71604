#include "newton_certify/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "newton_certify/certificate.hpp"
#include "newton_certify/error.hpp"
#include "newton_certify/json_io.hpp"
#include "newton_certify/kouchnirenko.hpp"
#include "newton_certify/minimal.hpp"
#include "newton_certify/morse.hpp"
#include "newton_certify/polynomial.hpp"
#include "newton_certify/polytope.hpp"
#include "newton_certify/stencil.hpp"

namespace newton_certify::cli {

namespace {

using json_io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string poly;
  std::string points;
  std::string polytope_json;
  std::string weights;
  bool orthant = false;
  bool polyhedron = false;
  std::optional<unsigned long long> seed;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::vector<LatticePoint> parse_points(const std::string& text) {
  std::vector<LatticePoint> out;
  for (const auto& chunk : split(text, ';')) {
    if (trim(chunk).empty()) continue;
    LatticePoint p;
    for (const auto& c : split(chunk, ',')) {
      const std::string t = trim(c);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (t.empty() || used != t.size()) throw Error("malformed coordinate '" + t + "' in --points");
      p.push_back(v);
    }
    out.push_back(std::move(p));
  }
  if (out.empty()) throw Error("--points lists no points");
  return out;
}

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& c : split(text, ',')) {
    try {
      out.emplace_back(trim(c));
    } catch (const std::exception&) {
      throw Error("malformed weight '" + trim(c) + "' in --w");
    }
  }
  return out;
}

SparsePolynomial require_polynomial(const Options& o) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  if (o.n < 1) throw UsageError("--n (number of variables) is required with --poly");
  return parse_polynomial(o.poly, o.n);
}

LatticePolytope resolve_polytope(const Options& o, bool from_poly_as_polyhedron) {
  if (!o.points.empty()) {
    std::vector<LatticePoint> pts = parse_points(o.points);
    const int n = o.n > 0 ? o.n : static_cast<int>(pts[0].size());
    for (const auto& p : pts)
      if (static_cast<int>(p.size()) != n)
        throw Error("dimension mismatch: point of length " + std::to_string(p.size()) + " with n = " +
                    std::to_string(n));
    return LatticePolytope(n, std::move(pts), o.orthant);
  }
  if (!o.polytope_json.empty()) {
    Json j;
    try {
      j = Json::parse(o.polytope_json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed --polytope JSON: ") + e.what());
    }
    LatticePolytope m = json_io::parse_polytope(j);
    if (o.n > 0 && o.n != m.n()) throw Error("dimension mismatch between --n and --polytope");
    return m;
  }
  if (!o.poly.empty()) {
    SparsePolynomial f = require_polynomial(o);
    return from_poly_as_polyhedron || o.polyhedron ? newton_polyhedron(f) : newton_polytope(f);
  }
  throw UsageError("one of --points, --polytope or --poly is required");
}

Json cmd_newton(const Options& o) {
  SparsePolynomial f = require_polynomial(o);
  return json_io::polytope(o.polyhedron ? newton_polyhedron(f) : newton_polytope(f));
}

Json cmd_contains_o(const Options& o) {
  LatticePolytope m = resolve_polytope(o, false);
  Membership mem = contains_point(m, barycenter(m.n()));
  if (mem.contained()) return Json{{"contains", true}, {"witness", json_io::convex_combination(*mem.witness)}};
  return Json{{"contains", false}, {"separation", json_io::halfspace(*mem.separation)}};
}

Json cmd_stencil(const Options& o) { return json_io::stencil(stencil_of(resolve_polytope(o, false))); }

Json cmd_certify(const Options& o) {
  LatticePolytope m = resolve_polytope(o, false);
  Certificate c = certify(m);
  if (!verify_certificate(m, c)) throw std::logic_error("certificate failed re-verification");
  return json_io::certificate(c);
}

Json cmd_morse(const Options& o) {
  std::optional<SparsePolynomial> f;
  if (!o.poly.empty()) f = require_polynomial(o);
  LatticePolytope m = f ? newton_polyhedron(*f) : resolve_polytope(o, true);
  MorseVerdict v = classify_support(m);
  if (!v.restricted.empty() && !verify_certificate(LatticePolytope(m.n(), v.restricted), v.evidence))
    throw std::logic_error("certificate failed re-verification");
  Json out = json_io::verdict(v);
  if (f) out["is_morse"] = is_morse(*f);
  if (v.kind == MorseKind::GenericallyMorse) {
    const unsigned long long seed = o.seed.value_or(0);
    GenericSample s = genericity_gap_demo(m, {seed}).front();
    out["sample"] = Json{{"seed", seed},
                         {"polynomial", render(s.f)},
                         {"hessian_determinant", to_string(s.hessian_determinant)}};
  }
  return out;
}

Json cmd_milnor(const Options& o) { return json_io::milnor(milnor_number(require_polynomial(o))); }

Json cmd_face(const Options& o) {
  SparsePolynomial f = require_polynomial(o);
  if (o.weights.empty()) throw UsageError("--w is required");
  return Json{{"face", render(face_restriction(f, parse_weights(o.weights)))}};
}

Json cmd_minimal(const Options& o) {
  LatticePolytope m = minimal_subpolytope(resolve_polytope(o, false));
  Membership mem = contains_point(m, barycenter(m.n()));
  if (!mem.contained()) throw std::logic_error("minimal polytope misses O");
  return Json{{"polytope", json_io::polytope(m)}, {"witness", json_io::convex_combination(*mem.witness)}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, unsigned long long default_seed) {
  CLI::App app{"Exact Newton polytope certificates for quadratic forms and Morse singularities",
               "newton-certify"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Number of variables")->check(CLI::PositiveNumber); };
  auto add_poly = [&](CLI::App* s) { s->add_option("--poly", o.poly, "Polynomial, e.g. \"x1^2 + 2*x1*x2\""); };
  auto add_polytope = [&](CLI::App* s) {
    s->add_option("--points", o.points, "Generators as \"1,1,0;1,0,1\"");
    s->add_option("--polytope", o.polytope_json, "Polytope as JSON");
    s->add_flag("--orthant", o.orthant, "Add the nonnegative orthant to --points");
    s->add_flag("--polyhedron", o.polyhedron, "Use the Newton polyhedron of --poly");
  };

  CLI::App* newton = app.add_subcommand("newton", "Newton polytope (or polyhedron) of a polynomial");
  add_n(newton);
  add_poly(newton);
  newton->add_flag("--polyhedron", o.polyhedron, "Newton polyhedron instead of polytope");

  CLI::App* contains = app.add_subcommand("contains-o", "Membership of the barycenter O with a witness");
  CLI::App* stencil = app.add_subcommand("stencil", "Stencil of a polytope inside 2*Delta");
  CLI::App* certify_cmd = app.add_subcommand("certify", "Matching or cover certificate");
  CLI::App* minimal = app.add_subcommand("minimal", "A minimal sub-polytope containing O");
  for (CLI::App* s : {contains, stencil, certify_cmd, minimal}) {
    add_n(s);
    add_poly(s);
    add_polytope(s);
  }

  CLI::App* morse = app.add_subcommand("morse", "Never-Morse / generically-Morse verdict");
  add_n(morse);
  add_poly(morse);
  morse->add_option("--points", o.points, "Generators as \"1,1,0;1,0,1\"");
  morse->add_option("--polytope", o.polytope_json, "Polytope as JSON");
  morse->add_flag("--orthant", o.orthant, "Add the nonnegative orthant to --points");
  morse->add_option("--seed", o.seed, "Seed for the generic sample");

  CLI::App* milnor = app.add_subcommand("milnor", "Milnor number from the Newton diagram");
  add_n(milnor);
  add_poly(milnor);

  CLI::App* face = app.add_subcommand("face", "Restriction of f to the face with inner normal w");
  add_n(face);
  add_poly(face);
  face->add_option("--w", o.weights, "Positive weights, e.g. \"1,1\" or \"1/2,3\"");

  std::vector<std::string> storage{"newton-certify"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    emit(out, Json{{"error", "unknown subcommand '" + args.front() + "'"}});
    return 2;
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream err;
      app.exit(e, out, err);
      return 0;
    }
    emit(out, Json{{"error", e.what()}});
    return 2;
  }
  if (!o.seed) o.seed = default_seed;

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Json result;
    if (name == "newton") result = cmd_newton(o);
    else if (name == "contains-o") result = cmd_contains_o(o);
    else if (name == "stencil") result = cmd_stencil(o);
    else if (name == "certify") result = cmd_certify(o);
    else if (name == "morse") result = cmd_morse(o);
    else if (name == "milnor") result = cmd_milnor(o);
    else if (name == "face") result = cmd_face(o);
    else result = cmd_minimal(o);
    emit(out, result);
    return 0;
  } catch (const UsageError& e) {
    emit(out, Json{{"error", e.what()}});
    return 2;
  } catch (const Error& e) {
    emit(out, Json{{"error", e.what()}});
    return 1;
  } catch (const std::logic_error& e) {
    emit(out, Json{{"error", std::string("internal: ") + e.what()}});
    return 1;
  }
}

}  // namespace newton_certify::cli
