#include "idiag/serialize.hpp"

#include <cmath>

#include "idiag/error.hpp"

namespace idiag::json_io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) invalid("expected a JSON object with key '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) invalid("missing key '" + std::string(key) + "'");
  return *it;
}

std::size_t dimension_from_json(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) invalid("'dim' must be a positive integer");
  return d.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  invalid("expected a rational string, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) invalid("expected an array of rationals, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const Point& p) { return to_json(p.coords()); }
Point point_from_json(const json& j) { return Point(vector_from_json(j)); }

json to_json(const Diagram& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return json{{"dim", g.dim()}, {"generators", std::move(gens)}};
}

Diagram diagram_from_json(const json& j) {
  const std::size_t dim = dimension_from_json(j);
  const json& gens = field(j, "generators");
  if (!gens.is_array()) invalid("'generators' must be an array");
  std::vector<Point> pts;
  for (const auto& g : gens) pts.push_back(point_from_json(g));
  return canonicalize(dim, std::move(pts));
}

json to_json(const SingularityInput& u) {
  json polys = json::array();
  for (const auto& p : u.polys()) polys.push_back(to_string(p));
  return json{{"dim", u.dim()}, {"polys", std::move(polys)}};
}

SingularityInput input_from_json(const json& j) {
  const std::size_t dim = dimension_from_json(j);
  const json& polys = field(j, "polys");
  if (!polys.is_array()) invalid("'polys' must be an array of strings");
  std::vector<std::string> texts;
  for (const auto& p : polys) {
    if (!p.is_string()) invalid("'polys' entries must be strings");
    texts.push_back(p.get<std::string>());
  }
  return parse_input(dim, texts);
}

linalg::Matrix matrix_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) invalid("matrix must be an array");
  linalg::Matrix m;
  if (!j.empty() && j.front().is_array()) {
    for (const auto& row : j) m.push_back(vector_from_json(row));
  } else {
    Vector flat = vector_from_json(j);
    if (flat.size() != dim * dim)
      throw Error(ErrorCode::DimensionMismatch, "flat matrix needs " + std::to_string(dim * dim) + " entries");
    for (std::size_t i = 0; i < dim; ++i) m.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * dim),
                                                        flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
  }
  if (m.size() != dim) throw Error(ErrorCode::DimensionMismatch, "matrix must have " + std::to_string(dim) + " rows");
  for (const auto& row : m)
    if (row.size() != dim) throw Error(ErrorCode::DimensionMismatch, "matrix rows must have " + std::to_string(dim) + " entries");
  return m;
}

json to_json(const DecompositionCertificate& c) {
  if (const auto* d = std::get_if<Decomposable>(&c)) {
    return json{{"verdict", "decomposable"},
                {"left", to_json(d->left)},
                {"right", to_json(d->right)},
                {"method", std::string(to_string(d->method))},
                {"verified", true}};
  }
  const auto& ind = std::get<Indecomposable>(c);
  return json{{"verdict", "indecomposable"},
              {"method", std::string(to_string(ind.method))},
              {"detail", ind.detail},
              {"verified", true}};
}

namespace {

Method method_from_string(const std::string& s) {
  for (Method m : {Method::SimplexFacet, Method::TwoDimChain, Method::FacetPairLp})
    if (to_string(m) == s) return m;
  invalid("unknown method '" + s + "'");
}

}  // namespace

DecompositionCertificate certificate_from_json(const json& j) {
  const json& verdict = field(j, "verdict");
  const json& method = field(j, "method");
  if (!verdict.is_string() || !method.is_string()) invalid("'verdict' and 'method' must be strings");
  Method m = method_from_string(method.get<std::string>());
  if (verdict == "decomposable") return Decomposable{diagram_from_json(field(j, "left")), diagram_from_json(field(j, "right")), m};
  if (verdict == "indecomposable") {
    std::string detail = j.contains("detail") && j["detail"].is_string() ? j["detail"].get<std::string>() : "";
    return Indecomposable{m, std::move(detail)};
  }
  invalid("unknown verdict " + verdict.dump());
}

json to_json(const ExtremityReport& r) {
  return json{{"input", to_json(r.input)},
              {"diagram", to_json(r.diagram)},
              {"verdict", std::string(to_string(r.verdict))},
              {"certificate", to_json(r.certificate)},
              {"caveat", r.caveat}};
}

json to_json(const NewtonNumber& n) {
  return json{{"newton_number", n.is_infinite() ? json("infinite") : to_json(n.value())}};
}

json to_json(const std::optional<HomothetyWitness>& w) {
  if (!w) return json{{"homothetic", false}};
  return json{{"homothetic", true}, {"c", to_json(w->c)}, {"x", to_json(w->x)}};
}

}  // namespace idiag::json_io
