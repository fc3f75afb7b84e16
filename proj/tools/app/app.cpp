#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "idiag/decomposition.hpp"
#include "idiag/error.hpp"
#include "idiag/measures.hpp"
#include "idiag/serialize.hpp"

namespace idiag::cli {

namespace {

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::Diagram, "diagram"},       {Command::Lelong, "lelong"},
    {Command::Sum, "sum"},               {Command::Homothetic, "homothetic"},
    {Command::Decompose, "decompose"},   {Command::Classify, "classify"},
    {Command::NewtonNumber, "newton-number"}, {Command::Substitute, "substitute"},
    {Command::Indicator, "indicator"},
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unbounded:
    case ErrorCode::UnsupportedDimension: return kExitUnsupported;
    case ErrorCode::InvariantViolation: return kExitInternal;
    default: return kExitInvalid;
  }
}

json error_json(const Error& e) {
  json err{{"code", std::string(idiag::to_string(e.code()))}, {"message", e.what()}};
  if (e.position()) err["position"] = *e.position();
  return json{{"error", std::move(err)}};
}

const json& need(const json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key))
    throw Error(ErrorCode::InvalidInput, std::string("payload is missing '") + key + "'");
  return payload.at(key);
}

Vector vector_field(const json& payload, const char* key) {
  const json& v = need(payload, key);
  if (v.is_string()) return parse_vector(v.get<std::string>());
  return json_io::vector_from_json(v);
}

json dispatch(const Request& r, int& exit_code) {
  const json& p = r.payload;
  switch (r.command) {
    case Command::Diagram: {
      Diagram g = diagram_of_input(json_io::input_from_json(need(p, "input")));
      return json{{"diagram", json_io::to_json(g)},
                  {"homothety_representative", json_io::to_json(homothety_representative(g))}};
    }
    case Command::Lelong: {
      auto u = json_io::input_from_json(need(p, "input"));
      return json{{"lelong", json_io::to_json(relative_type_monomial(u, Weight(vector_field(p, "weight"))))}};
    }
    case Command::Sum:
      return json_io::to_json(
          minkowski_sum(json_io::diagram_from_json(need(p, "left")), json_io::diagram_from_json(need(p, "right"))));
    case Command::Homothetic:
      return json_io::to_json(
          is_homothetic_to(json_io::diagram_from_json(need(p, "left")), json_io::diagram_from_json(need(p, "right"))));
    case Command::Decompose:
      return json_io::to_json(decide_decomposability(json_io::diagram_from_json(need(p, "diagram"))));
    case Command::Classify:
      return json_io::to_json(classify_extreme(json_io::input_from_json(need(p, "input"))));
    case Command::NewtonNumber: {
      auto n = newton_number(json_io::diagram_from_json(need(p, "diagram")));
      if (n.is_infinite()) exit_code = kExitUnsupported;
      return json_io::to_json(n);
    }
    case Command::Substitute: {
      auto u = json_io::input_from_json(need(p, "input"));
      return json_io::to_json(substitute_linear(u, json_io::matrix_from_json(need(p, "matrix"), u.dim())));
    }
    case Command::Indicator:
      return json{{"indicator", json_io::to_json(indicator_eval(json_io::diagram_from_json(need(p, "diagram")),
                                                                vector_field(p, "t")))}};
  }
  throw Error(ErrorCode::InvalidInput, "unknown command");
}

}  // namespace

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto& [c, n] : kCommandNames)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  for (const auto& [cmd, n] : kCommandNames)
    if (cmd == c) return n;
  return "unknown";
}

Response run(const Request& request) {
  Response resp;
  try {
    resp.result = dispatch(request, resp.exit_code);
  } catch (const Error& e) {
    resp.exit_code = exit_code_for(e.code());
    resp.result = error_json(e);
  } catch (const json::exception& e) {
    resp.exit_code = kExitInvalid;
    resp.result = error_json(Error(ErrorCode::InvalidInput, e.what()));
  } catch (const std::exception& e) {
    resp.exit_code = kExitInternal;
    resp.result = error_json(Error(ErrorCode::InvariantViolation, e.what()));
  }
  return resp;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

BatchManifest manifest_from_json(const json& manifest, const std::filesystem::path& base_dir) {
  if (!manifest.is_object() || !manifest.contains("requests") || !manifest["requests"].is_array())
    throw Error(ErrorCode::InvalidInput, "manifest must be an object with a 'requests' array");
  BatchManifest out;
  if (manifest.contains("jobs")) {
    const json& jobs = manifest["jobs"];
    if (!jobs.is_number_integer() || jobs.get<long long>() < 1)
      throw Error(ErrorCode::InvalidInput, "'jobs' must be a positive integer");
    out.jobs = jobs.get<std::size_t>();
  }
  std::set<std::string> ids;
  std::size_t position = 0;
  for (const auto& entry : manifest["requests"]) {
    ++position;
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
      throw Error(ErrorCode::InvalidInput, "request " + std::to_string(position) + " has no string 'id'");
    BatchEntry be;
    be.id = entry["id"].get<std::string>();
    if (!ids.insert(be.id).second) throw Error(ErrorCode::InvalidInput, "duplicate request id '" + be.id + "'");
    try {
      if (!entry.contains("command") || !entry["command"].is_string())
        throw Error(ErrorCode::InvalidInput, "missing 'command'");
      auto command = command_from_string(entry["command"].get<std::string>());
      if (!command) throw Error(ErrorCode::InvalidInput, "unknown command '" + entry["command"].get<std::string>() + "'");
      json payload = entry.value("payload", json::object());
      if (!payload.is_object()) throw Error(ErrorCode::InvalidInput, "'payload' must be an object");
      for (const char* key : {"input", "left", "right", "diagram", "matrix"})
        if (payload.contains(key) && payload[key].is_string())
          payload[key] = load_json_file(base_dir / payload[key].get<std::string>());
      be.request = Request{*command, std::move(payload)};
    } catch (const Error& e) {
      be.error = error_json(e);
    }
    out.entries.push_back(std::move(be));
  }
  return out;
}

BatchResult run_batch(const BatchManifest& manifest, std::size_t jobs) {
  const std::size_t n = manifest.entries.size();
  std::vector<Response> responses(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& e = manifest.entries[i];
      responses[i] = e.request ? run(*e.request) : Response{kExitInvalid, e.error};
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  BatchResult out;
  json results = json::object();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = manifest.entries[i];
    json entry{{"exit_code", responses[i].exit_code}};
    if (e.request) entry["command"] = std::string(to_string(e.request->command));
    entry["result"] = responses[i].result;
    results[e.id] = std::move(entry);
    out.exit_code = std::max(out.exit_code, responses[i].exit_code);
  }
  out.result = json{{"results", std::move(results)}};
  return out;
}

std::string render_json(const json& value) { return value.dump(2) + "\n"; }

namespace {

std::string paint(const std::string& s, const char* code, bool color) {
  return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string staircase(const Diagram& g) {
  if (g.dim() != 2) return {};
  Rational wmax = 0, hmax = 0;
  for (const auto& p : g.generators()) {
    wmax = std::max(wmax, p[0]);
    hmax = std::max(hmax, p[1]);
  }
  auto ceil_of = [](const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
  };
  const long w = ceil_of(wmax) + 1;
  const long h = ceil_of(hmax) + 1;
  if (w > 24 || h > 24) return "  (sketch omitted: diagram too large)\n";
  std::ostringstream os;
  for (long y = h; y >= 0; --y) {
    os << "  " << (y < 10 ? " " : "") << y << " |";
    for (long x = 0; x <= w; ++x) {
      Point p(Vector{x, y});
      bool vertex = std::find(g.generators().begin(), g.generators().end(), p) != g.generators().end();
      os << ' ' << (vertex ? 'o' : contains(g, p) ? '#' : '.');
    }
    os << '\n';
  }
  os << "     +" << std::string(static_cast<std::size_t>(2 * (w + 1)), '-') << '\n';
  return os.str();
}

std::string diagram_text(const json& j) {
  Diagram g = json_io::diagram_from_json(j);
  return "  vertices: " + idiag::to_string(g) + "\n" + staircase(g);
}

std::string certificate_text(const json& c, bool color) {
  std::string out;
  if (c["verdict"] == "decomposable") {
    out += "  " + paint("decomposable", "31", color) + " (" + c["method"].get<std::string>() + ")\n";
    out += "  left:\n" + diagram_text(c["left"]);
    out += "  right:\n" + diagram_text(c["right"]);
  } else {
    out += "  " + paint("indecomposable", "32", color) + " (" + c["method"].get<std::string>() + ")\n";
    out += "  " + c.value("detail", std::string()) + "\n";
  }
  return out;
}

}  // namespace

std::string render_text(Command command, const Response& response, bool color) {
  const json& r = response.result;
  if (r.is_object() && r.contains("error")) {
    std::string out = paint("error", "31", color) + ": " + r["error"]["message"].get<std::string>() + "\n";
    return out;
  }
  std::string out;
  switch (command) {
    case Command::Diagram:
      out += "diagram\n" + diagram_text(r["diagram"]);
      out += "homothety class representative\n" + diagram_text(r["homothety_representative"]);
      break;
    case Command::Lelong:
      out += "lelong: " + r["lelong"].get<std::string>() + "\n";
      break;
    case Command::Sum:
      out += "sum\n" + diagram_text(r);
      break;
    case Command::Homothetic:
      if (r["homothetic"].get<bool>())
        out += "homothetic: c = " + r["c"].get<std::string>() + ", x = " + idiag::to_string(json_io::vector_from_json(r["x"])) + "\n";
      else
        out += "not homothetic\n";
      break;
    case Command::Decompose:
      out += certificate_text(r, color);
      break;
    case Command::Classify: {
      const bool extreme = r["verdict"] == "extreme";
      out += "verdict: " + paint(r["verdict"].get<std::string>(), extreme ? "32" : "31", color) + "\n";
      out += "indicator diagram\n" + diagram_text(r["diagram"]);
      out += "certificate\n" + certificate_text(r["certificate"], color);
      out += "note: " + r["caveat"].get<std::string>() + "\n";
      break;
    }
    case Command::NewtonNumber:
      out += "newton number: " + r["newton_number"].get<std::string>() + "\n";
      break;
    case Command::Substitute:
      out += "dim " + std::to_string(r["dim"].get<int>()) + "\n";
      for (const auto& p : r["polys"]) out += "  " + p.get<std::string>() + "\n";
      break;
    case Command::Indicator:
      out += "indicator: " + r["indicator"].get<std::string>() + "\n";
      break;
  }
  return out;
}

std::string render_batch_text(const BatchResult& batch, bool color) {
  std::string out;
  for (const auto& [id, entry] : batch.result["results"].items()) {
    out += "== " + id + " (exit " + std::to_string(entry["exit_code"].get<int>()) + ")\n";
    Response r{entry["exit_code"].get<int>(), entry["result"]};
    auto command = entry.contains("command") ? command_from_string(entry["command"].get<std::string>()) : std::nullopt;
    out += command ? render_text(*command, r, color) : paint("error", "31", color) + ": " + r.result["error"]["message"].get<std::string>() + "\n";
  }
  return out;
}

}  // namespace idiag::cli
