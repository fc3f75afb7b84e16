#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "app/app.hpp"
#include "idiag/error.hpp"

using namespace idiag::cli;

namespace {

struct Output {
  std::string path;
  std::string format = "json";

  bool text() const { return format == "text"; }
  bool color() const { return text() && path.empty() && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

  int emit(const std::string& body, int code) const {
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) {
        std::cerr << "cannot write '" << path << "'\n";
        return kExitInvalid;
      }
      out << body;
    }
    return code;
  }
};

int fail_load(const idiag::Error& e) {
  std::cerr << e.what() << '\n';
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact indicator diagrams: Newton numbers, Minkowski calculus and extremity of homogeneous singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_option("-o,--output", output.path, "Write the result to a file instead of stdout");
  app.add_option("-f,--format", output.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input, weight, matrix, t, left, right, diagram, manifest;
  std::size_t jobs = 0;

  auto* c_diagram = app.add_subcommand("diagram", "Indicator diagram of log(|p_1| + ... + |p_m|)");
  c_diagram->add_option("-i,--input", input, "Singularity JSON {\"dim\", \"polys\"}")->required();

  auto* c_lelong = app.add_subcommand("lelong", "Directional Lelong number nu(u, a)");
  c_lelong->add_option("-i,--input", input, "Singularity JSON")->required();
  c_lelong->add_option("-w,--weight", weight, "Weight, e.g. \"1,2\"")->required();

  auto* c_sum = app.add_subcommand("sum", "Minkowski sum of two diagrams");
  c_sum->add_option("left", left, "Diagram JSON")->required();
  c_sum->add_option("right", right, "Diagram JSON")->required();

  auto* c_homothetic = app.add_subcommand("homothetic", "Is LEFT = c RIGHT + x with c > 0, x >= 0?");
  c_homothetic->add_option("left", left, "Diagram JSON")->required();
  c_homothetic->add_option("right", right, "Diagram JSON")->required();

  auto* c_decompose = app.add_subcommand("decompose", "Decide Minkowski decomposability modulo homothety");
  c_decompose->add_option("diagram", diagram, "Diagram JSON")->required();

  auto* c_classify = app.add_subcommand("classify", "Classify a homogeneous singularity as extreme or not");
  c_classify->add_option("-i,--input", input, "Singularity JSON")->required();

  auto* c_newton = app.add_subcommand("newton-number", "Newton number n! Vol(R^n_+ minus the diagram)");
  c_newton->add_option("diagram", diagram, "Diagram JSON")->required();

  auto* c_subst = app.add_subcommand("substitute", "Linear change of variables z = M zeta");
  c_subst->add_option("-m,--matrix", matrix, "Matrix JSON (row-major)")->required();
  c_subst->add_option("-i,--input", input, "Singularity JSON")->required();

  auto* c_indicator = app.add_subcommand("indicator", "Indicator value at |z_k| = exp(t_k)");
  c_indicator->add_option("diagram", diagram, "Diagram JSON")->required();
  c_indicator->add_option("-t,--t", t, "Point t <= 0, e.g. \"-1,-1\"")->required()->allow_extra_args(false);

  auto* c_batch = app.add_subcommand("batch", "Run a manifest of requests");
  c_batch->add_option("manifest", manifest, "Manifest JSON")->required();
  c_batch->add_option("-j,--jobs", jobs, "Worker threads (default: manifest hint)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  if (c_batch->parsed()) {
    try {
      auto m = manifest_from_json(load_json_file(manifest), std::filesystem::path(manifest).parent_path());
      auto result = run_batch(m, jobs ? jobs : m.jobs);
      return output.emit(output.text() ? render_batch_text(result, output.color()) : render_json(result.result),
                         result.exit_code);
    } catch (const idiag::Error& e) {
      return fail_load(e);
    }
  }

  Request request{Command::Diagram, json::object()};
  try {
    if (c_diagram->parsed()) {
      request = {Command::Diagram, {{"input", load_json_file(input)}}};
    } else if (c_lelong->parsed()) {
      request = {Command::Lelong, {{"input", load_json_file(input)}, {"weight", weight}}};
    } else if (c_sum->parsed()) {
      request = {Command::Sum, {{"left", load_json_file(left)}, {"right", load_json_file(right)}}};
    } else if (c_homothetic->parsed()) {
      request = {Command::Homothetic, {{"left", load_json_file(left)}, {"right", load_json_file(right)}}};
    } else if (c_decompose->parsed()) {
      request = {Command::Decompose, {{"diagram", load_json_file(diagram)}}};
    } else if (c_classify->parsed()) {
      request = {Command::Classify, {{"input", load_json_file(input)}}};
    } else if (c_newton->parsed()) {
      request = {Command::NewtonNumber, {{"diagram", load_json_file(diagram)}}};
    } else if (c_subst->parsed()) {
      request = {Command::Substitute, {{"matrix", load_json_file(matrix)}, {"input", load_json_file(input)}}};
    } else if (c_indicator->parsed()) {
      request = {Command::Indicator, {{"diagram", load_json_file(diagram)}, {"t", t}}};
    }
  } catch (const idiag::Error& e) {
    return fail_load(e);
  }

  Response response = run(request);
  if (response.exit_code != kExitOk && response.result.contains("error"))
    std::cerr << response.result["error"]["message"].get<std::string>() << '\n';
  return output.emit(output.text() ? render_text(request.command, response, output.color()) : render_json(response.result),
                     response.exit_code);
}
