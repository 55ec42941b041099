// Command-line front end for the turaev library.
//
// Inputs are file paths or inline code text. Reports and errors are JSON on
// stdout. Exit codes: 0 success, 2 parse/validation error, 3 precondition
// error, 4 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "turaev/turaev.hpp"

namespace {

using turaev::json;

std::string load(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return turaev::read_text_file(arg);
  return arg;
}

turaev::GaussCode load_code(const std::string& arg) { return turaev::parse(load(arg)); }

turaev::ArcRef parse_arc(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw turaev::Error(turaev::ErrorKind::StaleReference, "arc must be C:P, got " + s);
  try {
    return turaev::ArcRef{std::stoul(s.substr(0, colon)), std::stoul(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw turaev::Error(turaev::ErrorKind::StaleReference, "arc must be C:P, got " + s);
  }
}

int exit_code(turaev::ErrorKind k) {
  using turaev::ErrorKind;
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::PairingError:
    case ErrorKind::SignMismatch: return 2;
    case ErrorKind::ProgressStalled: return 4;
    default: return 3;
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json code_and_log(const turaev::GaussCode& code, const turaev::MoveLog& log) {
  return json{{"schema_version", turaev::kSchemaVersion}, {"code", turaev::render(code)}, {"log", turaev::to_json(log)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turaev surfaces, primeness certificates and moves for signed Gauss codes"};
  app.require_subcommand(1);

  std::string input, input2, arc_text = "0:0", arc2_text = "0:0", format = "gauss", script, out_path;
  bool with_states = false, with_carrier = false, bundle = false;
  int n = 1, label = 0;
  unsigned threads = 0;

  auto* analyze = app.add_subcommand("analyze", "Report surface, states, primeness and verdict as JSON");
  analyze->add_flag("--states", with_states, "include A/B state circle counts");
  analyze->add_flag("--carrier", with_carrier, "include carrier genus and realizability");
  analyze->add_option("input", input, "code file or inline code")->required();

  auto* primeify = app.add_subcommand("primeify", "Rewrite to a Turaev prime diagram; prints code and move log");
  primeify->add_option("input", input)->required();

  auto* dseq = app.add_subcommand("dseq", "Apply the n-twist family construction on an arc");
  dseq->add_option("--arc", arc_text, "arc as component:position")->required();
  dseq->add_option("--n", n, "number of twists")->required()->check(CLI::PositiveNumber);
  dseq->add_option("input", input)->required();

  auto* compose = app.add_subcommand("compose", "Connected sum of two codes");
  compose->add_option("--arc-a", arc_text, "arc of the first code");
  compose->add_option("--arc-b", arc2_text, "arc of the second code");
  compose->add_option("a", input)->required();
  compose->add_option("b", input2)->required();

  auto* virt = app.add_subcommand("virtualize", "Virtualize one crossing");
  virt->add_option("--label", label, "crossing label")->required();
  virt->add_option("input", input)->required();

  auto* exp = app.add_subcommand("export", "Export as gauss, json, dt or pd");
  exp->add_option("--format", format)->check(CLI::IsMember({"gauss", "json", "dt", "pd"}));
  exp->add_flag("--bundle", bundle, "wrap the payload in an export bundle JSON object");
  exp->add_option("input", input)->required();

  auto* import_pd = app.add_subcommand("import-pd", "Read a PD code and print the Gauss code");
  import_pd->add_option("input", input)->required();

  auto* apply = app.add_subcommand("apply", "Apply a JSON-lines move script; prints code and move log");
  apply->add_option("--script", script, "file with one move object per line")->required();
  apply->add_option("input", input)->required();

  auto* batch = app.add_subcommand("batch", "Analyze every *.gauss file of a directory into a CSV");
  batch->add_option("dir", input)->required();
  batch->add_option("--out", out_path)->required();
  batch->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      print(turaev::to_json(turaev::analyze(load_code(input)), {with_states, with_carrier}));
    } else if (primeify->parsed()) {
      auto res = turaev::make_turaev_prime(load_code(input));
      print(code_and_log(res.code, res.log));
    } else if (dseq->parsed()) {
      std::cout << turaev::render(turaev::d_sequence(load_code(input), parse_arc(arc_text), n)) << '\n';
    } else if (compose->parsed()) {
      std::cout << turaev::render(turaev::compose(load_code(input), load_code(input2), parse_arc(arc_text),
                                                  parse_arc(arc2_text)))
                << '\n';
    } else if (virt->parsed()) {
      std::cout << turaev::render(turaev::virtualize(load_code(input), label)) << '\n';
    } else if (exp->parsed()) {
      auto b = turaev::export_diagram(load_code(input), turaev::parse_export_format(format));
      if (bundle)
        print(turaev::to_json(b));
      else
        std::cout << b.payload << '\n';
    } else if (import_pd->parsed()) {
      std::cout << turaev::render(turaev::from_pd(load(input))) << '\n';
    } else if (apply->parsed()) {
      auto code = load_code(input);
      turaev::MoveLog log;
      std::ifstream in(script);
      if (!in) throw std::runtime_error("cannot read " + script);
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
          j = json::parse(line);
        } catch (const json::exception& e) {
          throw turaev::Error(turaev::ErrorKind::SyntaxError, std::string("bad script line: ") + e.what());
        }
        code = turaev::apply_logged(code, turaev::move_from_json(j), log);
      }
      print(code_and_log(code, log));
    } else if (batch->parsed()) {
      auto s = turaev::run_batch(input, out_path, threads);
      print(json{{"schema_version", turaev::kSchemaVersion}, {"rows", s.rows}, {"errors", s.errors}});
    }
  } catch (const turaev::ParseError& e) {
    print(turaev::error_json(e.kind(), e.what(), &e.report()));
    return 2;
  } catch (const turaev::Error& e) {
    print(turaev::error_json(e.kind(), e.what()));
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    print(json{{"schema_version", turaev::kSchemaVersion}, {"error", {{"kind", "Internal"}, {"message", e.what()}}}});
    return 4;
  }
  return 0;
}
