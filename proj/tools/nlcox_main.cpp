// Command-line front end: classification with proof traces, witness
// re-verification, the infinite-dihedral and geometric-representation
// evaluators, Cayley-ball tools, and the acceptance self-test.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlcox/classify.hpp"
#include "nlcox/dinfty.hpp"
#include "nlcox/georep.hpp"
#include "nlcox/metric_graph.hpp"
#include "nlcox/selftest.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace nlcox;

constexpr int kExitUsage = 2;
constexpr int kExitInvalidGraph = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitNumeric = 5;

std::optional<GraphFormat> parse_format_flag(const std::string& fmt) {
  if (fmt == "auto") return std::nullopt;
  if (fmt == "text") return GraphFormat::Text;
  if (fmt == "json") return GraphFormat::Json;
  throw UsageError("unknown graph format '" + fmt + "'");
}

json witness_field(const json& doc) {
  if (doc.contains("witness")) return doc["witness"];  // whole verdict file
  return doc;                                          // bare witness object
}

int run_witness(const CoxeterGraph& g, const std::string& witness_path,
                double margin) {
  std::ifstream in(witness_path);
  if (!in) throw UsageError("cannot open '" + witness_path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid witness JSON: ") + e.what());
  }
  const json w = witness_field(doc);
  if (w.is_null()) throw UsageError("no witness present in the input");

  json report;
  bool valid = false;
  const std::string type = w.value("type", "");
  if (type == "epimorphism") {
    EpimorphismWitness ew;
    auto fill = [&](const char* key, std::vector<int>& part) {
      for (const auto& name : w.at(key)) {
        auto idx = g.index_of(name.get<std::string>());
        if (!idx) throw UsageError("witness names unknown vertex '" +
                                   name.get<std::string>() + "'");
        part.push_back(*idx);
      }
    };
    fill("A", ew.A);
    fill("B", ew.B);
    fill("K", ew.K);
    valid = verify_epimorphism(g, ew);
    report["type"] = "epimorphism";
    report["valid"] = valid;
  } else if (type == "loxodromic") {
    Word word;
    for (const auto& name : w.at("word")) {
      auto idx = g.index_of(name.get<std::string>());
      if (!idx)
        throw UsageError("witness word uses unknown vertex '" +
                         name.get<std::string>() + "'");
      word.push_back(*idx);
    }
    const auto cert = georep::loxodromic_certificate(g, word, margin);
    valid = cert.has_value();
    report["type"] = "loxodromic";
    report["valid"] = valid;
    if (cert) {
      report["spectral_radius"] = cert->spectral_radius;
      report["translation_length"] = cert->translation_length;
    }
  } else {
    throw UsageError("witness 'type' must be 'epimorphism' or 'loxodromic'");
  }
  std::cout << report.dump(2) << "\n";
  return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property (NL) toolkit for Coxeter defining graphs"};
  app.require_subcommand(1);

  std::string graph_path, format_flag = "auto", word_text, witness_path;
  bool text_output = false;
  double zero_tol = georep::kZeroTol;
  double lox_margin = georep::kLoxodromicMargin;
  int radius = 0;
  int sampled = 0;

  auto* classify_cmd =
      app.add_subcommand("classify", "Decide Property (NL) from a graph file");
  classify_cmd->add_option("graphfile", graph_path)->required();
  classify_cmd->add_option("--format", format_flag, "auto|text|json");
  classify_cmd->add_flag("--text", text_output, "plain-text verdict instead of JSON");
  classify_cmd->add_option("--zero-tol", zero_tol, "signature zero band")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--lox-margin", lox_margin, "loxodromic margin over 1")
      ->check(CLI::PositiveNumber);

  auto* witness_cmd =
      app.add_subcommand("witness", "Re-verify a witness against a graph");
  witness_cmd->add_option("graphfile", graph_path)->required();
  witness_cmd->add_option("witnessfile", witness_path,
                          "verdict JSON or bare witness object")->required();
  witness_cmd->add_option("--format", format_flag, "auto|text|json");
  witness_cmd->add_option("--lox-margin", lox_margin)->check(CLI::PositiveNumber);

  auto* dinfty_cmd = app.add_subcommand("dinfty", "Infinite dihedral evaluator");
  auto* dinfty_eval = dinfty_cmd->add_subcommand("eval", "evaluate a word over {r, s}");
  dinfty_eval->add_option("word", word_text)->required();

  auto* georep_cmd = app.add_subcommand("georep", "Geometric representation tools");
  auto* spectrum =
      georep_cmd->add_subcommand("spectrum", "word matrix, spectral radius, residual");
  spectrum->add_option("graphfile", graph_path)->required();
  spectrum->add_option("word", word_text)->required();
  spectrum->add_option("--format", format_flag, "auto|text|json");

  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley-graph tools");
  auto* ball_cmd = cayley_cmd->add_subcommand("ball", "DOT of a Cayley ball");
  ball_cmd->add_option("graphfile", graph_path)->required();
  ball_cmd->add_option("radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_option("--format", format_flag, "auto|text|json");
  auto* delta_cmd = cayley_cmd->add_subcommand("delta", "thin-triangle constant");
  delta_cmd->add_option("graphfile", graph_path)->required();
  delta_cmd->add_option("radius", radius)->required()->check(CLI::NonNegativeNumber);
  delta_cmd->add_option("--sampled", sampled,
                        "sample at most this many geodesics per pair");
  delta_cmd->add_option("--format", format_flag, "auto|text|json");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(selftest_cmd))
      return run_selftest(std::cout) == 0 ? 0 : 1;

    if (app.got_subcommand(dinfty_cmd)) {
      const auto e = dinfty::word_to_element(word_text);
      const auto type = dinfty::isometry_type(e);
      json doc;
      doc["word"] = word_text;
      doc["p"] = e.p;
      doc["q"] = e.q ? 1 : 0;
      doc["type"] = dinfty::isometry_kind_name(type.kind);
      doc["datum"] = type.datum.str();
      doc["normal_form"] = dinfty::normal_form_string(e);
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    const auto format = parse_format_flag(format_flag);

    if (app.got_subcommand(classify_cmd)) {
      const CoxeterGraph g = load_graph_file(graph_path, format);
      const NLVerdict verdict = classify_nl(g, {zero_tol, lox_margin});
      std::cout << (text_output ? verdict_to_text(g, verdict)
                                : verdict_to_json(g, verdict));
      return 0;
    }

    if (app.got_subcommand(witness_cmd)) {
      const CoxeterGraph g = load_graph_file(graph_path, format);
      return run_witness(g, witness_path, lox_margin);
    }

    if (app.got_subcommand(georep_cmd)) {
      const CoxeterGraph g = load_graph_file(graph_path, format);
      const Word word = parse_word(g, word_text);
      const Eigen::MatrixXd M = georep::word_to_matrix(g, word);
      json doc;
      std::vector<std::string> letters;
      for (int i : word) letters.push_back(g.name(i));
      doc["word"] = letters;
      json rows = json::array();
      for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
        rows.push_back(std::move(row));
      }
      doc["matrix"] = std::move(rows);
      doc["spectral_radius"] = georep::spectral_radius(M);
      doc["form_residual"] = georep::form_residual(g, M);
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(cayley_cmd)) {
      const CoxeterGraph g = load_graph_file(graph_path, format);
      const auto ball = metric::cayley_ball(g, radius);
      if (cayley_cmd->got_subcommand(ball_cmd)) {
        std::cout << metric::to_dot(ball, g.vertex_names());
        return 0;
      }
      const auto mode =
          sampled > 0 ? metric::DeltaMode::Sampled : metric::DeltaMode::Exhaustive;
      json doc;
      doc["nodes"] = ball.node_count();
      doc["delta"] = metric::delta_estimate(ball, mode, sampled);
      doc["mode"] = mode == metric::DeltaMode::Sampled ? "SAMPLED" : "EXHAUSTIVE";
      doc["lower_bound"] = mode == metric::DeltaMode::Sampled;
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: invalid graph: " << e.what() << "\n";
    return kExitInvalidGraph;
  } catch (const CapacityError& e) {
    std::cerr << "error: capacity limit: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const NumericError& e) {
    std::cerr << "error: numeric ambiguity: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
