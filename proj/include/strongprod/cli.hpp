#pragma once

// Command-line front end. Kept as a header so the test suite can drive it
// in-process; tools/strongprod.cpp is only a main() wrapper.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strongprod/apsp.hpp"
#include "strongprod/digraph.hpp"
#include "strongprod/error.hpp"
#include "strongprod/metrics.hpp"
#include "strongprod/product.hpp"

namespace strongprod::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kNotStronglyConnected = 3,
  kSizeOverflow = 4,
  kArithmeticOverflow = 5,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotStronglyConnected: return kNotStronglyConnected;
    case ErrorKind::SizeOverflow: return kSizeOverflow;
    case ErrorKind::Overflow: return kArithmeticOverflow;
    default: return kInvalidInput;
  }
}

enum class Format { Tsv, Json };

struct CliConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  Method method = Method::Counting;
  Format format = Format::Tsv;
  std::size_t max_product_vertices = kDefaultProductVertexLimit;
  std::optional<std::string> out_path;
  bool require_strong = false;
};

/// Parses and validates one edge-list file. Error messages name the file.
inline Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedHeader, path + ": cannot open file");
  try {
    return build_digraph(parse_edge_list(in));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what(), e.line(), e.factor());
  }
}

inline std::string report_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["factor_orders"] = r.factor_orders;
  j["product_order"] = r.product_order;
  j["sigma"] = std::to_string(r.sigma);
  j["mu"] = {{"num", r.mu.num()}, {"den", r.mu.den()}};
  j["mu_decimal"] = r.mu_decimal;
  j["diameter"] = r.diameter;
  j["method"] = std::string(to_string(r.method));
  return j.dump() + '\n';
}

inline std::string distance_matrix_text(const DistanceMatrix& d, Format format) {
  const std::size_t n = d.order();
  if (format == Format::Json) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      auto row = nlohmann::json::array();
      for (const auto& e : d.row(i)) {
        if (e)
          row.push_back(*e);
        else
          row.push_back(nullptr);
      }
      rows.push_back(std::move(row));
    }
    return rows.dump() + '\n';
  }
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += '\t';
      const auto& e = d(i, j);
      out += e ? std::to_string(*e) : std::string("INF");
    }
    out += '\n';
  }
  return out;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out) {
  const auto g = load_digraph(cfg.inputs.front());
  const bool strong = is_strongly_connected(g);
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["m"] = g.arc_count();
  j["strongly_connected"] = strong;
  out << j.dump() << '\n';
  return strong ? kOk : kNotStronglyConnected;
}

inline int cmd_apsp(const CliConfig& cfg, std::ostream& out) {
  const auto g = load_digraph(cfg.inputs.front());
  out << distance_matrix_text(floyd_warshall(g), cfg.format);
  return kOk;
}

inline int cmd_product(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Digraph> gs;
  for (const auto& p : cfg.inputs) gs.push_back(load_digraph(p));
  const auto product = strong_product_n(gs, cfg.max_product_vertices);
  if (cfg.require_strong && !is_strongly_connected(product)) {
    err << "error: product digraph is not strongly connected\n";
    return kNotStronglyConnected;
  }
  std::vector<std::size_t> dims;
  for (const auto& g : gs) dims.push_back(g.order());
  const auto text = write_edge_list(product, product_header_comments(dims));
  if (cfg.out_path) {
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *cfg.out_path << '\n';
      return kInvalidInput;
    }
    f << text;
  } else {
    out << text;
  }
  return kOk;
}

inline int cmd_avgdist(const CliConfig& cfg, std::ostream& out) {
  std::vector<Digraph> gs;
  for (const auto& p : cfg.inputs) gs.push_back(load_digraph(p));
  try {
    out << report_json(average_distance_product_n(gs, cfg.method, cfg.max_product_vertices));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotStronglyConnected && e.factor())
      throw Error(e.kind(), std::string(e.what()) + " (" + cfg.inputs[*e.factor()] + ")", e.line(),
                  e.factor());
    throw;
  }
  return kOk;
}

/// Runs the tool. Data goes to `out`, diagnostics to `err`; returns the
/// process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances and average distance of strong product digraphs"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* check = app.add_subcommand("check", "Validate an edge-list file and test strong connectivity");
  check->add_option("file", cfg.inputs, "Edge-list file")->required()->expected(1);

  auto* apsp = app.add_subcommand("apsp", "All-pairs shortest path distances");
  apsp->add_option("file", cfg.inputs, "Edge-list file")->required()->expected(1);
  std::string format = "tsv";
  apsp->add_option("--format", format, "Output format: tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* product = app.add_subcommand("product", "Write the explicit strong product as an edge list");
  product->add_option("files", cfg.inputs, "Factor edge-list files")->required()->expected(2, -1);
  product->add_option("--out", cfg.out_path, "Output path (default: standard output)");
  product->add_option("--max-product-vertices", cfg.max_product_vertices, "Vertex limit for the product");
  product->add_flag("--require-strong", cfg.require_strong, "Exit 3 unless the product is strongly connected");

  auto* avgdist = app.add_subcommand("avgdist", "Distance sum, average distance and diameter of a product");
  avgdist->add_option("files", cfg.inputs, "Factor edge-list files")->required()->expected(2, -1);
  std::string method = "counting";
  avgdist->add_option("--method", method, "naive, counting or oracle")
      ->check(CLI::IsMember({"naive", "counting", "oracle"}));
  avgdist->add_option("--max-product-vertices", cfg.max_product_vertices,
                      "Vertex limit for the oracle's explicit product");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : Format::Tsv;
  cfg.method = *parse_method(method);

  try {
    if (*check) return cmd_check(cfg, out);
    if (*apsp) return cmd_apsp(cfg, out);
    if (*product) return cmd_product(cfg, out, err);
    if (*avgdist) return cmd_avgdist(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kSizeOverflow;
  }
  return kUsage;
}

}  // namespace strongprod::cli
