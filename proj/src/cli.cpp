#include "ecpoly/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecpoly/canonical.hpp"
#include "ecpoly/claims.hpp"
#include "ecpoly/equivalence.hpp"
#include "ecpoly/error.hpp"
#include "ecpoly/families.hpp"
#include "ecpoly/graph6.hpp"
#include "ecpoly/oracle.hpp"
#include "ecpoly/recurrence.hpp"
#include "ecpoly/report.hpp"

namespace ecpoly::cli {

namespace {

struct CommonOptions {
  std::string format = "text";
  std::size_t max_edges = OracleConfig{}.max_edges;
  std::size_t workers = 0;
  std::string output;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--max-edges", opts.max_edges, "Edge cap for subset enumeration")
      ->check(CLI::Range(std::size_t{0}, kOracleEdgeLimit));
  sub->add_option("--workers", opts.workers, "Worker threads (0 = hardware concurrency)");
  sub->add_option("--output", opts.output, "Write the result to this file instead of stdout");
}

struct GraphInput {
  std::string label;
  Graph graph;
};

std::string strip(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t start = 0;
  while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
  return line.substr(start);
}

// One graph from the positional argument, or one per non-empty line of --file.
std::vector<GraphInput> read_inputs(const std::string& positional, const std::string& file) {
  if (positional.empty() == file.empty()) {
    throw Error(ErrorKind::BadParameters, "give exactly one of a graph argument or --file");
  }
  std::vector<GraphInput> out;
  std::string path = file;
  if (!positional.empty()) {
    // a family spec wins, then an existing file, then graph6
    if (auto fam = parse_family_spec(positional); fam || !std::filesystem::is_regular_file(positional)) {
      out.push_back({positional, fam ? make_family(*fam) : parse_graph6(positional)});
      return out;
    }
    path = positional;
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadParameters, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    out.push_back({line, parse_graph_input(line)});
  }
  return out;
}

OracleConfig config_of(const CommonOptions& opts) { return OracleConfig{opts.max_edges, opts.workers}; }

ReportFormat format_of(const CommonOptions& opts) { return parse_report_format(opts.format).value_or(ReportFormat::Text); }

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

std::string compute_command(const std::vector<GraphInput>& inputs, const CommonOptions& opts) {
  const auto cfg = config_of(opts);
  std::ostringstream os;
  const auto format = format_of(opts);
  if (format == ReportFormat::Csv) os << "input,polynomial\n";
  for (const auto& in : inputs) {
    const IntPolynomial p = connected_edge_cover_polynomial(in.graph, cfg);
    switch (format) {
      case ReportFormat::Text: os << to_text(p) << '\n'; break;
      case ReportFormat::Json: os << to_json(p).dump() << '\n'; break;
      case ReportFormat::Csv: os << csv_field(in.label) << ',' << csv_field(to_text(p)) << '\n'; break;
    }
  }
  return os.str();
}

std::string spanning_command(const std::vector<GraphInput>& inputs, const CommonOptions& opts) {
  std::ostringstream os;
  const auto format = format_of(opts);
  if (format == ReportFormat::Csv) os << "input,spanning_trees\n";
  for (const auto& in : inputs) {
    const std::int64_t t = spanning_tree_count(in.graph);
    switch (format) {
      case ReportFormat::Text: os << t << '\n'; break;
      case ReportFormat::Json: {
        nlohmann::ordered_json j;
        j["input"] = in.label;
        j["spanning_trees"] = t;
        os << j.dump() << '\n';
        break;
      }
      case ReportFormat::Csv: os << csv_field(in.label) << ',' << t << '\n'; break;
    }
  }
  return os.str();
}

std::string scan_command(const GraphInput& in, const CommonOptions& opts) {
  const auto entries = recurrence_scan(in.graph, config_of(opts));
  std::ostringstream os;
  switch (format_of(opts)) {
    case ReportFormat::Text:
      for (const auto& e : entries) {
        os << "edge " << e.edge_index << ' ' << edge_text(e.edge) << ": recurrence " << to_text(e.recurrence)
           << ", oracle " << to_text(e.oracle) << (e.equal ? ", equal" : ", DIFFERENT") << '\n';
      }
      break;
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["edge_index"] = e.edge_index;
        j["edge"] = {e.edge.u, e.edge.v};
        j["recurrence"] = to_json(e.recurrence);
        j["oracle"] = to_json(e.oracle);
        j["equal"] = e.equal;
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "edge_index,u,v,recurrence,oracle,equal\n";
      for (const auto& e : entries) {
        os << e.edge_index << ',' << e.edge.u << ',' << e.edge.v << ',' << csv_field(to_text(e.recurrence)) << ','
           << csv_field(to_text(e.oracle)) << ',' << (e.equal ? "true" : "false") << '\n';
      }
      break;
  }
  return os.str();
}

std::string enumerate_command(std::size_t order, std::optional<std::size_t> degree, bool summary,
                              const CommonOptions& opts) {
  std::vector<Graph> graphs;
  std::optional<RegularCounts> counts;
  if (degree) {
    graphs = enumerate_connected_regular(order, *degree);
    counts = count_regular_graphs(order, *degree);
  } else {
    graphs = enumerate_connected_graphs(order);
  }
  std::ostringstream os;
  switch (format_of(opts)) {
    case ReportFormat::Text:
      if (summary) {
        os << "connected: " << graphs.size() << '\n';
        if (counts) os << "total: " << counts->total << '\n';
      } else {
        for (const Graph& g : graphs) os << to_graph6(g) << '\n';
      }
      break;
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["order"] = order;
      if (degree) j["degree"] = *degree;
      j["connected_count"] = graphs.size();
      if (counts) j["total_count"] = counts->total;
      j["graphs"] = nlohmann::ordered_json::array();
      for (const Graph& g : graphs) j["graphs"].push_back(to_graph6(g));
      os << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "index,graph6,edges\n";
      for (std::size_t i = 0; i < graphs.size(); ++i) os << i << ',' << to_graph6(graphs[i]) << ',' << graphs[i].size() << '\n';
      break;
  }
  return os.str();
}

std::string equiv_command(const std::vector<Graph>& graphs, const CommonOptions& opts) {
  const EquivalenceScan scan = equivalence_classes(graphs, config_of(opts));
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? " " : "") + items[i];
    return s;
  };
  switch (format_of(opts)) {
    case ReportFormat::Text:
      for (const auto& cls : scan.classes) {
        os << to_text(cls.polynomial) << " : " << join(cls.members)
           << (cls.has_non_isomorphic_members() ? "  [non-isomorphic]" : "") << '\n';
      }
      for (const auto& key : scan.skipped) os << "skipped: " << key << '\n';
      break;
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["classes"] = nlohmann::ordered_json::array();
      for (const auto& cls : scan.classes) {
        nlohmann::ordered_json c;
        c["polynomial"] = to_json(cls.polynomial);
        c["members"] = cls.members;
        c["non_isomorphic"] = cls.has_non_isomorphic_members();
        j["classes"].push_back(std::move(c));
      }
      j["equivalent_pairs"] = nlohmann::ordered_json::array();
      for (const auto& [a, b] : scan.equivalent_pairs) j["equivalent_pairs"].push_back({a, b});
      j["skipped"] = scan.skipped;
      os << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "polynomial,members,non_isomorphic\n";
      for (const auto& cls : scan.classes) {
        os << csv_field(to_text(cls.polynomial)) << ',' << csv_field(join(cls.members)) << ','
           << (cls.has_non_isomorphic_members() ? "true" : "false") << '\n';
      }
      break;
  }
  return os.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCapExceeded:
    case ErrorKind::RecursionDepthExceeded:
    case ErrorKind::IntegerOverflow:
      return kResourceLimit;
    default:
      return kUsageError;
  }
}

void emit(const std::string& text, const CommonOptions& opts, std::ostream& out) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::BadParameters, "cannot write " + opts.output);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact connected edge cover polynomials of small graphs", "ecpoly"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string input;
  std::string file;
  std::string suite = "paper-all";
  std::size_t order = 0;
  std::optional<std::size_t> degree;
  std::size_t max_order = 6;
  bool summary = false;

  auto* compute = app.add_subcommand("compute", "Connected edge cover polynomial of each input graph");
  auto* spanning = app.add_subcommand("spanning-trees", "Spanning tree count of each input graph");
  auto* scan = app.add_subcommand("recurrence-scan", "Deletion recurrence per first edge versus the oracle");
  for (auto* sub : {compute, spanning, scan}) {
    add_common(sub, opts);
    sub->add_option("graph", input, "Family spec (P7, C9, K5, Kb3,3, F2,3, petersen, prism3, corona(K4)) or graph6");
    sub->add_option("--file", file, "File with one graph per line");
  }

  auto* verify = app.add_subcommand("verify", "Check the registered claims against the oracle");
  add_common(verify, opts);
  verify->add_option("--suite", suite, "paper-all, formulas, structure, cubic, or comma separated claim ids");

  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism (k-regular with --degree)");
  add_common(enumerate, opts);
  enumerate->add_option("--order", order, "Number of vertices")->required();
  enumerate->add_option("--degree", degree, "Regular degree k");
  enumerate->add_flag("--summary", summary, "Print counts instead of graphs");

  auto* equiv = app.add_subcommand("equiv", "E_c-equivalence classes");
  add_common(equiv, opts);
  equiv->add_option("--max-order", max_order, "Scan every connected graph with 1..N vertices");
  equiv->add_option("--file", file, "Scan the graphs in this file instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (compute->parsed()) {
      emit(compute_command(read_inputs(input, file), opts), opts, out);
    } else if (spanning->parsed()) {
      emit(spanning_command(read_inputs(input, file), opts), opts, out);
    } else if (scan->parsed()) {
      const auto inputs = read_inputs(input, file);
      std::string text;
      for (const auto& in : inputs) text += scan_command(in, opts);
      emit(text, opts, out);
    } else if (verify->parsed()) {
      const auto claims = suite_claims(suite);
      const VerificationReport report = verify_claims(claims, config_of(opts));
      emit(render_report(report, format_of(opts)), opts, out);
      if (report.has_disagreement()) return kDisagreement;
    } else if (enumerate->parsed()) {
      emit(enumerate_command(order, degree, summary, opts), opts, out);
    } else if (equiv->parsed()) {
      std::vector<Graph> graphs;
      if (!file.empty()) {
        for (auto& in : read_inputs("", file)) graphs.push_back(std::move(in.graph));
      } else {
        for (std::size_t n = 1; n <= max_order; ++n) {
          for (auto& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
        }
      }
      emit(equiv_command(graphs, opts), opts, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace ecpoly::cli
