#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubic/enumerate.hpp"
#include "cubic/errors.hpp"
#include "cubic/graph6.hpp"
#include "cubic/matchcolor.hpp"
#include "cubic/spectral.hpp"
#include "cubic/truncation.hpp"
#include "cubic/verify.hpp"

namespace cubic::cli {

namespace {

using json = nlohmann::json;

// Thrown for unreadable input; maps to exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string input_path;
  bool plain = false;
  int jobs = 1;
};

int default_jobs() {
  if (const char* env = std::getenv("CUBICTOOL_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Opens --input or falls back to the given stream.
class Input {
 public:
  explicit Input(Context& ctx) : stream_(&ctx.in) {
    if (ctx.input_path.empty() || ctx.input_path == "-") return;
    file_.open(ctx.input_path);
    if (!file_) throw InputError("cannot open " + ctx.input_path);
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_;
};

std::vector<Graph> read_graphs(Context& ctx) {
  Input input(ctx);
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(input.get(), line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (input.get().bad()) throw InputError("read error");
  if (out.empty()) throw InputError("no graph on input");
  return out;
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump() << '\n'; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_spectrum(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const Spectrum s = eigenvalues(g);
    if (ctx.plain) {
      bool first = true;
      for (const auto& grp : json::parse(s.to_json())) {
        ctx.out << (first ? "" : " ") << grp["value"].dump() << '^' << grp["multiplicity"].dump();
        first = false;
      }
      ctx.out << '\n';
    } else {
      emit(ctx, {{"order", g.order()}, {"spectrum", json::parse(s.to_json())}});
    }
  }
  return kOk;
}

int cmd_charpoly(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const std::string p = char_poly(g).to_string();
    if (ctx.plain) ctx.out << p << '\n';
    else emit(ctx, {{"order", g.order()}, {"char_poly", p}});
  }
  return kOk;
}

int cmd_truncate(Context& ctx, const std::string& vertices, bool full, bool with_trace) {
  for (const Graph& g : read_graphs(ctx)) {
    Truncation t;
    if (full) {
      t = truncate_full_traced(g);
    } else {
      std::vector<int> s = parse_int_list(vertices);
      std::sort(s.begin(), s.end());
      t = truncate_set(g, s);
    }
    if (with_trace) emit(ctx, {{"graph6", write_graph6(t.graph)}, {"trace", json::parse(t.trace.to_json())}});
    else ctx.out << write_graph6(t.graph) << '\n';
  }
  return kOk;
}

int cmd_recognize(Context& ctx) {
  for (const Graph& h : read_graphs(ctx)) {
    const auto g = recognize_truncation(h);
    if (ctx.plain) ctx.out << (g ? write_graph6(*g) : "not a truncation") << '\n';
    else emit(ctx, {{"truncation", g.has_value()}, {"source", g ? json(write_graph6(*g)) : json(nullptr)}});
  }
  return kOk;
}

int cmd_chromatic_index(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const auto r = chromatic_index(g);
    if (ctx.plain) ctx.out << r.value << '\n';
    else
      emit(ctx, {{"value", r.value}, {"exhausted", r.exhausted}, {"coloring", json::parse(r.witness.to_json(g))}});
  }
  return kOk;
}

int cmd_matching(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const auto m = maximum_matching(g);
    json j = {{"maximum_matching_size", m.size()}};
    bool perfect = false;
    if (g.order() % 2 == 0) {
      const auto cert = perfect_matching_certificate(g);
      perfect = cert.has_perfect_matching();
      j["certificate"] = json::parse(cert.to_json());
    }
    j["perfect_matching"] = perfect;
    if (ctx.plain) ctx.out << (perfect ? "perfect" : "none") << ' ' << m.size() << '\n';
    else emit(ctx, j);
  }
  return kOk;
}

int cmd_hamilton(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const auto cycle = hamiltonian_cycle(g);
    if (ctx.plain) ctx.out << (cycle.empty() ? "false" : "true") << '\n';
    else emit(ctx, {{"hamiltonian", !cycle.empty()}, {"cycle", cycle}});
  }
  return kOk;
}

int cmd_chromatic_number(Context& ctx) {
  for (const Graph& g : read_graphs(ctx)) {
    const int value = g.is_cubic() && g.order() > 0 ? chromatic_number_cubic(g) : chromatic_number_small(g);
    json j = {{"value", value}};
    if (g.order() <= kChromaticNumberBudget) j["coloring"] = *vertex_coloring(g, value);
    if (ctx.plain) ctx.out << value << '\n';
    else emit(ctx, j);
  }
  return kOk;
}

int cmd_scan(Context& ctx, const std::string& invariant_list) {
  std::vector<Invariant> which;
  if (invariant_list.empty()) {
    which = all_invariants();
  } else {
    std::stringstream ss(invariant_list);
    std::string item;
    while (std::getline(ss, item, ',')) which.push_back(parse_invariant(item));
  }
  Input input(ctx);
  const CorpusLoad load = read_corpus(input.get());
  for (const auto& w : load.warnings) ctx.err << "warning: " << w << '\n';
  const ScanReport report = cospectral_scan(load.graphs, which, ctx.jobs);
  if (ctx.plain) {
    for (const ScanPair& p : report.pairs) {
      ctx.out << write_graph6(load.graphs[p.first]) << ' ' << write_graph6(load.graphs[p.second]);
      for (const auto& d : p.differing) ctx.out << ' ' << d;
      ctx.out << '\n';
    }
  } else {
    json j = report.to_json(load.graphs);
    j["malformed_lines"] = load.malformed;
    j["duplicates"] = load.duplicates;
    emit(ctx, j);
  }
  return kOk;
}

int cmd_family(Context& ctx, int k) {
  const auto graphs = read_graphs(ctx);
  if (graphs.size() != 2) throw InputError("family needs exactly two graphs on input");
  const auto pairs = family_pairs(graphs[0], graphs[1], k);
  json list = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (ctx.plain) ctx.out << write_graph6(a) << ' ' << write_graph6(b) << '\n';
    list.push_back({{"k", i + 1}, {"order", a.order()}, {"first", write_graph6(a)}, {"second", write_graph6(b)}});
  }
  if (!ctx.plain) emit(ctx, list);
  return kOk;
}

int cmd_verify(Context& ctx, bool quick, const std::string& output) {
  VerifyOptions options;
  options.include_order16 = !quick;
  options.jobs = ctx.jobs;
  const VerifyReport report = verify_all(options);
  if (ctx.plain) {
    for (const Claim& c : report.claims) ctx.out << status_name(c.status) << ' ' << c.id << ": " << c.detail << '\n';
  } else {
    const std::string text = report.to_json().dump(2);
    if (output.empty()) {
      ctx.out << text << '\n';
    } else {
      std::ofstream file(output);
      if (!(file << text << '\n')) throw InputError("cannot write " + output);
    }
  }
  for (const Claim& c : report.claims)
    if (c.status == Status::Fail) ctx.err << "FAILED " << c.id << ": " << c.detail << '\n';
  return report.passed() ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err, "", false, 1};
  ctx.jobs = default_jobs();

  CLI::App app{"Cubic graph spectra, truncations and colourings", "cubictool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", ctx.plain, "Plain text output instead of JSON");
  app.add_option("--input", ctx.input_path, "Read graph6 lines from FILE instead of standard input");

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues with multiplicities");
  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");

  auto* truncate = app.add_subcommand("truncate", "Replace vertices by triangles (graph6 output)");
  std::string vertices;
  bool full = false, with_trace = false;
  auto* vopt = truncate->add_option("--vertices", vertices, "Comma-separated vertices to truncate");
  auto* fopt = truncate->add_flag("--full", full, "Truncate every vertex");
  vopt->excludes(fopt);
  truncate->add_flag("--json", with_trace, "Emit the graph with its truncation trace");

  auto* recognize = app.add_subcommand("recognize", "Recover G from T(G)");
  auto* chromatic_index_cmd = app.add_subcommand("chromatic-index", "Chromatic index of a cubic graph");
  auto* matching = app.add_subcommand("matching", "Maximum matching and perfect-matching certificate");
  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian cycle search");
  auto* chromatic_number = app.add_subcommand("chromatic-number", "Chromatic number");

  auto* scan = app.add_subcommand("scan", "Cospectral pairs in a graph6 corpus");
  std::string invariants;
  scan->add_option("--invariants", invariants,
                   "Comma-separated subset of chromatic_index,perfect_matching,hamiltonian,chromatic_number");
  scan->add_option("--jobs", ctx.jobs, "Worker threads (default from CUBICTOOL_JOBS)")->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Iterated truncations of a cospectral pair (two graphs on input)");
  int k = 1;
  family->add_option("--k", k, "Number of truncation steps")->check(CLI::Range(1, 3));

  auto* catalog_cmd = app.add_subcommand("catalog", "Print a named graph");
  std::string name;
  catalog_cmd->add_option("NAME", name, "Catalog name")->required()->check(CLI::IsMember(catalog_names()));

  auto* enumerate = app.add_subcommand("enumerate", "All connected cubic graphs of order N");
  int order = 0;
  enumerate->add_option("N", order, "Even order, 4 to " + std::to_string(kEnumerationLimit))
      ->required()
      ->check(CLI::Range(4, kEnumerationLimit));

  auto* verify = app.add_subcommand("verify-paper", "Run every check and print the report");
  bool quick = false;
  std::string output;
  verify->add_flag("--quick", quick, "Skip the order-16 corpus");
  verify->add_option("--output", output, "Write the JSON report to FILE");
  verify->add_option("--jobs", ctx.jobs, "Worker threads for the scan")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (enumerate->parsed() && order % 2 != 0) throw CLI::ValidationError("N", "order must be even");
    if (truncate->parsed() && !full && vertices.empty())
      throw CLI::ValidationError("truncate", "needs --vertices LIST or --full");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(ctx);
    if (charpoly->parsed()) return cmd_charpoly(ctx);
    if (truncate->parsed()) {
      if (!full) {
        try {
          parse_int_list(vertices);
        } catch (const std::exception&) {
          err << "truncate: --vertices expects a comma-separated list of integers\n";
          return kUsage;
        }
      }
      return cmd_truncate(ctx, vertices, full, with_trace);
    }
    if (recognize->parsed()) return cmd_recognize(ctx);
    if (chromatic_index_cmd->parsed()) return cmd_chromatic_index(ctx);
    if (matching->parsed()) return cmd_matching(ctx);
    if (hamilton->parsed()) return cmd_hamilton(ctx);
    if (chromatic_number->parsed()) return cmd_chromatic_number(ctx);
    if (scan->parsed()) {
      try {
        for (std::stringstream ss(invariants); std::getline(ss, name, ',');) parse_invariant(name);
      } catch (const PreconditionError& e) {
        err << "scan: " << e.what() << '\n';
        return kUsage;
      }
      return cmd_scan(ctx, invariants);
    }
    if (family->parsed()) return cmd_family(ctx, k);
    if (catalog_cmd->parsed()) {
      out << write_graph6(catalog(name)) << '\n';
      return kOk;
    }
    if (enumerate->parsed()) {
      for (const Graph& g : enumerate_cubic(order)) out << write_graph6(g) << '\n';
      return kOk;
    }
    if (verify->parsed()) return cmd_verify(ctx, quick, output);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kUsage;
}

}  // namespace cubic::cli
