#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turanlab/turanlab.hpp"

namespace fs = std::filesystem;
using namespace turanlab;

namespace {

enum class Format { json, csv, table };

enum ExitCode { kOk = 0, kFails = 1, kBadInput = 2, kSizeCap = 3, kInternal = 4 };

struct RunConfig {
  int max_n = kDefaultEnumerationOrder;
  bool allow_n10 = false;
  int workers = 1;
  Format format = Format::table;
  std::string output;
  std::string cache_dir;

  void validate() const {
    if (workers < 1) throw InvalidParams("--workers must be at least 1");
    if (max_n < 0 || max_n > kMaxEnumerationOrder) throw SizeCap("--max-n must be between 0 and 10");
    if (max_n > kDefaultEnumerationOrder && !allow_n10) throw SizeCap("--max-n 10 requires --allow-n10");
  }

  void check_order(int n) const {
    if (n > max_n) throw SizeCap("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(max_n));
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions opt;
    opt.workers = workers;
    opt.allow_n10 = allow_n10;
    return opt;
  }
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InvalidParams("cannot open output file " + path);
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

// ---------------------------------------------------------------------------

SpecPtr construction_from_args(const std::string& kind, const std::vector<std::string>& raw) {
  if (kind == "expr") {
    if (raw.size() != 1) throw InvalidSpec("construct expr takes one expression");
    return parse_graph_source(raw[0]);
  }
  std::vector<int> a;
  for (const auto& s : raw) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw InvalidSpec("construct arguments must be integers, got '" + s + "'");
    }
  }
  const std::map<std::string, std::size_t> arity = {
      {"empty", 1},  {"complete", 1}, {"path", 1},   {"star", 1},       {"matching", 1},    {"cycle", 1},
      {"turan", 2},  {"splith", 3},   {"fsg", 3},    {"friendship", 1}, {"cliqueunion", 3},
  };
  auto it = arity.find(kind);
  if (it == arity.end()) throw InvalidSpec("unknown construction '" + kind + "'");
  if (a.size() != it->second)
    throw InvalidSpec(kind + " takes " + std::to_string(it->second) + " integer arguments");
  if (kind == "empty") return empty_spec(a[0]);
  if (kind == "complete") return complete_spec(a[0]);
  if (kind == "path") return path_spec(a[0]);
  if (kind == "star") return star_spec(a[0]);
  if (kind == "matching") return matching_spec(a[0]);
  if (kind == "cycle") return cycle_spec(a[0]);
  if (kind == "turan") return turan_spec(a[0], a[1]);
  if (kind == "splith") return split_h_spec(a[0], a[1], a[2]);
  if (kind == "fsg") return faudree_schelp_spec(a[0], a[1], a[2]);
  if (kind == "friendship") return friendship_spec(a[0]);
  return clique_union_spec(a[0], a[1], a[2]);
}

int cmd_construct(const RunConfig& cfg, const std::string& kind, const std::vector<std::string>& args) {
  const SpecPtr spec = construction_from_args(kind, args);
  const Graph g = build(spec);
  const std::string g6 = serialize_graph6(g);
  const int nu = matching_number(g);
  Sink sink(cfg.output);
  auto& os = sink.out();
  switch (cfg.format) {
    case Format::json:
      print_json(os, Json{{"spec", describe(spec)},
                          {"graph6", g6},
                          {"n", g.order()},
                          {"edges", g.edge_count()},
                          {"degree_sequence", g.degree_sequence()},
                          {"matching_number", nu}});
      break;
    case Format::csv:
      os << "spec,graph6,n,edges,degree_sequence,matching_number\n"
         << csv_field(describe(spec)) << ',' << csv_field(g6) << ',' << g.order() << ',' << g.edge_count() << ','
         << join_ints(g.degree_sequence(), " ") << ',' << nu << '\n';
      break;
    case Format::table:
      os << g6 << '\n'
         << describe(spec) << ": n=" << g.order() << " edges=" << g.edge_count() << " degrees=["
         << join_ints(g.degree_sequence(), ",") << "] nu=" << nu << '\n';
      break;
  }
  return kOk;
}

int cmd_count(const RunConfig& cfg, const std::optional<std::string>& h_src, const std::string& g_src, bool profile) {
  const Graph g = graph_from_source(g_src);
  Sink sink(cfg.output);
  auto& os = sink.out();
  if (profile) {
    const MatchingProfile p = matching_profile(g);
    switch (cfg.format) {
      case Format::json: print_json(os, Json{{"g", g_src}, {"profile", to_json(p)}}); break;
      case Format::csv:
        os << "t,count\n";
        for (std::size_t t = 0; t < p.counts.size(); ++t) os << t << ',' << p.counts[t] << '\n';
        break;
      case Format::table:
        for (std::size_t t = 0; t < p.counts.size(); ++t) os << (t ? "," : "") << p.counts[t];
        os << '\n';
        break;
    }
    return kOk;
  }
  if (!h_src) throw InvalidParams("count needs --h unless --profile is given");
  const Graph h = graph_from_source(*h_src);
  const Count c = CopyCounter(h)(g);
  switch (cfg.format) {
    case Format::json: print_json(os, Json{{"h", *h_src}, {"g", g_src}, {"count", c}}); break;
    case Format::csv: os << "h,g,count\n" << csv_field(*h_src) << ',' << csv_field(g_src) << ',' << c << '\n'; break;
    case Format::table: os << c << '\n'; break;
  }
  return kOk;
}

std::string hex(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::optional<ExtremalResult> load_cached(const fs::path& path, int n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    ExtremalResult r = extremal_result_from_json(Json::parse(in));
    if (r.n == n) return r;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

int cmd_exbrute(const RunConfig& cfg, int n, const std::string& h_src, const std::string& f_src) {
  const Graph h = graph_from_source(h_src);
  const Graph f = graph_from_source(f_src);
  cfg.check_order(n);
  check_enumeration_order(n, cfg.allow_n10);

  std::optional<fs::path> cache;
  if (!cfg.cache_dir.empty())
    cache = fs::path(cfg.cache_dir) /
            ("exbrute-" + std::to_string(n) + "-" + hex(canonical_graph6(h)) + "-" + hex(canonical_graph6(f)) + ".json");
  std::optional<ExtremalResult> result;
  if (cache) result = load_cached(*cache, n);
  if (!result) {
    result = ex_brute(n, h, f, cfg.enumeration());
    if (cache) {
      std::error_code ec;
      fs::create_directories(cache->parent_path(), ec);
      std::ofstream(*cache) << to_json(*result).dump() << '\n';
    }
  }
  result->h_spec = h_src;
  result->f_spec = f_src;

  Sink sink(cfg.output);
  auto& os = sink.out();
  switch (cfg.format) {
    case Format::json: print_json(os, to_json(*result)); break;
    case Format::csv:
      os << "n,h_spec,f_spec,value,searched,extremal\n";
      for (const auto& g6 : result->extremal)
        os << n << ',' << csv_field(h_src) << ',' << csv_field(f_src) << ',' << result->value << ','
           << result->searched << ',' << csv_field(g6) << '\n';
      break;
    case Format::table: write_table(os, *result); break;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& which, const VerifyRequest& req) {
  if (req.n_max) cfg.check_order(*req.n_max);
  std::vector<VerificationReport> reports;
  if (which == "ALL") {
    reports = run_all_verifications(req, cfg.enumeration());
  } else {
    auto id = parse_theorem_id(which);
    if (!id) throw InvalidParams("unknown statement '" + which + "'");
    reports = run_verification(*id, req, cfg.enumeration());
  }
  Sink sink(cfg.output);
  auto& os = sink.out();
  switch (cfg.format) {
    case Format::json: print_json(os, to_json(reports)); break;
    case Format::csv:
      write_csv_header(os);
      for (const auto& r : reports) write_csv(os, r);
      break;
    case Format::table:
      for (const auto& r : reports) write_table(os, r);
      break;
  }
  for (const auto& r : reports)
    if (r.failed()) return kFails;
  return kOk;
}

int cmd_bparam(const RunConfig& cfg, const std::string& h_src, int s) {
  const Graph h = graph_from_source(h_src);
  const StructureParams p = structure_params(h, s);
  Sink sink(cfg.output);
  auto& os = sink.out();
  const std::string b = p.b ? std::to_string(*p.b) : "none";
  switch (cfg.format) {
    case Format::json: {
      Json j{{"h", h_src}, {"s", s}};
      j.update(to_json(p));
      print_json(os, j);
      break;
    }
    case Format::csv:
      os << "h,s,tau,alpha,nu,b\n" << csv_field(h_src) << ',' << s << ',' << p.tau << ',' << p.alpha << ',' << p.nu
         << ',' << (p.b ? b : "") << '\n';
      break;
    case Format::table:
      os << "tau=" << p.tau << " alpha=" << p.alpha << " nu=" << p.nu << " b=" << b << '\n';
      break;
  }
  return kOk;
}

int cmd_witness(const RunConfig& cfg, const std::string& g_src, int s) {
  const Graph g = graph_from_source(g_src);
  const auto w = berge_tutte_witness(g, s);
  const Deficiency d = deficiency(g);
  Sink sink(cfg.output);
  auto& os = sink.out();
  switch (cfg.format) {
    case Format::json: {
      Json j{{"g", g_src}, {"s", s}, {"matching_number", matching_number(g)}, {"deficiency", d.value}};
      j["witness"] = w ? to_json(*w) : Json(nullptr);
      print_json(os, j);
      break;
    }
    case Format::csv:
      os << "g,s,matching_number,deficiency,B\n"
         << csv_field(g_src) << ',' << s << ',' << matching_number(g) << ',' << d.value << ','
         << (w ? join_ints(to_vector(w->witness), " ") : "") << '\n';
      break;
    case Format::table:
      os << "nu=" << matching_number(g) << " deficiency=" << d.value << '\n';
      if (w) {
        os << "no M" << s << ": B={" << join_ints(to_vector(w->witness), ",") << "} value=" << w->value
           << " components:";
        for (VertexSet c : w->components) os << " {" << join_ints(to_vector(c), ",") << "}";
        os << '\n';
      } else {
        os << "contains M" << s << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, int n, const std::optional<std::string>& prune_src) {
  EnumerationOptions opt = cfg.enumeration();
  if (prune_src) opt.prune = graph_from_source(*prune_src);
  cfg.check_order(n);
  check_enumeration_order(n, cfg.allow_n10);
  Sink sink(cfg.output);
  auto& os = sink.out();
  if (cfg.format == Format::json) {
    Json graphs = Json::array();
    for_each_graph(n, opt, [&](const Graph& g) { graphs.push_back(serialize_graph6(g)); });
    print_json(os, Json{{"n", n}, {"count", graphs.size()}, {"graphs", graphs}});
    return kOk;
  }
  if (cfg.format == Format::csv) os << "graph6\n";
  for_each_graph(n, opt, [&](const Graph& g) { os << serialize_graph6(g) << '\n'; });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Turan numbers for matchings and small graphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* dir = std::getenv("TURANLAB_CACHE_DIR")) cfg.cache_dir = dir;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  app.add_option("--format", cfg.format, "Output format: json, csv or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("json|csv|table");
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("-w,--workers", cfg.workers, "Enumeration threads (results do not depend on it)");
  auto* max_n = app.add_option("--max-n", cfg.max_n, "Largest enumeration order accepted (<= 10)");
  app.add_flag("--allow-n10", cfg.allow_n10, "Permit enumeration at n = 10");
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory for exbrute results (default $TURANLAB_CACHE_DIR)");

  std::string kind;
  std::vector<std::string> construct_args;
  auto* construct = app.add_subcommand(
      "construct",
      "Build a named graph: empty N, complete N, path K, star R, matching K, cycle N, turan N K, splith N K A, "
      "fsg N K L, friendship N, cliqueunion A K B, or expr EXPRESSION");
  construct->add_option("kind", kind)->required();
  construct->add_option("args", construct_args);

  std::optional<std::string> h_src;
  std::string g_src;
  bool profile = false;
  auto* count = app.add_subcommand("count", "Count copies of H in G, or print G's matching profile");
  count->add_option("--h", h_src, "Pattern graph (expression or graph6)");
  count->add_option("--g", g_src, "Host graph (expression or graph6)")->required();
  count->add_flag("--profile", profile, "Print N(M_t, G) for t = 0..nu(G)");

  int n = 0;
  std::string h_req, f_req;
  auto* exbrute = app.add_subcommand("exbrute", "Exact ex(n, H, F) by exhaustive search");
  exbrute->add_option("n", n)->required();
  exbrute->add_option("--h", h_req)->required();
  exbrute->add_option("--f", f_req)->required();

  std::string which;
  VerifyRequest req;
  auto* verify = app.add_subcommand(
      "verify",
      "Check a statement against the oracle: PROP1_UB, LEMMA2, PROP3_STRICT, PROP4_I, PROP4_II, STAR_THM, "
      "FAUDREE_SCHELP, PATH_THM, TAU_PROP, MINDEG_PROP, LIU_ZHANG, B_PARAM_AGREE or ALL. CSV columns: "
      "theorem_id, params, case, n, expected, observed, holds, witness, note. Exit status 1 when any report FAILS");
  verify->add_option("id", which)->required();
  verify->add_option("--nmax", req.n_max);
  verify->add_option("--tmax", req.t_max);
  verify->add_option("--t", req.t);
  verify->add_option("--k", req.k);
  verify->add_option("--r", req.r);
  verify->add_option("--s", req.s);
  verify->add_option("--h", req.h);
  verify->add_option("--f", req.f);

  int s = 1;
  auto* bparam = app.add_subcommand("bparam", "tau, alpha, nu and b(H, s)");
  bparam->add_option("--h", h_req)->required();
  bparam->add_option("--s", s)->required();

  auto* witness = app.add_subcommand("witness", "Berge-Tutte witness that G has no M_s");
  witness->add_option("--g", g_src)->required();
  witness->add_option("--s", s)->required();

  std::optional<std::string> prune;
  auto* enumerate = app.add_subcommand("enumerate", "List graphs on n vertices up to isomorphism, one graph6 per line");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--prune", prune, "Only graphs not containing this graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (cfg.allow_n10 && max_n->count() == 0) cfg.max_n = kMaxEnumerationOrder;
    cfg.validate();
    if (*construct) return cmd_construct(cfg, kind, construct_args);
    if (*count) return cmd_count(cfg, h_src, g_src, profile);
    if (*exbrute) return cmd_exbrute(cfg, n, h_req, f_req);
    if (*verify) return cmd_verify(cfg, which, req);
    if (*bparam) return cmd_bparam(cfg, h_req, s);
    if (*witness) return cmd_witness(cfg, g_src, s);
    if (*enumerate) return cmd_enumerate(cfg, n, prune);
  } catch (const SizeCap& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSizeCap;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const MalformedEncoding& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
