#include "oddcover/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "oddcover/construct.hpp"
#include "oddcover/graph_io.hpp"
#include "oddcover/json_io.hpp"
#include "oddcover/search.hpp"

namespace oddcover::cli {

namespace {

// Raised for anything the user supplied that cannot be used; maps to exit 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw BadInput("cannot open '" + path + "'");
  return read_all(f);
}

long long parse_int(const std::string& s, const char* what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw BadInput(std::string(what) + ": expected an integer, got '" + s + "'");
  return v;
}

int parse_small(const std::string& s, const char* what) {
  const long long v = parse_int(s, what);
  if (v < 0 || v > (1 << 20)) throw BadInput(std::string(what) + ": value out of range");
  return static_cast<int>(v);
}

Graph generate(const std::vector<std::string>& spec) {
  if (spec.empty()) throw BadInput("gen: missing family");
  const std::string& fam = spec[0];
  auto arity = [&](std::size_t n) {
    if (spec.size() != n + 1) throw BadInput("gen " + fam + ": expected " + std::to_string(n) + " parameter(s)");
  };
  auto arg = [&](std::size_t i) { return parse_small(spec[i], fam.c_str()); };
  if (fam == "complete") return arity(1), complete(arg(1));
  if (fam == "cycle") return arity(1), cycle(arg(1));
  if (fam == "path") return arity(1), path(arg(1));
  if (fam == "triangles") return arity(1), k_triangles(arg(1));
  if (fam == "bk") return arity(1), graph_bk(arg(1));
  if (fam == "tk") return arity(1), graph_tk(arg(1));
  if (fam == "empty") return arity(1), empty_graph(arg(1));
  if (fam == "star") return arity(1), star(arg(1));
  if (fam == "kmn") return arity(2), complete_bipartite(arg(1), arg(2));
  if (fam == "random") {
    arity(3);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(spec[2], &used);
      if (used != spec[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw BadInput("gen random: edge probability must be a number");
    }
    if (!(p >= 0 && p <= 1)) throw BadInput("gen random: edge probability must lie in [0, 1]");
    const long long seed = parse_int(spec[3], "seed");
    return random_graph(arg(1), p, static_cast<std::uint64_t>(seed));
  }
  throw BadInput("gen: unknown family '" + fam + "'");
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

struct GraphSource {
  std::string file;
  std::string inline_text;
  std::string gen;

  void attach(CLI::App* app, const std::string& file_flag = "--graph") {
    app->add_option(file_flag, file, "Graph file (graph6 or edge list)");
    app->add_option("--inline", inline_text, "Graph given directly (graph6 or edge list)");
    app->add_option("--gen", gen, "Generator spec, e.g. \"cycle 7\"");
  }

  int count() const { return !file.empty() + !inline_text.empty() + !gen.empty(); }

  Graph load(std::istream& in) const {
    if (count() > 1) throw BadInput("give at most one of --graph, --inline and --gen");
    if (!gen.empty()) return generate(split_words(gen));
    if (!inline_text.empty()) return parse_graph_auto(inline_text);
    if (!file.empty()) return parse_graph_auto(read_file(file));
    return parse_graph_auto(read_all(in));
  }
};

void print_cover_text(std::ostream& out, const OddCover& c) {
  out << "n: " << c.n << "\n";
  out << "bicliques: " << c.size() << "\n";
  for (const Biclique& b : c.bicliques) {
    out << "  X:";
    for (Vertex v : b.x()) out << ' ' << v;
    out << "  Y:";
    for (Vertex v : b.y()) out << ' ' << v;
    out << "\n";
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv("ODDCOVER_THREADS")) {
    const std::string s(env);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd covers of graphs by bicliques: bounds, constructions, verification and exact search"};
  app.name("oddcover");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"json", "text"}));

  auto* gen = app.add_subcommand("gen", "Generate a graph and print it as graph6");
  std::vector<std::string> gen_spec;
  gen->add_option("spec", gen_spec, "Family and parameters: complete N | cycle N | path N | triangles K | bk K | tk K | empty N | star L | kmn A B | random N P SEED")
      ->required();
  bool gen_edges = false;
  gen->add_flag("--edge-list", gen_edges, "Print an edge list instead of graph6");

  auto* rank_cmd = app.add_subcommand("rank", "Print the 2-rank of the adjacency matrix");
  GraphSource rank_src;
  rank_src.attach(rank_cmd);

  auto* bounds = app.add_subcommand("bounds", "Print lower and upper bounds on b2 with a witness cover");
  GraphSource bounds_src;
  bounds_src.attach(bounds);

  auto* cons = app.add_subcommand("construct", "Build an odd cover from a known family");
  GraphSource cons_src;
  cons_src.attach(cons);
  std::string family = "auto";
  bool best = false;
  cons->add_option("family", family, "auto, forest, bipartite, odd-cycle, complete, adjacent-twin, rank, star or triangles");
  cons->add_flag("--best", best, "With auto: return the smallest cover over all applicable families");

  auto* ver = app.add_subcommand("verify", "Check a cover against a graph; exit 0 iff it is an odd cover");
  GraphSource ver_src;
  ver_src.attach(ver);
  std::string cover_file;
  ver->add_option("--cover", cover_file, "Cover JSON file (default: standard input)");

  auto* solve = app.add_subcommand("solve", "Compute b2 exactly by search");
  GraphSource solve_src;
  solve_src.attach(solve);
  SearchConfig cfg;
  cfg.threads = default_threads();
  double seconds = 3600;
  solve->add_option("--max-k", cfg.max_k, "Largest cover size to search")->check(CLI::Range(0, kMaxSearchK));
  solve->add_option("--time", seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
  solve->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores (default: $ODDCOVER_THREADS or 1)");
  solve->add_option("--node-budget", cfg.node_budget, "Search node budget");
  bool search_only = false;
  solve->add_flag("--search-only", search_only, "Do not stop early at the best constructed cover");
  solve->add_flag("--deterministic,!--nondeterministic", cfg.deterministic, "Same witness and node count for any thread count (default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "oddcover: " << e.what() << "\n";
    return kExitBadInput;
  }
  const bool text = format == "text";

  try {
    if (*gen) {
      const Graph g = generate(gen_spec);
      out << (gen_edges ? to_edge_list(g) : to_graph6(g) + "\n");
      return kExitOk;
    }

    if (*rank_cmd) {
      const Graph g = rank_src.load(in);
      const std::size_t r = two_rank(g);
      if (text) {
        out << "n: " << g.order() << "\nr2: " << r << "\n";
      } else {
        out << Json{{"n", g.order()}, {"r2", r}}.dump() << "\n";
      }
      return kExitOk;
    }

    if (*bounds) {
      const Graph g = bounds_src.load(in);
      const std::size_t lb = lower_bound(g);
      const UpperBound ub = upper_bound(g);
      if (text) {
        out << "lb: " << lb << "\nub: " << ub.value << "\nfamily: " << to_string(ub.family) << "\n";
        print_cover_text(out, ub.cover);
      } else {
        Json j{{"lb", lb}, {"ub", ub.value}, {"family", std::string(to_string(ub.family))}, {"witness", cover_to_json(ub.cover)}};
        out << j.dump() << "\n";
      }
      return kExitOk;
    }

    if (*cons) {
      const Graph g = cons_src.load(in);
      ConstructionResult r = [&] {
        if (family == "auto") return construct_auto(g, best);
        const auto f = parse_family(family);
        if (!f) throw BadInput("construct: unknown family '" + family + "'");
        return construct(g, *f);
      }();
      if (text) {
        out << "family: " << to_string(r.family) << "\nformula: " << r.formula << "\nsize: " << r.size() << "\n";
        print_cover_text(out, r.cover);
      } else {
        out << construction_to_json(r).dump() << "\n";
      }
      return kExitOk;
    }

    if (*ver) {
      if (ver_src.count() == 0 && cover_file.empty()) throw BadInput("verify: graph and cover cannot both come from standard input");
      const Graph g = ver_src.load(in);
      const OddCover cover = parse_cover_json(cover_file.empty() ? read_all(in) : read_file(cover_file));
      if (cover.n != g.order()) {
        throw BadInput("verify: cover has n = " + std::to_string(cover.n) + " but the graph has " + std::to_string(g.order()) + " vertices");
      }
      const VerifyReport rep = verify(cover, g);
      if (text) {
        out << "ok: " << (rep.ok ? "true" : "false") << "\ncardinality: " << rep.cardinality
            << "\nrank_lower_bound: " << rep.rank_lower_bound << "\nmismatches: " << rep.mismatch_total << "\n";
        for (const Mismatch& m : rep.mismatches) out << "  " << m.u << ' ' << m.v << " covered " << m.coverage << " times\n";
      } else {
        out << report_to_json(rep).dump() << "\n";
      }
      if (!rep.ok) err << "oddcover: not an odd cover (" << rep.mismatch_total << " mismatched pairs)\n";
      return rep.ok ? kExitOk : kExitVerifyFailed;
    }

    if (*solve) {
      const Graph g = solve_src.load(in);
      cfg.time_budget = std::chrono::duration<double>(seconds);
      cfg.use_upper_bound = !search_only;
      const SearchResult r = exact_b2(g, cfg);
      if (text) {
        out << "status: " << to_string(r.status) << "\nb2: " << (r.b2 ? std::to_string(*r.b2) : "unknown") << "\nlb: " << r.lb
            << "\nnodes: " << r.nodes << "\nelapsed_ms: " << r.elapsed.count() << "\n";
        if (r.witness) print_cover_text(out, *r.witness);
      } else {
        out << search_to_json(r).dump() << "\n";
      }
      if (r.status != SearchStatus::Exact) {
        err << "oddcover: search stopped before b2 was determined (" << to_string(r.status) << ")\n";
        return kExitBudget;
      }
      return kExitOk;
    }
  } catch (const BadInput& e) {
    err << "oddcover: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    err << "oddcover: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidArgument& e) {
    err << "oddcover: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace oddcover::cli
