#include "oddcover/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "oddcover/error.hpp"
#include "oddcover/search.hpp"

namespace oddcover {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::Forest, "forest"},
    {Family::Bipartite, "bipartite"},
    {Family::OddCycle, "odd-cycle"},
    {Family::Complete, "complete"},
    {Family::AdjacentTwin, "adjacent-twin"},
    {Family::Rank, "rank"},
    {Family::Star, "star"},
    {Family::Triangles, "triangles"},
}};

ConstructionResult finish(OddCover cover, const Graph& g, Family family, std::string formula, std::size_t value) {
  cover = drop_empty(std::move(cover));
  const VerifyReport report = verify(cover, g, 1);
  if (!report.ok) {
    const Mismatch& m = report.mismatches.front();
    throw ConstructionFailure(std::string(to_string(family)) + " construction does not verify: pair " +
                              std::to_string(m.u) + "-" + std::to_string(m.v) + " covered " + std::to_string(m.coverage) +
                              " times");
  }
  return {std::move(cover), family, std::move(formula), value};
}

using Bit = signed char;
constexpr Bit kEps = -1;

}  // namespace

std::string_view to_string(Family f) {
  for (auto [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto [family, family_name] : kFamilyNames) {
    if (family_name == name) return family;
  }
  return std::nullopt;
}

// --- forests --------------------------------------------------------------

ConstructionResult forest_cover(const Graph& forest) {
  if (!is_forest(forest)) throw InvalidArgument("forest_cover: graph has a cycle");
  const int n = forest.order();
  const auto idx = [](Vertex v) { return static_cast<std::size_t>(v - 1); };

  // Root every component at its least vertex; `order` lists parents before children.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  for (const VertexSet& comp : connected_components(forest)) {
    std::vector<Vertex> stack{comp.front()};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (Vertex w : forest.neighbors(u)) {
        if (w != parent[idx(u)]) {
          parent[idx(w)] = u;
          stack.push_back(w);
        }
      }
    }
  }

  // in_cover[v]: minimum cover of v's subtree containing v; out_cover[v]: without v.
  std::vector<int> in_cover(static_cast<std::size_t>(n), 1), out_cover(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (const Vertex p = parent[idx(v)]) {
      in_cover[idx(p)] += std::min(in_cover[idx(v)], out_cover[idx(v)]);
      out_cover[idx(p)] += in_cover[idx(v)];
    }
  }
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  for (Vertex v : order) {
    const Vertex p = parent[idx(v)];
    if (p && !chosen[idx(p)]) {
      chosen[idx(v)] = true;
    } else {
      chosen[idx(v)] = in_cover[idx(v)] < out_cover[idx(v)];
    }
  }

  // Each edge goes to its covered endpoint; if both are covered, to the parent.
  std::vector<VertexSet> leaves(static_cast<std::size_t>(n));
  for (Vertex v : order) {
    const Vertex p = parent[idx(v)];
    if (!p) continue;
    if (chosen[idx(p)]) {
      leaves[idx(p)].push_back(v);
    } else {
      leaves[idx(v)].push_back(p);
    }
  }
  OddCover cover{n, {}};
  std::size_t tau = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (!chosen[idx(v)]) continue;
    ++tau;
    cover.bicliques.emplace_back(VertexSet{v}, leaves[idx(v)]);
  }
  return finish(std::move(cover), forest, Family::Forest, "m(F)", tau);
}

// --- bipartite graphs -----------------------------------------------------

ConstructionResult bipartite_cover(const Graph& g) {
  std::vector<Side> sides;
  if (g.bipartition()) {
    sides = *g.bipartition();
  } else if (auto found = find_bipartition(g)) {
    sides = std::move(*found);
  } else {
    throw InvalidArgument("bipartite_cover: graph is not bipartite");
  }

  const int n = g.order();
  const auto idx = [](Vertex v) { return static_cast<std::size_t>(v - 1); };
  Gf2Vector processed(static_cast<std::size_t>(n));
  std::array<std::vector<Vertex>, 2> done_by_side;
  OddCover cover{n, {}};

  auto restricted_row = [&](Vertex u) {
    Gf2Vector row = g.neighborhood(u);
    kernels::and_to(row.words(), row.words(), processed.words());
    return row;
  };

  for (Vertex v = 1; v <= n; ++v) {
    const Side side = sides[idx(v)];
    const std::vector<Vertex>& same_side = done_by_side[side == Side::A ? 0 : 1];
    std::vector<Gf2Vector> rows;
    for (Vertex u : same_side) rows.push_back(restricted_row(u));
    const Gf2Vector target = restricted_row(v);
    const auto subset = solve_subset(Gf2Matrix::from_rows(rows, static_cast<std::size_t>(n)), target);

    if (subset) {
      // Rank unchanged: extend through the neighbourhood combination.
      VertexSet s;
      for (std::size_t i : *subset) s.push_back(same_side[i]);
      cover = extend_by_lemma(cover, s, v);
    } else {
      // Rank grows by two: add the star at v.
      VertexSet nbrs;
      for (std::size_t i : target.support()) nbrs.push_back(static_cast<Vertex>(i + 1));
      if (side == Side::A) {
        cover.bicliques.emplace_back(VertexSet{v}, std::move(nbrs));
      } else {
        cover.bicliques.emplace_back(std::move(nbrs), VertexSet{v});
      }
    }
    processed.set(idx(v));
    done_by_side[side == Side::A ? 0 : 1].push_back(v);
  }

  for (const Biclique& b : cover.bicliques) {
    const bool respects = std::ranges::all_of(b.x(), [&](Vertex u) { return sides[idx(u)] == Side::A; }) &&
                          std::ranges::all_of(b.y(), [&](Vertex u) { return sides[idx(u)] == Side::B; });
    if (!respects) throw ConstructionFailure("bipartite_cover: biclique does not respect the bipartition");
  }
  return finish(std::move(cover), g, Family::Bipartite, "r2/2", two_rank(g) / 2);
}

// --- odd cycles -----------------------------------------------------------

ConstructionResult odd_cycle_cover(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("odd_cycle_cover: n must be odd and >= 3");
  OddCover cover{n, {}};
  for (Vertex c = 2; c < n; c += 2) cover.bicliques.emplace_back(VertexSet{c}, VertexSet{c - 1, c + 1});
  cover.bicliques.emplace_back(VertexSet{n}, VertexSet{1});
  return finish(std::move(cover), cycle(n), Family::OddCycle, "(n+1)/2", static_cast<std::size_t>((n + 1) / 2));
}

// --- adjacent twins -------------------------------------------------------

ConstructionResult adjacent_twin_cover(const Graph& g, const AdjacentTwinMatching& m) {
  check_adjacent_twin_matching(g, m);
  const std::size_t h = m.pairs.size();
  if (h == 0) return finish(OddCover{g.order(), {}}, g, Family::AdjacentTwin, "n/2+1", 1);

  // I(i, j) for the a-side vertices, 1-based.
  auto linked = [&](std::size_t i, std::size_t j) -> Bit { return g.adjacent(m.pairs[i - 1].first, m.pairs[j - 1].first) ? 1 : 0; };

  // a[t-1] is the word of a_t; positions are stored 0-based.
  std::vector<std::vector<Bit>> a;
  a.push_back({kEps, 0});
  if (h >= 2) {
    a[0] = {kEps, 0, 0, 0};
    a.push_back({0, kEps, linked(1, 2), 0});
  }
  for (std::size_t j = 3; j <= h; ++j) {
    // Parity of a^(t) over positions 1..j-1 other than t.
    std::vector<Bit> partial(j);
    for (std::size_t t = 1; t < j; ++t) {
      int sum = 0;
      for (std::size_t p = 1; p < j; ++p) {
        if (p != t) sum += a[t - 1][p - 1];
      }
      partial[t] = static_cast<Bit>(sum & 1);
    }
    const bool odd_step = j % 2 == 1;
    if (!odd_step) {
      for (auto& word : a) word.insert(word.end(), {0, 0});
    }
    const std::size_t length = a.front().size();
    std::vector<Bit> fresh(length, 0);
    fresh[j - 1] = kEps;
    int total = 0;
    for (std::size_t i = 1; i < j; ++i) {
      fresh[i - 1] = static_cast<Bit>((partial[i] + linked(i, j)) & 1);
      total += fresh[i - 1];
    }
    fresh[j] = static_cast<Bit>(total & 1);
    // even steps leave the final padding coordinate at 0
    a.push_back(std::move(fresh));
  }

  const std::size_t length = a.front().size();
  auto to_word = [](const std::vector<Bit>& bits, bool flip) {
    CodeWord w;
    for (Bit b : bits) w.push_back(b == kEps ? Symbol::Eps : ((b == 1) != flip ? Symbol::One : Symbol::Zero));
    return w;
  };
  CoverCode code{static_cast<int>(length), std::vector<CodeWord>(static_cast<std::size_t>(g.order()))};
  for (std::size_t t = 0; t < h; ++t) {
    code.words[static_cast<std::size_t>(m.pairs[t].first - 1)] = to_word(a[t], false);
    code.words[static_cast<std::size_t>(m.pairs[t].second - 1)] = to_word(a[t], true);
  }

  if (h % 2 == 0) {
    // The last two coordinates are complete bipartitions of V, so their XOR
    // is the single biclique splitting V by whether the two symbols agree.
    for (CodeWord& w : code.words) {
      const Symbol p = w[length - 2];
      const Symbol q = w[length - 1];
      if (p == Symbol::Eps || q == Symbol::Eps) {
        throw ConstructionFailure("adjacent_twin_cover: final coordinates do not cover every vertex; cannot merge");
      }
      w.pop_back();
      w.back() = p == q ? Symbol::Zero : Symbol::One;
    }
    --code.k;
  }
  return finish(decode(code), g, Family::AdjacentTwin, "n/2+1", h + 1);
}

// --- complete graphs ------------------------------------------------------

CodeWord complement(const CodeWord& w) {
  CodeWord out = w;
  for (Symbol& s : out) {
    if (s != Symbol::Eps) s = s == Symbol::Zero ? Symbol::One : Symbol::Zero;
  }
  return out;
}

std::vector<CodeWord> complete_8k_words(int k) {
  if (k < 1) throw InvalidArgument("complete_8k_words: k must be >= 1");
  const int len = 4 * k;
  std::vector<CodeWord> words;
  for (int i = 1; i <= len; ++i) {
    CodeWord w(static_cast<std::size_t>(len), Symbol::One);
    const int r = i % 4;
    for (int j = 1; j <= len; ++j) {
      Symbol& s = w[static_cast<std::size_t>(j - 1)];
      if (j == i) {
        s = Symbol::Eps;
      } else if (j >= i + 2 || ((r == 0 || r == 1) && j == i + 1) || ((r == 0 || r == 3) && j == i - 1)) {
        s = Symbol::Zero;
      }
    }
    words.push_back(std::move(w));
  }
  return words;
}

namespace {

OddCover with_apex_star(OddCover cover) {
  // Adds vertex n+1 joined to everything by one star.
  VertexSet rest(static_cast<std::size_t>(cover.n));
  for (int v = 1; v <= cover.n; ++v) rest[static_cast<std::size_t>(v - 1)] = v;
  cover.n += 1;
  cover.bicliques.emplace_back(VertexSet{cover.n}, std::move(rest));
  return cover;
}

OddCover complete_cover_raw(int n) {
  if (n <= 1) return OddCover{n, {}};
  if (n % 8 == 0) {
    const auto a = complete_8k_words(n / 8);
    CoverCode code{n / 2, {}};
    for (const CodeWord& w : a) {
      code.words.push_back(w);
      code.words.push_back(complement(w));
    }
    return decode(code);
  }
  if (n % 8 == 7) {
    VertexSet keep(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) keep[static_cast<std::size_t>(v - 1)] = v;
    return drop_empty(restrict_cover(complete_cover_raw(n + 1), keep));
  }
  if (n % 2 == 1) return with_apex_star(complete_cover_raw(n - 1));
  const Graph kn = complete(n);
  AdjacentTwinMatching m;
  for (Vertex v = 1; v < n; v += 2) m.pairs.emplace_back(v, v + 1);
  return adjacent_twin_cover(kn, m).cover;
}

}  // namespace

ConstructionResult complete_cover(int n) {
  if (n < 1) throw InvalidArgument("complete_cover: n must be >= 1");
  const auto half_up = static_cast<std::size_t>((n + 1) / 2);
  const int r = n % 8;
  const bool exact = r == 0 || r == 1 || r == 7;
  return finish(complete_cover_raw(n), complete(n), Family::Complete, exact ? "ceil(n/2)" : "ceil(n/2)+1",
                exact ? half_up : half_up + 1);
}

// --- rank -----------------------------------------------------------------

ConstructionResult rank_cover(const Graph& g) {
  const SymplecticDecomposition dec = symplectic_decompose(g.adjacency());
  OddCover cover{g.order(), {}};
  for (const auto& [x, y] : dec.pairs) {
    VertexSet xs, ys, zs;
    for (int v = 1; v <= g.order(); ++v) {
      const auto i = static_cast<std::size_t>(v - 1);
      const bool in_x = x.get(i);
      const bool in_y = y.get(i);
      if (in_x && in_y) {
        zs.push_back(v);
      } else if (in_x) {
        xs.push_back(v);
      } else if (in_y) {
        ys.push_back(v);
      }
    }
    auto [first, second] = split_triclique(Triclique(std::move(xs), std::move(ys), std::move(zs)));
    cover.bicliques.push_back(std::move(first));
    cover.bicliques.push_back(std::move(second));
  }
  return finish(std::move(cover), g, Family::Rank, "r2", 2 * dec.pairs.size());
}

// --- stars ----------------------------------------------------------------

ConstructionResult star_cover(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) by_degree[static_cast<std::size_t>(v - 1)] = v;
  std::ranges::stable_sort(by_degree, [&](Vertex u, Vertex v) { return g.degree(u) < g.degree(v); });

  std::vector<bool> independent(static_cast<std::size_t>(n), false);
  std::size_t alpha = 0;
  for (Vertex v : by_degree) {
    const VertexSet nbrs = g.neighbors(v);
    if (std::ranges::none_of(nbrs, [&](Vertex u) { return independent[static_cast<std::size_t>(u - 1)]; })) {
      independent[static_cast<std::size_t>(v - 1)] = true;
      ++alpha;
    }
  }
  // An edge between two centres belongs to the smaller one.
  OddCover cover{n, {}};
  for (Vertex v = 1; v <= n; ++v) {
    if (independent[static_cast<std::size_t>(v - 1)]) continue;
    VertexSet leaves;
    for (Vertex u : g.neighbors(v)) {
      if (independent[static_cast<std::size_t>(u - 1)] || u > v) leaves.push_back(u);
    }
    cover.bicliques.emplace_back(VertexSet{v}, std::move(leaves));
  }
  return finish(std::move(cover), g, Family::Star, "n-|I|", static_cast<std::size_t>(n) - alpha);
}

// --- disjoint triangles ---------------------------------------------------

ConstructionResult k_triangles_cover(int k, int max_k) {
  if (k < 1) throw InvalidArgument("k_triangles_cover: k must be >= 1");
  if (k > max_k) {
    throw InvalidArgument("k_triangles_cover: k = " + std::to_string(k) + " exceeds the search budget of " + std::to_string(max_k));
  }
  const Graph g = k_triangles(k);
  const auto target = static_cast<std::size_t>(k + 1);
  if (k == 2) {
    // Triangles {1,2,3} and {4,5,6}; pattern of three 4-cycles.
    OddCover cover{6, {Biclique({3, 5}, {4, 2}), Biclique({1, 5}, {2, 6}), Biclique({3, 6}, {4, 1})}};
    return finish(std::move(cover), g, Family::Triangles, "k+1", target);
  }
  SearchConfig cfg;
  cfg.max_k = k + 1;
  cfg.deterministic = true;
  const SearchResult result = exact_b2(g, cfg);
  if (result.status != SearchStatus::Exact || !result.witness || result.witness->size() > target) {
    throw ConstructionFailure("k_triangles_cover: search found no cover of size " + std::to_string(target));
  }
  return finish(*result.witness, g, Family::Triangles, "k+1", target);
}

// --- dispatch -------------------------------------------------------------

namespace {

std::optional<std::vector<VertexSet>> triangle_components(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  auto comps = connected_components(g);
  for (const VertexSet& c : comps) {
    if (c.size() != 3 || !g.adjacent(c[0], c[1]) || !g.adjacent(c[1], c[2]) || !g.adjacent(c[0], c[2])) {
      return std::nullopt;
    }
  }
  return comps;
}

}  // namespace

bool applicable(const Graph& g, Family f) {
  switch (f) {
    case Family::Forest: return is_forest(g);
    case Family::Bipartite: return g.bipartition().has_value() || find_bipartition(g).has_value();
    case Family::OddCycle: return g.order() % 2 == 1 && cycle_order(g).has_value();
    case Family::Complete: return g.order() >= 1 && is_complete(g);
    case Family::AdjacentTwin: return adjacent_twin_matching(g).has_value();
    case Family::Rank:
    case Family::Star: return true;
    case Family::Triangles: {
      const auto comps = triangle_components(g);
      return comps && comps->size() <= static_cast<std::size_t>(kMaxTrianglesForSearch);
    }
  }
  return false;
}

ConstructionResult construct(const Graph& g, Family f) {
  if (!applicable(g, f)) throw InvalidArgument("construct: family '" + std::string(to_string(f)) + "' does not apply to this graph");
  auto relabelled = [&g](ConstructionResult r, const std::vector<Vertex>& label) {
    r.cover = relabel(r.cover, label, g.order());
    return finish(std::move(r.cover), g, r.family, std::move(r.formula), r.formula_value);
  };
  switch (f) {
    case Family::Forest: return forest_cover(g);
    case Family::Bipartite: return bipartite_cover(g);
    case Family::OddCycle: return relabelled(odd_cycle_cover(g.order()), *cycle_order(g));
    case Family::Complete: return complete_cover(g.order());
    case Family::AdjacentTwin: return adjacent_twin_cover(g, *adjacent_twin_matching(g));
    case Family::Rank: return rank_cover(g);
    case Family::Star: return star_cover(g);
    case Family::Triangles: {
      const auto comps = *triangle_components(g);
      std::vector<Vertex> label;
      for (const VertexSet& c : comps) label.insert(label.end(), c.begin(), c.end());
      return relabelled(k_triangles_cover(static_cast<int>(comps.size())), label);
    }
  }
  throw InvalidArgument("construct: unknown family");
}

ConstructionResult construct_auto(const Graph& g, bool best) {
  std::optional<ConstructionResult> chosen;
  for (Family f : kAutoOrder) {
    if (!applicable(g, f)) continue;
    ConstructionResult r = construct(g, f);
    if (!best) return r;
    if (!chosen || r.size() < chosen->size()) chosen = std::move(r);
  }
  return std::move(*chosen);
}

}  // namespace oddcover
