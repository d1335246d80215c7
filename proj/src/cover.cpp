#include "oddcover/cover.hpp"

#include <algorithm>

namespace oddcover {

namespace {

VertexSet normalised(VertexSet s) {
  std::ranges::sort(s);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool contains(const VertexSet& s, Vertex v) { return std::ranges::binary_search(s, v); }

std::size_t odd_meet(const VertexSet& side, const std::vector<bool>& in_s) {
  std::size_t count = 0;
  for (Vertex u : side) count += in_s[static_cast<std::size_t>(u)] ? 1 : 0;
  return count % 2;
}

Gf2Vector indicator(const VertexSet& s, int n) {
  Gf2Vector v(static_cast<std::size_t>(n));
  for (Vertex u : s) v.set(static_cast<std::size_t>(u - 1));
  return v;
}

}  // namespace

Biclique::Biclique(VertexSet x, VertexSet y) : x_(normalised(std::move(x))), y_(normalised(std::move(y))) {
  if (intersects(x_, y_)) throw InvalidArgument("biclique: partite sets must be disjoint");
}

bool Biclique::contains_edge(Vertex u, Vertex v) const {
  return (contains(x_, u) && contains(y_, v)) || (contains(x_, v) && contains(y_, u));
}

Triclique::Triclique(VertexSet x, VertexSet y, VertexSet z)
    : x_(normalised(std::move(x))), y_(normalised(std::move(y))), z_(normalised(std::move(z))) {
  if (intersects(x_, y_) || intersects(x_, z_) || intersects(y_, z_)) {
    throw InvalidArgument("triclique: partite sets must be pairwise disjoint");
  }
}

void OddCover::validate() const {
  if (n < 0) throw InvalidArgument("cover: negative ground-set size");
  for (std::size_t i = 0; i < bicliques.size(); ++i) {
    for (const VertexSet* side : {&bicliques[i].x(), &bicliques[i].y()}) {
      for (Vertex v : *side) {
        if (v < 1 || v > n) {
          throw InvalidArgument("cover: biclique " + std::to_string(i) + " has vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(n));
        }
      }
    }
  }
}

Gf2Matrix cover_adjacency(const OddCover& cover) {
  cover.validate();
  const int n = cover.n;
  Gf2Matrix sum(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const Biclique& b : cover.bicliques) {
    if (b.empty()) continue;
    const Gf2Vector xs = indicator(b.x(), n);
    const Gf2Vector ys = indicator(b.y(), n);
    for (Vertex u : b.x()) kernels::xor_into(sum.row(static_cast<std::size_t>(u - 1)), ys.words());
    for (Vertex v : b.y()) kernels::xor_into(sum.row(static_cast<std::size_t>(v - 1)), xs.words());
  }
  return sum;
}

VerifyReport verify(const OddCover& cover, const Graph& g, std::size_t mismatch_cap) {
  if (cover.n != g.order()) {
    throw InvalidArgument("verify: cover ground set has " + std::to_string(cover.n) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  const Gf2Matrix diff = cover_adjacency(cover) ^ g.adjacency();
  VerifyReport report;
  report.cardinality = cover.size();
  report.rank_lower_bound = (two_rank(g) + 1) / 2;
  for (std::size_t i = 0; i < diff.rows(); ++i) {
    if (kernels::is_zero(diff.row(i))) continue;
    for (std::size_t j = i + 1; j < diff.cols(); ++j) {
      if (!diff.get(i, j)) continue;
      ++report.mismatch_total;
      if (report.mismatches.size() < mismatch_cap) {
        const auto u = static_cast<Vertex>(i + 1);
        const auto v = static_cast<Vertex>(j + 1);
        const auto coverage = static_cast<std::size_t>(
            std::ranges::count_if(cover.bicliques, [&](const Biclique& b) { return b.contains_edge(u, v); }));
        report.mismatches.push_back({u, v, coverage});
      }
    }
  }
  report.ok = report.mismatch_total == 0;
  return report;
}

std::string to_string(const CodeWord& w) {
  std::string out;
  for (Symbol s : w) out.push_back(s == Symbol::Zero ? '0' : s == Symbol::One ? '1' : 'e');
  return out;
}

CodeWord parse_code_word(std::string_view text) {
  CodeWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': w.push_back(Symbol::Zero); break;
      case '1': w.push_back(Symbol::One); break;
      case 'e': w.push_back(Symbol::Eps); break;
      default: throw ParseError("code word: expected '0', '1' or 'e'", i);
    }
  }
  return w;
}

CoverCode encode(const OddCover& cover) {
  cover.validate();
  CoverCode code;
  code.k = static_cast<int>(cover.size());
  code.words.assign(static_cast<std::size_t>(cover.n), CodeWord(cover.size(), Symbol::Eps));
  for (std::size_t j = 0; j < cover.size(); ++j) {
    for (Vertex v : cover.bicliques[j].x()) code.words[static_cast<std::size_t>(v - 1)][j] = Symbol::Zero;
    for (Vertex v : cover.bicliques[j].y()) code.words[static_cast<std::size_t>(v - 1)][j] = Symbol::One;
  }
  return code;
}

OddCover decode(const CoverCode& code) {
  if (code.k < 0) throw InvalidArgument("decode: negative word length");
  const auto k = static_cast<std::size_t>(code.k);
  std::vector<VertexSet> xs(k), ys(k);
  for (std::size_t v = 0; v < code.words.size(); ++v) {
    if (code.words[v].size() != k) {
      throw InvalidArgument("decode: word of vertex " + std::to_string(v + 1) + " has length " +
                            std::to_string(code.words[v].size()) + ", expected " + std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (code.words[v][j] == Symbol::Zero) xs[j].push_back(static_cast<Vertex>(v + 1));
      if (code.words[v][j] == Symbol::One) ys[j].push_back(static_cast<Vertex>(v + 1));
    }
  }
  OddCover cover;
  cover.n = static_cast<int>(code.words.size());
  for (std::size_t j = 0; j < k; ++j) cover.bicliques.emplace_back(std::move(xs[j]), std::move(ys[j]));
  return cover;
}

Gf2Matrix incidence_matrix(const CoverCode& code) {
  const auto k = static_cast<std::size_t>(code.k);
  Gf2Matrix m(code.words.size(), 2 * k);
  for (std::size_t v = 0; v < code.words.size(); ++v) {
    if (code.words[v].size() != k) throw InvalidArgument("incidence_matrix: word length differs from k");
    for (std::size_t j = 0; j < k; ++j) {
      if (code.words[v][j] == Symbol::Zero) m.set(v, 2 * j);
      if (code.words[v][j] == Symbol::One) m.set(v, 2 * j + 1);
    }
  }
  return m;
}

bool verify_by_incidence(const OddCover& cover, const Graph& g) {
  if (cover.n != g.order()) throw InvalidArgument("verify_by_incidence: ground-set mismatch");
  return symplectic_gram(incidence_matrix(encode(cover))) == g.adjacency();
}

std::pair<Biclique, Biclique> split_triclique(const Triclique& t) {
  VertexSet yz = t.y();
  yz.insert(yz.end(), t.z().begin(), t.z().end());
  return {Biclique(t.x(), std::move(yz)), Biclique(t.y(), t.z())};
}

OddCover restrict_cover(const OddCover& cover, VertexSet keep) {
  cover.validate();
  keep = normalised(std::move(keep));
  std::vector<Vertex> new_label(static_cast<std::size_t>(cover.n), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 1 || keep[i] > cover.n) throw InvalidArgument("restrict: kept vertex outside the ground set");
    new_label[static_cast<std::size_t>(keep[i] - 1)] = static_cast<Vertex>(i + 1);
  }
  OddCover out;
  out.n = static_cast<int>(keep.size());
  for (const Biclique& b : cover.bicliques) {
    VertexSet x, y;
    for (Vertex v : b.x()) {
      if (Vertex w = new_label[static_cast<std::size_t>(v - 1)]) x.push_back(w);
    }
    for (Vertex v : b.y()) {
      if (Vertex w = new_label[static_cast<std::size_t>(v - 1)]) y.push_back(w);
    }
    out.bicliques.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

OddCover drop_empty(OddCover cover) {
  std::erase_if(cover.bicliques, [](const Biclique& b) { return b.empty(); });
  return cover;
}

OddCover relabel(const OddCover& cover, const std::vector<Vertex>& new_label, int new_n) {
  cover.validate();
  if (new_label.size() != static_cast<std::size_t>(cover.n)) throw InvalidArgument("relabel: one label per vertex required");
  OddCover out;
  out.n = new_n;
  for (const Biclique& b : cover.bicliques) {
    VertexSet x, y;
    for (Vertex v : b.x()) x.push_back(new_label[static_cast<std::size_t>(v - 1)]);
    for (Vertex v : b.y()) y.push_back(new_label[static_cast<std::size_t>(v - 1)]);
    out.bicliques.emplace_back(std::move(x), std::move(y));
  }
  out.validate();
  return out;
}

OddCover extend_by_lemma(const OddCover& cover, const VertexSet& s, Vertex v) {
  cover.validate();
  if (v < 1 || v > cover.n) throw InvalidArgument("extend_by_lemma: vertex outside the ground set");
  std::vector<bool> in_s(static_cast<std::size_t>(cover.n) + 1, false);
  for (Vertex u : s) {
    if (u < 1 || u > cover.n) throw InvalidArgument("extend_by_lemma: S has a vertex outside the ground set");
    if (u == v) throw InvalidArgument("extend_by_lemma: S must not contain v");
    in_s[static_cast<std::size_t>(u)] = true;
  }
  OddCover out;
  out.n = cover.n;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const Biclique& b = cover.bicliques[i];
    if (contains(b.x(), v) || contains(b.y(), v)) {
      throw InvalidArgument("extend_by_lemma: v already appears in biclique " + std::to_string(i));
    }
    const bool odd_x = odd_meet(b.x(), in_s) != 0;
    const bool odd_y = odd_meet(b.y(), in_s) != 0;
    if (odd_x && odd_y) {
      throw ExtensionError("extend_by_lemma: both sides of biclique " + std::to_string(i) + " meet S in an odd number of vertices", i);
    }
    VertexSet x = b.x();
    VertexSet y = b.y();
    if (odd_x) x.push_back(v);
    if (odd_y) y.push_back(v);
    out.bicliques.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

}  // namespace oddcover
