#pragma once

// Odd covers: collections of bicliques whose edge sets XOR to E(G).

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oddcover/error.hpp"
#include "oddcover/gf2.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// Two disjoint partite sets, stored sorted. Either side may be empty, in
// which case the biclique has no edges.
class Biclique {
 public:
  Biclique() = default;
  Biclique(VertexSet x, VertexSet y);

  const VertexSet& x() const noexcept { return x_; }
  const VertexSet& y() const noexcept { return y_; }
  bool empty() const noexcept { return x_.empty() || y_.empty(); }
  std::size_t edge_count() const noexcept { return x_.size() * y_.size(); }
  bool contains_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Biclique&, const Biclique&) = default;

 private:
  VertexSet x_;
  VertexSet y_;
};

class Triclique {
 public:
  Triclique(VertexSet x, VertexSet y, VertexSet z);

  const VertexSet& x() const noexcept { return x_; }
  const VertexSet& y() const noexcept { return y_; }
  const VertexSet& z() const noexcept { return z_; }

 private:
  VertexSet x_;
  VertexSet y_;
  VertexSet z_;
};

struct OddCover {
  int n = 0;
  std::vector<Biclique> bicliques;

  std::size_t size() const noexcept { return bicliques.size(); }
  // Throws InvalidArgument if a vertex falls outside 1..n.
  void validate() const;

  friend bool operator==(const OddCover&, const OddCover&) = default;
};

// XOR of the bicliques' adjacency matrices, n x n.
Gf2Matrix cover_adjacency(const OddCover& cover);

struct Mismatch {
  Vertex u;
  Vertex v;
  // Number of bicliques containing uv; its parity disagrees with A(G).
  std::size_t coverage;
};

struct VerifyReport {
  bool ok = false;
  std::vector<Mismatch> mismatches;  // at most the requested cap, ordered by (u, v)
  std::size_t mismatch_total = 0;
  std::size_t cardinality = 0;
  std::size_t rank_lower_bound = 0;  // ceil(r2(G) / 2)
};

inline constexpr std::size_t kDefaultMismatchCap = 100;

// Throws InvalidArgument when cover.n != g.order().
VerifyReport verify(const OddCover& cover, const Graph& g, std::size_t mismatch_cap = kDefaultMismatchCap);

// --- string encoding ------------------------------------------------------

enum class Symbol : std::uint8_t { Zero, One, Eps };
using CodeWord = std::vector<Symbol>;

// Coordinate j of vertex v is 0 if v in X_j, 1 if v in Y_j, e otherwise.
struct CoverCode {
  int k = 0;
  std::vector<CodeWord> words;  // words[v-1]

  friend bool operator==(const CoverCode&, const CoverCode&) = default;
};

std::string to_string(const CodeWord& w);  // "01e..."
CodeWord parse_code_word(std::string_view text);

CoverCode encode(const OddCover& cover);
// Throws InvalidArgument when words differ in length from k.
OddCover decode(const CoverCode& code);

// n x 2k; symbol 0,1,e becomes the pair (1,0),(0,1),(0,0).
Gf2Matrix incidence_matrix(const CoverCode& code);

// Second verification route: M (H2 + ... + H2) M^T == A(g).
bool verify_by_incidence(const OddCover& cover, const Graph& g);

// --- surgery --------------------------------------------------------------

// (X, Y u Z) and (Y, Z); their XOR is the triclique's edge set.
std::pair<Biclique, Biclique> split_triclique(const Triclique& t);

// Drops vertices outside `keep` and renumbers the rest 1..|keep| in
// ascending order. Empty bicliques are retained.
OddCover restrict_cover(const OddCover& cover, VertexSet keep);

// Removes bicliques with an empty side.
OddCover drop_empty(OddCover cover);

// Renames vertex v to new_label[v-1] on a ground set of size new_n.
OddCover relabel(const OddCover& cover, const std::vector<Vertex>& new_label, int new_n);

class ExtensionError : public InvalidArgument {
 public:
  ExtensionError(const std::string& what, std::size_t biclique_index)
      : InvalidArgument(what), index_(biclique_index) {}
  std::size_t biclique_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// `cover` is an odd cover of G - v on the full ground set 1..n (v appears in
// no partite set) and the neighbourhoods of S XOR to N(v). Adds v to every
// partite set meeting S in an odd number of vertices. Throws ExtensionError
// naming the first biclique whose two sides both meet S oddly.
OddCover extend_by_lemma(const OddCover& cover, const VertexSet& s, Vertex v);

}  // namespace oddcover
