#include "oddcover/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>

#include "oddcover/error.hpp"

namespace oddcover {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::uint64_t kMaxGraph6Order = 68719476735ULL;  // 2^36 - 1

std::size_t trim_end(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return end;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  const std::size_t end = trim_end(text);
  if (pos >= end) throw ParseError("graph6: empty input", pos);
  if (text[pos] == ':') throw ParseError("graph6: sparse6 input is not supported", pos);
  if (text[pos] == '&') throw ParseError("graph6: digraph6 input is not supported", pos);

  auto sixbits = [&](std::size_t at) -> std::uint64_t {
    if (at >= end) throw ParseError("graph6: truncated input", at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", at);
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (sixbits(pos) < 63) {
    n = sixbits(pos);
    pos += 1;
  } else if (pos + 1 < end && sixbits(pos + 1) == 63) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | sixbits(pos + 2 + i);
    if (n <= 258047) throw ParseError("graph6: non-canonical 8-byte order header", pos);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | sixbits(pos + 1 + i);
    if (n <= 62) throw ParseError("graph6: non-canonical 4-byte order header", pos);
    pos += 4;
  }
  if (n > kMaxGraph6Order || n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw ParseError("graph6: order too large", pos);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (end - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " + std::to_string(end - pos),
                     end - pos < bytes ? end : pos + bytes);
  }

  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      if ((sixbits(at) >> (5 - bit % 6)) & 1U) g.add_edge(i + 1, j + 1);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + bytes - 1;
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (sixbits(at) & pad_mask) throw ParseError("graph6: nonzero padding bits", at);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::optional<long long> to_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<Token> split_line(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long long> declared;
  std::vector<std::pair<Token, Token>> edges;
  bool first_content_line = true;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto tokens = split_line(text.substr(line_start, line_end - line_start), line_start);
    line_start = line_end + 1;
    if (tokens.empty()) continue;

    if (first_content_line && tokens[0].text == "n") {
      if (tokens.size() != 2) throw ParseError("edge list: header must be 'n <count>'", tokens[0].offset);
      declared = to_integer(tokens[1].text);
      if (!declared || *declared < 0) throw ParseError("edge list: invalid vertex count", tokens[1].offset);
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    if (tokens.size() != 2) {
      throw ParseError("edge list: expected two endpoints per line", tokens[tokens.size() > 2 ? 2 : 0].offset);
    }
    edges.emplace_back(tokens[0], tokens[1]);
  }

  long long n = declared.value_or(0);
  std::vector<std::pair<Vertex, Vertex>> parsed;
  for (const auto& [a, b] : edges) {
    const auto u = to_integer(a.text);
    if (!u) throw ParseError("edge list: endpoint is not an integer", a.offset);
    const auto v = to_integer(b.text);
    if (!v) throw ParseError("edge list: endpoint is not an integer", b.offset);
    if (*u < 1) throw ParseError("edge list: vertices are numbered from 1", a.offset);
    if (*v < 1) throw ParseError("edge list: vertices are numbered from 1", b.offset);
    if (*u == *v) throw ParseError("edge list: loop edges are not allowed", a.offset);
    if (declared) {
      if (*u > *declared) throw ParseError("edge list: endpoint exceeds declared vertex count", a.offset);
      if (*v > *declared) throw ParseError("edge list: endpoint exceeds declared vertex count", b.offset);
    } else {
      n = std::max({n, *u, *v});
    }
    if (n > std::numeric_limits<int>::max()) throw ParseError("edge list: vertex count too large", a.offset);
    parsed.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
  }
  return Graph::from_edges(static_cast<int>(n), parsed);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  std::size_t stop = start;
  while (stop < text.size() && !std::isspace(static_cast<unsigned char>(text[stop]))) ++stop;
  // A lone graph6 token on its own; anything else falls through to edge list.
  const std::string_view first = text.substr(start, stop - start);
  const bool single_token = text.find_first_not_of(" \t\r\n", stop) == std::string_view::npos;
  if (!first.empty() && single_token) {
    try {
      return parse_graph6(first);
    } catch (const ParseError&) {
      // fall through
    }
  }
  return parse_edge_list(text);
}

}  // namespace oddcover
