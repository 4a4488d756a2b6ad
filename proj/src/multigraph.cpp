#include "labcount/multigraph.hpp"

#include "labcount/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace labcount {

void validate_subset(const Multigraph& g, const VertexSubset& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n)
      throw usage_error("vertex index out of range: " + std::to_string(s[i]));
    if (i > 0 && s[i] <= s[i - 1])
      throw usage_error("vertex subset must be strictly increasing");
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool is_integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

long long parse_int_token(const std::string& tok, int line_no, const char* what) {
  if (!is_integer_token(tok))
    throw input_error("line " + std::to_string(line_no) + ": expected " + what +
                      ", got non-integer token '" + tok + "'");
  return std::stoll(tok);
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int significant = 0;  // 1-based index among non-comment lines
  Multigraph g;
  bool have_header = false, have_vertices = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    ++significant;

    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);

    if (significant == 1) {
      if (tok.size() != 2 || tok[0] != "graph" ||
          (tok[1] != "directed" && tok[1] != "undirected"))
        throw input_error("line " + std::to_string(line_no) +
                          ": malformed header, expected 'graph directed|undirected'");
      g.directed = (tok[1] == "directed");
      have_header = true;
    } else if (significant == 2) {
      if (tok.size() != 2 || tok[0] != "vertices")
        throw input_error("line " + std::to_string(line_no) +
                          ": malformed header, expected 'vertices <n>'");
      long long n = parse_int_token(tok[1], line_no, "vertex count");
      if (n < 0) throw input_error("line " + std::to_string(line_no) + ": negative vertex count");
      g.n = static_cast<int>(n);
      have_vertices = true;
    } else {
      if (tok.size() != 2)
        throw input_error("line " + std::to_string(line_no) +
                          ": expected '<u> <v>' edge line");
      long long u = parse_int_token(tok[0], line_no, "endpoint");
      long long v = parse_int_token(tok[1], line_no, "endpoint");
      if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw input_error("line " + std::to_string(line_no) + ": endpoint out of range [0, " +
                          std::to_string(g.n) + ")");
      g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (!have_header || !have_vertices)
    throw input_error("incomplete graph file: missing header lines");
  return g;
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "graph " << (g.directed ? "directed" : "undirected") << "\n";
  out << "vertices " << g.n << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

bool loopless_is_bipartite(const Multigraph& g) {
  if (g.directed) throw usage_error("loopless_is_bipartite requires an undirected graph");
  std::vector<int> color(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges)
    if (u != v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

ComponentReport component_analysis(const Multigraph& g) {
  UnionFind uf(g.n);
  for (auto [u, v] : g.edges) uf.unite(u, v);
  std::vector<std::vector<int>> comp_of_root(g.n);
  for (int v = 0; v < g.n; ++v) comp_of_root[uf.find(v)].push_back(v);

  ComponentReport rep;
  for (int r = 0; r < g.n; ++r)
    if (!comp_of_root[r].empty()) rep.components.push_back(comp_of_root[r]);
  std::sort(rep.components.begin(), rep.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (const auto& comp : rep.components) {
    if (comp.size() != 2) continue;
    int a = comp[0], b = comp[1];
    int edges_inside = 0;
    bool loop = false;
    for (auto [u, v] : g.edges) {
      if ((u == a || u == b) && (v == a || v == b)) {
        ++edges_inside;
        if (u == v) loop = true;
      }
    }
    if (!loop) {
      ++rep.sum_tied_components;
      if (edges_inside == 1) ++rep.k2_components;
    }
  }
  return rep;
}

Multigraph magic_quotient(const Multigraph& g, const VertexSubset& s) {
  if (g.directed) throw usage_error("magic_quotient requires an undirected graph");
  if (s.empty()) throw usage_error("magic_quotient requires a nonempty vertex subset");
  validate_subset(g, s);
  std::vector<int> newindex(g.n, -1);
  for (std::size_t i = 0; i < s.size(); ++i) newindex[s[i]] = static_cast<int>(i);

  Multigraph q;
  q.n = static_cast<int>(s.size());
  q.directed = false;
  for (auto [u, v] : g.edges) {
    bool iu = newindex[u] >= 0, iv = newindex[v] >= 0;
    if (iu && iv)
      q.edges.emplace_back(newindex[u], newindex[v]);
    else if (iu)
      q.edges.emplace_back(newindex[u], newindex[u]);
    else if (iv)
      q.edges.emplace_back(newindex[v], newindex[v]);
    // neither endpoint in s: dropped
  }
  return q;
}

ConnectedGraphStream::ConnectedGraphStream(int n, bool include_multi,
                                           std::uint64_t start_index)
    : n_(n), include_multi_(include_multi) {
  if (n < 1 || n > 7)
    throw guardrail_error("connected graph generation supports 1 <= n <= 7, got " +
                          std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) universe_.emplace_back(u, v);
  mask_end_ = std::uint64_t{1} << universe_.size();
  while (index_ < start_index)
    if (!next()) break;
  index_ = start_index;
}

std::optional<Multigraph> ConnectedGraphStream::next() {
  // Pending doubled-edge variants of the current simple graph come first.
  if (include_multi_ && current_ && multi_pos_ >= 0) {
    if (multi_pos_ < current_->edge_count()) {
      Multigraph m = *current_;
      m.edges.push_back(m.edges[multi_pos_]);
      ++multi_pos_;
      ++index_;
      return m;
    }
    multi_pos_ = -1;
    current_.reset();
  }
  const int m = static_cast<int>(universe_.size());
  while (mask_ < mask_end_) {
    std::uint64_t mask = mask_++;
    Multigraph g;
    g.n = n_;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << (m - 1 - i))) g.edges.push_back(universe_[i]);
    UnionFind uf(n_);
    for (auto [u, v] : g.edges) uf.unite(u, v);
    int roots = 0;
    for (int v = 0; v < n_; ++v)
      if (uf.find(v) == v) ++roots;
    if (roots != 1) continue;
    if (include_multi_ && g.edge_count() > 0) {
      current_ = g;
      multi_pos_ = 0;
    }
    ++index_;
    return g;
  }
  return std::nullopt;
}

std::vector<Multigraph> connected_graphs(int n, bool include_multi) {
  ConnectedGraphStream stream(n, include_multi);
  std::vector<Multigraph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace labcount
