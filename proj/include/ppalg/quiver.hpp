#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ppalg {

struct MalformedQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonDynkinQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  int id;
  int src;  // vertices are 1-based
  int tgt;
};

enum class DynkinType { A, D, E };

inline char type_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    default: return 'E';
  }
}

/// An oriented simply laced Dynkin diagram. Validated on construction:
/// connected tree whose shape is A_n (n>=1), D_n (n>=4) or E_6/E_7/E_8.
class DynkinQuiver {
 public:
  int n() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  DynkinType type() const { return type_; }
  std::string type_tag() const {
    return std::string(1, type_letter(type_)) + std::to_string(n_);
  }

  /// Accepts a type code ("A3", "D4", "E6") with the library's default
  /// orientation, or a JSON edge-list document
  /// {"vertices": n, "arrows": [[s,e],...]}.
  static DynkinQuiver parse(const std::string& spec) {
    std::string s = trim(spec);
    if (s.empty()) throw MalformedQuiver("empty quiver spec");
    if (s[0] == '{') return from_edge_list_text(s);
    return from_code(s);
  }

  static DynkinQuiver from_code(const std::string& code) {
    std::string s = trim(code);
    if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E'))
      throw MalformedQuiver("unrecognized type code: " + code);
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw MalformedQuiver("unrecognized type code: " + code);
      rank = rank * 10 + (s[i] - '0');
    }
    std::vector<std::pair<int, int>> edges;
    if (s[0] == 'A') {
      if (rank < 1) throw NonDynkinQuiver("A_n requires n >= 1");
      for (int i = 1; i < rank; ++i) edges.push_back({i, i + 1});
    } else if (s[0] == 'D') {
      if (rank < 4) throw NonDynkinQuiver("D_n requires n >= 4");
      // fork vertices n-1, n point into n-2; spine n-2 -> ... -> 1
      edges.push_back({rank - 1, rank - 2});
      edges.push_back({rank, rank - 2});
      for (int i = rank - 2; i > 1; --i) edges.push_back({i, i - 1});
    } else {
      if (rank < 6 || rank > 8) throw NonDynkinQuiver("E_n requires n in {6,7,8}");
      // Bourbaki numbering: chain 1-3-4-5-...-n, vertex 2 attached to 4;
      // all arrows point toward the branch vertex 4.
      edges.push_back({1, 3});
      edges.push_back({3, 4});
      edges.push_back({2, 4});
      for (int i = rank; i > 5; --i) edges.push_back({i, i - 1});
      edges.push_back({5, 4});
    }
    return DynkinQuiver(rank, edges);
  }

  static DynkinQuiver from_edge_list_text(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedQuiver(std::string("bad edge-list JSON: ") + e.what());
    }
    return from_edge_list(j);
  }

  static DynkinQuiver from_edge_list(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
      throw MalformedQuiver("edge list needs \"vertices\" and \"arrows\"");
    if (!j["vertices"].is_number_integer())
      throw MalformedQuiver("\"vertices\" must be an integer");
    int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["arrows"]) {
      if (!e.is_array() || e.size() != 2)
        throw MalformedQuiver("each arrow must be a pair [s,e]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return DynkinQuiver(n, edges);
  }

  nlohmann::json to_edge_list() const {
    nlohmann::json j;
    j["vertices"] = n_;
    j["arrows"] = nlohmann::json::array();
    for (const Arrow& a : arrows_) j["arrows"].push_back({a.src, a.tgt});
    return j;
  }

  /// Symmetric adjacency-count matrix m_ij (0/1 on Dynkin diagrams).
  std::vector<std::vector<int>> m_matrix() const {
    std::vector<std::vector<int>> m(n_, std::vector<int>(n_, 0));
    for (const Arrow& a : arrows_) {
      m[a.src - 1][a.tgt - 1] += 1;
      m[a.tgt - 1][a.src - 1] += 1;
    }
    return m;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows_) {
      if (a.src == v) out.push_back(a.tgt);
      if (a.tgt == v) out.push_back(a.src);
    }
    return out;
  }

 private:
  DynkinQuiver(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw MalformedQuiver("vertex count must be positive");
    if (static_cast<int>(edges.size()) != n - 1)
      throw NonDynkinQuiver("a Dynkin diagram on n vertices has n-1 edges");
    std::vector<std::vector<int>> adj(n + 1);
    std::vector<std::vector<int>> seen(n + 1, std::vector<int>(n + 1, 0));
    int id = 0;
    for (auto [s, e] : edges) {
      if (s < 1 || s > n || e < 1 || e > n)
        throw MalformedQuiver("arrow endpoint out of range");
      if (s == e) throw NonDynkinQuiver("loops are not allowed");
      if (seen[s][e] || seen[e][s])
        throw NonDynkinQuiver("multiple edges are not allowed");
      seen[s][e] = 1;
      adj[s].push_back(e);
      adj[e].push_back(s);
      arrows_.push_back({id++, s, e});
    }
    // connectivity (tree by edge count once connected)
    std::vector<int> vis(n + 1, 0), stack = {1};
    vis[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) throw NonDynkinQuiver("underlying graph is not connected");
    type_ = classify(n, adj);
  }

  static DynkinType classify(int n, const std::vector<std::vector<int>>& adj) {
    int branch = 0, branch_vertex = -1;
    for (int v = 1; v <= n; ++v) {
      size_t d = adj[v].size();
      if (d > 3) throw NonDynkinQuiver("vertex of degree > 3");
      if (d == 3) {
        ++branch;
        branch_vertex = v;
      }
    }
    if (branch == 0) return DynkinType::A;
    if (branch > 1) throw NonDynkinQuiver("more than one branch vertex");
    // arm lengths from the branch vertex
    std::vector<int> arms;
    for (int start : adj[branch_vertex]) {
      int len = 1, prev = branch_vertex, cur = start;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) throw NonDynkinQuiver("shape is not A, D or E");
    if (arms[1] == 1) {
      if (n < 4) throw NonDynkinQuiver("D_n requires n >= 4");
      return DynkinType::D;
    }
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType::E;
    throw NonDynkinQuiver("shape is not A, D or E");
  }

  static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  int n_;
  std::vector<Arrow> arrows_;
  DynkinType type_;
};

/// The double quiver: every arrow a of Q plus a reversed arrow a*.
/// Arrow ids 0..m-1 are the originals, m..2m-1 the starred ones.
class DoubleQuiver {
 public:
  explicit DoubleQuiver(const DynkinQuiver& q) : base_(q) {
    int m = static_cast<int>(q.arrows().size());
    for (const Arrow& a : q.arrows()) arrows_.push_back({a.id, a.src, a.tgt});
    for (const Arrow& a : q.arrows())
      arrows_.push_back({a.id + m, a.tgt, a.src});
    star_.resize(2 * m);
    for (int i = 0; i < m; ++i) {
      star_[i] = i + m;
      star_[i + m] = i;
    }
  }

  const DynkinQuiver& base() const { return base_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int star(int arrow_id) const { return star_[arrow_id]; }
  bool is_starred(int arrow_id) const {
    return arrow_id >= static_cast<int>(star_.size()) / 2;
  }
  int n() const { return base_.n(); }

  /// Same doubled arrow set with all directions reversed (for the
  /// opposite algebra).
  DoubleQuiver reversed() const {
    DoubleQuiver r = *this;
    for (Arrow& a : r.arrows_) std::swap(a.src, a.tgt);
    return r;
  }

  std::string arrow_name(int id) const {
    int m = static_cast<int>(star_.size()) / 2;
    std::string base = "a" + std::to_string(id % m);
    return is_starred(id) ? base + "*" : base;
  }

 private:
  DynkinQuiver base_;
  std::vector<Arrow> arrows_;
  std::vector<int> star_;
};

}  // namespace ppalg
