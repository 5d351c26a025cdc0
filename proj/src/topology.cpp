#include "diaglab/topology.hpp"

#include <algorithm>
#include <string>

namespace diaglab {

void TopologySpec::validate() const {
  switch (family) {
    case Family::Hypercube:
      if (n < 1) throw InvalidInput("hypercube requires n >= 1");
      return;
    case Family::NkStar:
      if (n < 2 || k < 1 || k >= n) throw InvalidInput("nk-star requires n >= 2 and 1 <= k < n");
      return;
    case Family::Arrangement:
      if (n < 2 || k < 1 || k >= n)
        throw InvalidInput("arrangement requires n >= 2 and 1 <= k < n");
      return;
    case Family::Custom:
      throw InvalidInput("cannot generate a custom topology");
  }
}

Graph make_topology(const TopologySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Hypercube: return hypercube(spec.n);
    case Family::NkStar: return nk_star(spec.n, spec.k);
    default: return arrangement(spec.n, spec.k);
  }
}

Graph hypercube(int n) {
  if (n < 1) throw InvalidInput("hypercube requires n >= 1");
  if (n > 20) throw InvalidInput("hypercube limited to n <= 20");
  const int count = 1 << n;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) {
    std::string s(static_cast<std::size_t>(n), '0');
    // label position 0 is the most significant bit, so label order is index order
    for (int i = 0; i < n; ++i)
      if (v >> (n - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    labels.push_back(std::move(s));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(count / 2) * static_cast<std::size_t>(n));
  for (int v = 0; v < count; ++v)
    for (int b = 0; b < n; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(std::move(labels), edges, {Family::Hypercube, n, 0, true});
}

std::string permutation_label(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

std::vector<int> parse_permutation_label(const std::string& label) {
  if (label.size() < 3 || label.front() != '[' || label.back() != ']')
    throw InvalidInput("not a permutation label: " + label);
  std::vector<int> out;
  int cur = 0;
  bool have = false;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    char c = label[i];
    if (c == ',') {
      if (!have) throw InvalidInput("not a permutation label: " + label);
      out.push_back(cur);
      cur = 0;
      have = false;
    } else if (c >= '0' && c <= '9') {
      cur = cur * 10 + (c - '0');
      have = true;
    } else {
      throw InvalidInput("not a permutation label: " + label);
    }
  }
  if (!have) throw InvalidInput("not a permutation label: " + label);
  out.push_back(cur);
  return out;
}

namespace {

/// All k-permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> k_permutations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = 1;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(s)] = 0;
    }
  };
  rec(rec);
  return out;
}

struct PermIndex {
  std::map<std::vector<int>, int> index;
  int of(const std::vector<int>& p) const { return index.at(p); }
};

PermIndex index_perms(const std::vector<std::vector<int>>& perms) {
  PermIndex pi;
  for (std::size_t i = 0; i < perms.size(); ++i) pi.index[perms[i]] = static_cast<int>(i);
  return pi;
}

}  // namespace

Graph nk_star(int n, int k) {
  TopologySpec{Family::NkStar, n, k}.validate();
  auto perms = k_permutations(n, k);
  auto pi = index_perms(perms);
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(permutation_label(p));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t vi = 0; vi < perms.size(); ++vi) {
    const auto& p = perms[vi];
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    for (int s : p) used[static_cast<std::size_t>(s)] = 1;
    // i-edges: swap positions 1 and i
    for (int i = 1; i < k; ++i) {
      auto q = p;
      std::swap(q[0], q[static_cast<std::size_t>(i)]);
      int wi = pi.of(q);
      if (static_cast<int>(vi) < wi) edges.emplace_back(static_cast<int>(vi), wi);
    }
    // 1-edges: replace the first symbol by an unused one
    for (int e = 1; e <= n; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      auto q = p;
      q[0] = e;
      int wi = pi.of(q);
      if (static_cast<int>(vi) < wi) edges.emplace_back(static_cast<int>(vi), wi);
    }
  }
  return Graph(std::move(labels), edges, {Family::NkStar, n, k, true});
}

Graph arrangement(int n, int k) {
  TopologySpec{Family::Arrangement, n, k}.validate();
  auto perms = k_permutations(n, k);
  auto pi = index_perms(perms);
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(permutation_label(p));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t vi = 0; vi < perms.size(); ++vi) {
    const auto& p = perms[vi];
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    for (int s : p) used[static_cast<std::size_t>(s)] = 1;
    for (int pos = 0; pos < k; ++pos) {
      for (int e = 1; e <= n; ++e) {
        if (used[static_cast<std::size_t>(e)]) continue;
        auto q = p;
        q[static_cast<std::size_t>(pos)] = e;
        int wi = pi.of(q);
        if (static_cast<int>(vi) < wi) edges.emplace_back(static_cast<int>(vi), wi);
      }
    }
  }
  return Graph(std::move(labels), edges, {Family::Arrangement, n, k, true});
}

std::map<int, VertexSet> decompose_by_last_symbol(const Graph& g) {
  const auto& info = g.info();
  if (info.family != Family::NkStar && info.family != Family::Arrangement)
    throw InvalidInput("decompose_by_last_symbol requires an nk-star or arrangement graph");
  if (info.k < 2)
    throw InvalidInput("decompose_by_last_symbol requires k >= 2");
  std::map<int, VertexSet> out;
  for (int i = 1; i <= info.n; ++i) out.emplace(i, VertexSet(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto p = parse_permutation_label(g.label(v));
    out.at(p.back()).add(v);
  }
  return out;
}

std::pair<VertexSet, VertexSet> hypercube_bit_split(const Graph& g, int bit) {
  const auto& info = g.info();
  if (info.family != Family::Hypercube)
    throw InvalidInput("hypercube_bit_split requires a hypercube");
  if (bit < 0 || bit >= info.n) throw InvalidInput("bit position out of range");
  VertexSet zeros(g.vertex_count()), ones(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.label(v)[static_cast<std::size_t>(bit)] == '0')
      zeros.add(v);
    else
      ones.add(v);
  }
  return {zeros, ones};
}

}  // namespace diaglab
