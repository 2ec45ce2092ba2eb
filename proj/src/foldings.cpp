#include "invunits/foldings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "invunits/errors.hpp"

namespace invunits {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }
  // The smaller representative survives, so the basepoint stays 0.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      _parent[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> _parent;
};

std::set<GraphEdge> fold_edges(std::size_t n, std::vector<GraphEdge> edges) {
  UnionFind uf(n);
  while (true) {
    std::set<GraphEdge> canon;
    for (auto const& e : edges) {
      canon.insert({uf.find(e.source), uf.find(e.target), e.label});
    }
    std::map<std::pair<std::size_t, Generator>, std::size_t> out, in;
    bool merged = false;
    for (auto const& e : canon) {
      auto [o, fresh_o] = out.emplace(std::pair{e.source, e.label}, e.target);
      if (!fresh_o && o->second != e.target) {
        uf.unite(o->second, e.target);
        merged = true;
        break;
      }
      auto [i, fresh_i] = in.emplace(std::pair{e.target, e.label}, e.source);
      if (!fresh_i && i->second != e.source) {
        uf.unite(i->second, e.source);
        merged = true;
        break;
      }
    }
    if (!merged) {
      return canon;
    }
    edges.assign(canon.begin(), canon.end());
  }
}

// Repeatedly drops non-basepoint vertices of degree one.
void prune(std::set<GraphEdge>& edges) {
  while (true) {
    std::map<std::size_t, std::size_t> degree;
    for (auto const& e : edges) {
      ++degree[e.source];
      ++degree[e.target];
    }
    auto leaf = std::find_if(degree.begin(), degree.end(), [](auto const& d) {
      return d.first != 0 && d.second == 1;
    });
    if (leaf == degree.end()) {
      return;
    }
    std::erase_if(edges, [v = leaf->first](GraphEdge const& e) {
      return e.source == v || e.target == v;
    });
  }
}

}  // namespace

std::optional<std::size_t> SubgroupGraph::edge_from(std::size_t v,
                                                    Letter x) const {
  auto const& m = x.sign > 0 ? _outgoing.at(v) : _incoming.at(v);
  auto it = m.find(x.gen);
  if (it == m.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t SubgroupGraph::other_end(std::size_t edge, Letter x) const {
  auto const& e = _edges.at(edge);
  return x.sign > 0 ? e.target : e.source;
}

Word SubgroupGraph::tree_path(std::size_t v) const {
  std::vector<Letter> rev;
  while (v != 0) {
    auto const& e = _edges[*_parent_edge.at(v)];
    if (e.target == v) {
      rev.push_back(pos(e.label));
      v = e.source;
    } else {
      rev.push_back(neg(e.label));
      v = e.target;
    }
  }
  return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
}

SubgroupGraph fold_graph(std::size_t vertex_count, std::vector<GraphEdge> edges) {
  vertex_count = std::max<std::size_t>(vertex_count, 1);
  for (auto const& e : edges) {
    if (e.source >= vertex_count || e.target >= vertex_count) {
      throw DomainError("edge endpoint outside the graph");
    }
  }
  auto folded = fold_edges(vertex_count, std::move(edges));
  prune(folded);

  std::map<std::size_t, std::map<Generator, std::size_t>> out, in;
  for (auto const& e : folded) {
    out[e.source][e.label] = e.target;
    in[e.target][e.label] = e.source;
  }

  std::map<std::size_t, std::size_t> number{{0, 0}};
  std::vector<std::optional<GraphEdge>> discovered{std::nullopt};  // old ids
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    std::set<Generator> labels;
    for (auto const& [x, t] : out[v]) labels.insert(x);
    for (auto const& [x, s] : in[v]) labels.insert(x);
    for (Generator x : labels) {
      for (int dir : {+1, -1}) {
        auto const& m = dir > 0 ? out[v] : in[v];
        auto it = m.find(x);
        if (it == m.end() || number.contains(it->second)) {
          continue;
        }
        number.emplace(it->second, number.size());
        discovered.push_back(dir > 0 ? GraphEdge{v, it->second, x}
                                     : GraphEdge{it->second, v, x});
        queue.push_back(it->second);
      }
    }
  }

  SubgroupGraph g;
  g._vertex_count = number.size();
  std::set<GraphEdge> tree_old;
  for (auto const& d : discovered) {
    if (d) tree_old.insert(*d);
  }
  std::vector<std::pair<GraphEdge, bool>> renamed;
  for (auto const& e : folded) {
    if (!number.contains(e.source) || !number.contains(e.target)) {
      continue;
    }
    renamed.push_back({{number[e.source], number[e.target], e.label},
                       tree_old.contains(e)});
  }
  std::sort(renamed.begin(), renamed.end(), [](auto const& a, auto const& b) {
    return std::tie(a.first.label, a.first.source, a.first.target) <
           std::tie(b.first.label, b.first.source, b.first.target);
  });
  g._outgoing.resize(g._vertex_count);
  g._incoming.resize(g._vertex_count);
  g._parent_edge.assign(g._vertex_count, std::nullopt);
  for (auto const& [e, is_tree] : renamed) {
    std::size_t idx = g._edges.size();
    g._edges.push_back(e);
    g._outgoing[e.source][e.label] = idx;
    g._incoming[e.target][e.label] = idx;
    if (is_tree) {
      g._tree.push_back(idx);
      std::size_t child = std::max(e.source, e.target);
      // a tree edge joins a vertex to the one that discovered it
      g._parent_edge[child] = idx;
      g._basis_index.push_back(std::nullopt);
    } else {
      g._basis_index.push_back(g._basis.size());
      g._basis.push_back(idx);
    }
  }
  return g;
}

SubgroupGraph fold(std::span<Word const> generators) {
  std::vector<GraphEdge> edges;
  std::size_t n = 1;
  for (auto const& raw : generators) {
    Word w = free_reduce(raw);
    if (w.empty()) {
      throw DomainError("subgroup generator reduces to the empty word");
    }
    std::size_t prev = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::size_t next = k + 1 == w.size() ? 0 : n++;
      Letter x = w[k];
      if (x.sign > 0) {
        edges.push_back({prev, next, x.gen});
      } else {
        edges.push_back({next, prev, x.gen});
      }
      prev = next;
    }
  }
  return fold_graph(n, std::move(edges));
}

std::vector<Word> basis(SubgroupGraph const& g) {
  std::vector<Word> out;
  for (std::size_t idx : g.basis_edges()) {
    auto const& e = g.edges()[idx];
    out.push_back(free_reduce(g.tree_path(e.source) * Word{pos(e.label)} *
                              invert(g.tree_path(e.target))));
  }
  return out;
}

std::optional<Word> express(SubgroupGraph const& g, Word const& w) {
  Word out;
  std::size_t v = 0;
  for (Letter x : free_reduce(w)) {
    auto e = g.edge_from(v, x);
    if (!e) {
      return std::nullopt;
    }
    if (auto k = g.basis_index(*e)) {
      out.push_back({static_cast<Generator>(*k), x.sign});
    }
    v = g.other_end(*e, x);
  }
  if (v != 0) {
    return std::nullopt;
  }
  return out;
}

bool contains(SubgroupGraph const& g, Word const& w) {
  return express(g, w).has_value();
}

}  // namespace invunits
