#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "invunits/words.hpp"

namespace invunits {

struct GraphEdge {
  std::size_t source;
  std::size_t target;
  Generator label;

  auto operator<=>(GraphEdge const&) const = default;
};

// A folded, core, basepoint-connected labelled graph with vertex 0 as
// basepoint. Vertices are numbered breadth first from the basepoint, edges
// explored by (label, outgoing before incoming); the breadth-first tree is
// the spanning tree and the remaining edges, ordered by (label, source,
// target), index the free basis.
class SubgroupGraph {
 public:
  std::size_t vertex_count() const noexcept { return _vertex_count; }
  std::vector<GraphEdge> const& edges() const noexcept { return _edges; }
  std::vector<std::size_t> const& tree_edges() const noexcept { return _tree; }
  std::vector<std::size_t> const& basis_edges() const noexcept { return _basis; }
  std::size_t rank() const noexcept { return _basis.size(); }

  // Edge index leaving v with letter x (an x^-1 step crosses an edge
  // backwards).
  std::optional<std::size_t> edge_from(std::size_t v, Letter x) const;
  std::size_t other_end(std::size_t edge, Letter x) const;

  // Reduced label of the tree path from the basepoint to v.
  Word tree_path(std::size_t v) const;

 private:
  friend SubgroupGraph fold_graph(std::size_t, std::vector<GraphEdge>);

  std::size_t _vertex_count = 1;
  std::vector<GraphEdge> _edges;
  std::vector<std::size_t> _tree;
  std::vector<std::size_t> _basis;
  std::vector<std::optional<std::size_t>> _parent_edge;
  std::vector<std::map<Generator, std::size_t>> _outgoing;
  std::vector<std::map<Generator, std::size_t>> _incoming;
  std::vector<std::optional<std::size_t>> _basis_index;  // per edge

 public:
  std::optional<std::size_t> basis_index(std::size_t edge) const {
    return _basis_index.at(edge);
  }
};

// Folds an arbitrary labelled graph (basepoint 0) to its core.
SubgroupGraph fold_graph(std::size_t vertex_count, std::vector<GraphEdge> edges);

// Wedge of one loop per freely reduced generator, folded. Throws
// DomainError if some generator reduces to the empty word.
SubgroupGraph fold(std::span<Word const> generators);

// tree_path(u) x tree_path(v)^-1 for each basis edge u -x-> v.
std::vector<Word> basis(SubgroupGraph const& g);

// w as a word over the basis (generator k names basis word k), or nullopt
// when w is not in the subgroup.
std::optional<Word> express(SubgroupGraph const& g, Word const& w);
bool contains(SubgroupGraph const& g, Word const& w);

}  // namespace invunits
