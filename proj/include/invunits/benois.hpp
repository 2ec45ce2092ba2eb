#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "invunits/pieces.hpp"
#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace invunits {

// Fixed-size set of automaton states.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t n) : _bits((n + 63) / 64, 0) {}

  bool contains(std::size_t i) const noexcept {
    return (_bits[i / 64] >> (i % 64)) & 1u;
  }
  void insert(std::size_t i) noexcept { _bits[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool empty() const noexcept;
  StateSet& operator|=(StateSet const& o) noexcept;
  bool operator==(StateSet const&) const = default;

 private:
  std::vector<std::uint64_t> _bits;
};

// Sigma: all prefixes of every r_i and r_i^-1, including the empty word.
struct PrefixGenerators {
  std::set<Word> sigma;
  std::vector<Word> spine;  // distinct words among r_1, r_1^-1, r_2, ...
};

PrefixGenerators build_sigma(std::span<Word const> relators);
PrefixGenerators build_sigma(InverseMonoidPresentation const& p);

struct LetterEdge {
  std::size_t from;
  Letter label;
  std::size_t to;
};

// One path from the root per spine word, with an epsilon edge from every
// path state back to the root; state 0 is both initial and final.
// saturate() closes the epsilon relation under x x^-1 cancellation.
class SaturatedAutomaton {
 public:
  explicit SaturatedAutomaton(PrefixGenerators const& sigma);

  std::size_t state_count() const noexcept { return _state_count; }
  std::vector<LetterEdge> const& letter_edges() const noexcept { return _edges; }
  bool saturated() const noexcept { return _saturated; }

  // Reflexive and transitive epsilon reachability.
  bool epsilon_reachable(std::size_t p, std::size_t q) const {
    return _closure[p].contains(q);
  }
  std::vector<std::pair<std::size_t, std::size_t>> epsilon_edges() const;

  void saturate();

  // Runs w as given, without reducing it first.
  bool accepts(Word const& w) const;

  StateSet start() const { return _closure[0]; }
  StateSet step(StateSet const& s, Letter x) const;
  bool accepting(StateSet const& s) const { return s.contains(0); }

 private:
  void add_epsilon(std::size_t p, std::size_t q);
  std::size_t code(Letter x) const noexcept {
    return 2 * static_cast<std::size_t>(x.gen) + (x.sign < 0 ? 1 : 0);
  }

  std::size_t _state_count = 1;
  std::size_t _letter_count = 0;
  std::vector<LetterEdge> _edges;
  std::vector<std::vector<std::vector<std::size_t>>> _out;  // [state][letter]
  std::vector<StateSet> _closure;
  bool _saturated = false;
};

SaturatedAutomaton build_saturated_automaton(PrefixGenerators const& sigma);

// red(u) belongs to red(Sigma*).
bool member_V(SaturatedAutomaton const& aut, Word const& u);

PieceDecomposition benois_decomposition(Word const& relator,
                                        SaturatedAutomaton const& aut);
// Monoid presentations are analysed in the inverse signature.
std::vector<PieceDecomposition> benois_decompositions(
    InverseMonoidPresentation const& p);

// W together with its inverses is overlap free: a nonempty prefix of u is a
// suffix of v only when u = v and the prefix is u itself.
bool i_overlap_free(std::span<Word const> words);

}  // namespace invunits
