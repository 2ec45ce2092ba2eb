#pragma once

// Independent brute-force reference implementations used by the tests.
// None of them call the library routine they are used to check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace oracle {

using invunits::Alphabet;
using invunits::Generator;
using invunits::Letter;
using invunits::Word;

// Uniform random word over the doubled alphabet of `gens` generators.
Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t len);

// Random inverse presentation: 1..max_gens generators a, b, c, ...,
// 1..max_rels relators of length 1..max_len with mixed signs.
invunits::InverseMonoidPresentation random_presentation(
    std::mt19937_64& rng, std::size_t max_gens, std::size_t max_rels,
    std::size_t max_len);

Alphabet letters(std::size_t n);  // a, b, c, ...

// Deletes a random cancelling pair until none is left.
Word reduce_randomly(Word w, std::mt19937_64& rng);

// Every word reachable from w by deleting adjacent x x^-1 pairs, w included.
std::set<Word> descendants(Word const& w);

// All words of length exactly n over the doubled alphabet.
std::vector<Word> all_words(std::size_t gens, std::size_t n);

// Sigma by direct enumeration.
std::set<Word> sigma_of(std::vector<Word> const& relators);

// Membership in the closure of Sigma* under x x^-1 deletion, decided by
// inserting explicitly enumerated cancelling words of length at most
// 2 * half into the gaps of the query word and parsing the result as a
// concatenation of Sigma elements. With Bound::nesting the cancelling words
// are instead explored as a pushdown search of stack depth at most `half`,
// which reaches arbitrarily long words of shallow nesting.
class ClosureOracle {
 public:
  enum class Bound { length, nesting };
  ClosureOracle(std::vector<Word> const& relators, std::size_t gens,
                std::size_t half, Bound bound = Bound::length);

  using States = std::uint64_t;  // bit per Sigma element, at most 64
  States start() const;
  States step(States s, Letter x) const;
  bool accepts(Word const& w) const;
  static bool alive(States s);

 private:
  States closure(States s) const;

  std::size_t _gens;
  std::vector<Word> _nodes;                   // Sigma elements
  std::map<Word, std::size_t> _index;
  std::vector<std::vector<std::size_t>> _child;  // [node][letter code], npos if none
  std::vector<States> _reach;                    // closed epsilon relation
};

// (free rank, order of the torsion part) of the abelianisation, from the
// exponent-sum matrix.
std::pair<std::size_t, std::uint64_t> abelian_invariants(
    invunits::GroupPresentation const& p);

// Reduced products of at most k generators or their inverses.
std::set<Word> subgroup_products(std::vector<Word> const& gens, std::size_t k);

// Deletes b b^-1 factors (generator 0) until none is left.
Word bicyclic_normal_form(Word w);

}  // namespace oracle
