#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invunits/words.hpp"

namespace invunits {

enum class PresentationKind { inverse, monoid, group };

std::string_view kind_name(PresentationKind k) noexcept;  // inv, mon, grp
PresentationKind parse_kind(std::string_view s);

// Inv<A | r_i = 1>, Mon<A | r_i = 1> or Gp<A | r_i = 1> with at least one
// nonempty relator; monoid relators are positive.
class InverseMonoidPresentation {
 public:
  InverseMonoidPresentation(PresentationKind kind, Alphabet alphabet,
                            std::vector<Word> relators);

  PresentationKind kind() const noexcept { return _kind; }
  Alphabet const& alphabet() const noexcept { return _alphabet; }
  std::vector<Word> const& relators() const noexcept { return _relators; }
  Word const& relator(std::size_t i) const { return _relators.at(i); }
  std::size_t size() const noexcept { return _relators.size(); }

  bool operator==(InverseMonoidPresentation const&) const = default;

 private:
  PresentationKind _kind;
  Alphabet _alphabet;
  std::vector<Word> _relators;
};

// Gp<X | R>; the relator list may be empty and relators may be trivial.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(Alphabet alphabet, std::vector<Word> relators);

  Alphabet const& alphabet() const noexcept { return _alphabet; }
  std::vector<Word> const& relators() const noexcept { return _relators; }
  std::size_t rank() const noexcept { return _alphabet.size(); }

  bool operator==(GroupPresentation const&) const = default;

 private:
  Alphabet _alphabet;
  std::vector<Word> _relators;
};

GroupPresentation as_group(InverseMonoidPresentation const& p);
// Throws DomainError when p has no nonempty relator.
InverseMonoidPresentation as_inverse(GroupPresentation const& p,
                                     PresentationKind kind =
                                         PresentationKind::group);

// One "key: value" line of a presentation-like file.
struct Record {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // column of the first character of value
};

// Splits text into records, skipping blank lines and `#` comments.
std::vector<Record> read_records(std::string_view text);

// Parses a word from a record, reporting errors at the record's position.
Word parse_record_word(Record const& rec, Alphabet const& alphabet);
Alphabet parse_record_generators(Record const& rec);

InverseMonoidPresentation parse_presentation(std::string_view text);
// Accepts `kind: grp` files, with or without relators.
GroupPresentation parse_group_presentation(std::string_view text);

std::string render(InverseMonoidPresentation const& p,
                   WordStyle style = WordStyle::tokens);
std::string render(GroupPresentation const& p,
                   WordStyle style = WordStyle::tokens);

// Every relator freely reduces to the empty word.
bool is_free_presentation(GroupPresentation const& p);

struct IntroduceGenerator {
  std::string name;
  Word definition;  // over the current generators
};
struct EliminateGenerator {
  std::string name;
};
// Rewrites lhs -> rhs in every relator except the one witnessing lhs = rhs.
struct SubstituteInRelators {
  Word lhs;
  Word rhs;
};
struct RemoveTrivialRelator {
  std::size_t index;  // 0-based
};

using TietzeMove = std::variant<IntroduceGenerator, EliminateGenerator,
                                SubstituteInRelators, RemoveTrivialRelator>;

GroupPresentation apply_tietze(GroupPresentation const& p,
                               TietzeMove const& move);

// Greedy simplification: drop trivial relators and eliminate generators
// occurring exactly once, at most max_moves times.
struct SimplifyResult {
  GroupPresentation presentation;
  std::vector<TietzeMove> moves;
};
SimplifyResult simplify(GroupPresentation const& p, std::size_t max_moves = 64);

// Script lines: `introduce t = <word>`, `substitute <word> -> <word>`,
// `eliminate x`, `remove <1-based relator index>`, `auto`.
GroupPresentation replay_tietze(GroupPresentation const& p,
                                std::string_view script);

}  // namespace invunits
