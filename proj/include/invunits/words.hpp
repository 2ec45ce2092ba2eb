#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invunits {

using Generator = std::uint32_t;

struct Letter {
  Generator gen = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept { return {gen, -sign}; }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  auto operator<=>(Letter const&) const = default;
};

constexpr Letter pos(Generator g) noexcept { return {g, 1}; }
constexpr Letter neg(Generator g) noexcept { return {g, -1}; }

// A finite sequence of signed letters. Words do not carry their alphabet;
// alphabet consistency is checked where words meet a presentation.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : _letters(letters) {}

  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }
  Letter operator[](std::size_t i) const { return _letters[i]; }
  Letter front() const { return _letters.front(); }
  Letter back() const { return _letters.back(); }
  const_iterator begin() const noexcept { return _letters.begin(); }
  const_iterator end() const noexcept { return _letters.end(); }
  std::vector<Letter> const& letters() const noexcept { return _letters; }

  void push_back(Letter x) { _letters.push_back(x); }
  void pop_back() { _letters.pop_back(); }

  // Letters [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool starts_with(Word const& u) const;
  bool ends_with(Word const& u) const;
  // Position of the first occurrence of u at or after `from`.
  std::optional<std::size_t> find(Word const& u, std::size_t from = 0) const;

  bool is_positive() const noexcept;
  bool is_reduced() const noexcept;
  // One past the largest generator index used (0 for the empty word).
  Generator generator_bound() const noexcept;

  Word& operator*=(Word const& other);
  friend Word operator*(Word lhs, Word const& rhs) { return lhs *= rhs; }

  auto operator<=>(Word const&) const = default;
  bool operator==(Word const&) const = default;

 private:
  std::vector<Letter> _letters;
};

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

Word power(Word const& w, std::size_t k);

Word free_reduce(Word const& w);
Word invert(Word const& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // red(w) = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(Word const& w);

// Replaces each letter x^s by images[x]^s. Throws DomainError
// ("unbound letter") when a generator has no image.
Word substitute(Word const& tmpl, std::span<Word const> images);

// All prefixes (suffixes) in increasing length, from the empty word to w.
std::vector<Word> prefixes(Word const& w);
std::vector<Word> suffixes(Word const& w);

// Replaces the leftmost occurrence of lhs; nullopt if lhs does not occur.
std::optional<Word> rewrite_leftmost(Word const& w, Word const& lhs,
                                     Word const& rhs);

struct RewriteResult {
  Word word;
  std::size_t steps = 0;
};
// Applies rewrite_leftmost until lhs no longer occurs.
RewriteResult rewrite_to_fixpoint(Word const& w, Word const& lhs,
                                  Word const& rhs,
                                  std::size_t max_steps = 100000);

// Occurrences of g, counting g and g^-1 together.
std::size_t occurrences(Word const& w, Generator g);
std::set<Generator> content(Word const& w);

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return _names.size(); }
  std::string const& name(Generator g) const;
  std::vector<std::string> const& names() const noexcept { return _names; }
  std::optional<Generator> find(std::string_view name) const;
  Generator index(std::string_view name) const;  // throws if absent

  Alphabet with(std::string name) const;
  Alphabet without(Generator g) const;

  // Every name is a single lowercase letter, so uppercase may denote inverses.
  bool compact_compatible() const noexcept;

  // Every letter of w belongs to this alphabet.
  bool admits(Word const& w) const noexcept;

  bool operator==(Alphabet const&) const = default;

 private:
  std::vector<std::string> _names;
};

bool is_identifier(std::string_view s) noexcept;

enum class WordStyle { tokens, compact };

// Accepts tokens separated by whitespace: `x`, `x'` or `x^-1`; a lone `1`
// denotes the empty word. When the alphabet is compact-compatible a token
// that is not a generator name is read letter by letter, uppercase meaning
// inverse.
Word parse_word(std::string_view text, Alphabet const& alphabet);

// Empty words render as "1". Compact style falls back to tokens when the
// alphabet is not compact-compatible.
std::string render(Word const& w, Alphabet const& alphabet,
                   WordStyle style = WordStyle::tokens);

}  // namespace invunits
