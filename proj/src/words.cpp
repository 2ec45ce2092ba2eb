#include "invunits/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "invunits/errors.hpp"

namespace invunits {

ParseError::ParseError(std::string const& what, std::size_t line,
                       std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) +
                            (column == 0 ? std::string()
                                         : ", column " +
                                               std::to_string(column)) +
                            ": " + what),
      _line(line),
      _column(column) {}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw DomainError("subword out of range");
  }
  return Word(std::vector<Letter>(_letters.begin() + pos,
                                  _letters.begin() + pos + len));
}

bool Word::starts_with(Word const& u) const {
  return u.size() <= size() &&
         std::equal(u.begin(), u.end(), _letters.begin());
}

bool Word::ends_with(Word const& u) const {
  return u.size() <= size() &&
         std::equal(u.begin(), u.end(), _letters.end() - u.size());
}

std::optional<std::size_t> Word::find(Word const& u, std::size_t from) const {
  if (from > size()) {
    return std::nullopt;
  }
  auto it = std::search(_letters.begin() + from, _letters.end(), u.begin(),
                        u.end());
  if (it == _letters.end() && !u.empty()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - _letters.begin());
}

bool Word::is_positive() const noexcept {
  return std::all_of(begin(), end(), [](Letter x) { return x.sign > 0; });
}

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 1; i < size(); ++i) {
    if (_letters[i].is_inverse_of(_letters[i - 1])) {
      return false;
    }
  }
  return true;
}

Generator Word::generator_bound() const noexcept {
  Generator bound = 0;
  for (Letter x : _letters) {
    bound = std::max(bound, x.gen + 1);
  }
  return bound;
}

Word& Word::operator*=(Word const& other) {
  _letters.insert(_letters.end(), other.begin(), other.end());
  return *this;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= (static_cast<std::size_t>(x.gen) << 1) | (x.sign < 0 ? 1u : 0u);
    h *= 1099511628211ull;
  }
  return h;
}

Word power(Word const& w, std::size_t k) {
  Word result;
  for (std::size_t i = 0; i < k; ++i) {
    result *= w;
  }
  return result;
}

Word free_reduce(Word const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back().is_inverse_of(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

CyclicReduction cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t i = 0;
  while (2 * i + 1 < r.size() && r[i].is_inverse_of(r[r.size() - 1 - i])) {
    ++i;
  }
  return {r.subword(i, r.size() - 2 * i), r.prefix(i)};
}

Word substitute(Word const& tmpl, std::span<Word const> images) {
  Word out;
  for (Letter x : tmpl) {
    if (x.gen >= images.size()) {
      throw DomainError("unbound letter: generator " + std::to_string(x.gen) +
                        " has no image");
    }
    out *= x.sign > 0 ? images[x.gen] : invert(images[x.gen]);
  }
  return out;
}

std::vector<Word> prefixes(Word const& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.push_back(w.prefix(k));
  }
  return out;
}

std::vector<Word> suffixes(Word const& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.push_back(w.suffix(k));
  }
  return out;
}

std::optional<Word> rewrite_leftmost(Word const& w, Word const& lhs,
                                     Word const& rhs) {
  if (lhs.empty()) {
    throw DomainError("rewrite rule with empty left-hand side");
  }
  auto at = w.find(lhs);
  if (!at) {
    return std::nullopt;
  }
  return w.prefix(*at) * rhs * w.suffix(w.size() - *at - lhs.size());
}

RewriteResult rewrite_to_fixpoint(Word const& w, Word const& lhs,
                                  Word const& rhs, std::size_t max_steps) {
  RewriteResult result{w, 0};
  while (auto next = rewrite_leftmost(result.word, lhs, rhs)) {
    if (result.steps == max_steps) {
      throw DomainError("rewriting did not terminate within " +
                        std::to_string(max_steps) + " steps");
    }
    result.word = std::move(*next);
    ++result.steps;
  }
  return result;
}

std::size_t occurrences(Word const& w, Generator g) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [g](Letter x) { return x.gen == g; }));
}

std::set<Generator> content(Word const& w) {
  std::set<Generator> out;
  for (Letter x : w) {
    out.insert(x.gen);
  }
  return out;
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) {
    return false;
  }
  auto alpha = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  if (!alpha(s.front())) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return alpha(c) || std::isdigit(static_cast<unsigned char>(c));
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
  std::set<std::string_view> seen;
  for (auto const& n : _names) {
    if (!is_identifier(n)) {
      throw DomainError("invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw DomainError("duplicate generator '" + n + "'");
    }
  }
}

std::string const& Alphabet::name(Generator g) const {
  if (g >= _names.size()) {
    throw DomainError("generator index " + std::to_string(g) +
                      " outside alphabet of size " +
                      std::to_string(_names.size()));
  }
  return _names[g];
}

std::optional<Generator> Alphabet::find(std::string_view name) const {
  auto it = std::find(_names.begin(), _names.end(), name);
  if (it == _names.end()) {
    return std::nullopt;
  }
  return static_cast<Generator>(it - _names.begin());
}

Generator Alphabet::index(std::string_view name) const {
  if (auto g = find(name)) {
    return *g;
  }
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

Alphabet Alphabet::with(std::string name) const {
  auto names = _names;
  names.push_back(std::move(name));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::without(Generator g) const {
  name(g);
  auto names = _names;
  names.erase(names.begin() + g);
  return Alphabet(std::move(names));
}

bool Alphabet::compact_compatible() const noexcept {
  return std::all_of(_names.begin(), _names.end(), [](std::string const& n) {
    return n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
  });
}

bool Alphabet::admits(Word const& w) const noexcept {
  return w.generator_bound() <= _names.size();
}

namespace {

Letter parse_token(std::string_view tok, Alphabet const& alphabet) {
  std::string_view base = tok;
  int sign = 1;
  if (base.size() > 1 && base.back() == '\'') {
    base.remove_suffix(1);
    sign = -1;
  } else if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
    base.remove_suffix(3);
    sign = -1;
  }
  auto g = alphabet.find(base);
  if (!g) {
    throw ParseError("unknown generator '" + std::string(base) + "'");
  }
  return {*g, sign};
}

void parse_compact(std::string_view tok, Alphabet const& alphabet, Word& out) {
  for (char c : tok) {
    bool upper = c >= 'A' && c <= 'Z';
    char lower = upper ? static_cast<char>(c - 'A' + 'a') : c;
    auto g = alphabet.find(std::string_view(&lower, 1));
    if (!g) {
      throw ParseError("unknown generator '" + std::string(1, lower) + "'");
    }
    out.push_back({*g, upper ? -1 : 1});
  }
}

}  // namespace

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    std::string_view tok = text.substr(i, j - i);
    try {
      if (tok == "1") {
        // identity
      } else if (std::string_view base = tok;
                 alphabet.find(base) ||
                 (base.size() > 1 && base.back() == '\'') ||
                 (base.size() > 3 && base.ends_with("^-1")) ||
                 !alphabet.compact_compatible()) {
        out.push_back(parse_token(tok, alphabet));
      } else {
        parse_compact(tok, alphabet, out);
      }
    } catch (ParseError const& e) {
      throw ParseError(e.what(), 0, i + 1);
    }
    i = j;
  }
  return out;
}

std::string render(Word const& w, Alphabet const& alphabet, WordStyle style) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  if (style == WordStyle::compact && alphabet.compact_compatible()) {
    for (Letter x : w) {
      char c = alphabet.name(x.gen)[0];
      out.push_back(x.sign > 0 ? c : static_cast<char>(c - 'a' + 'A'));
    }
    return out;
  }
  for (Letter x : w) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out += alphabet.name(x.gen);
    if (x.sign < 0) {
      out.push_back('\'');
    }
  }
  return out;
}

}  // namespace invunits
