#include "invunits/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "invunits/errors.hpp"

namespace invunits {

std::string_view kind_name(PresentationKind k) noexcept {
  switch (k) {
    case PresentationKind::inverse:
      return "inv";
    case PresentationKind::monoid:
      return "mon";
    case PresentationKind::group:
      return "grp";
  }
  return "inv";
}

PresentationKind parse_kind(std::string_view s) {
  if (s == "inv") return PresentationKind::inverse;
  if (s == "mon") return PresentationKind::monoid;
  if (s == "grp") return PresentationKind::group;
  throw ParseError("unknown presentation kind '" + std::string(s) +
                   "' (expected inv, mon or grp)");
}

InverseMonoidPresentation::InverseMonoidPresentation(PresentationKind kind,
                                                     Alphabet alphabet,
                                                     std::vector<Word> relators)
    : _kind(kind), _alphabet(std::move(alphabet)), _relators(std::move(relators)) {
  if (_relators.empty()) {
    throw DomainError("presentation without relators");
  }
  for (std::size_t i = 0; i < _relators.size(); ++i) {
    auto const& r = _relators[i];
    if (r.empty()) {
      throw DomainError("empty relator r" + std::to_string(i + 1));
    }
    if (!_alphabet.admits(r)) {
      throw DomainError("relator r" + std::to_string(i + 1) +
                        " uses a letter outside the alphabet");
    }
    if (_kind == PresentationKind::monoid && !r.is_positive()) {
      throw DomainError("monoid relator r" + std::to_string(i + 1) +
                        " contains a negative letter");
    }
  }
}

GroupPresentation::GroupPresentation(Alphabet alphabet,
                                     std::vector<Word> relators)
    : _alphabet(std::move(alphabet)), _relators(std::move(relators)) {
  for (std::size_t i = 0; i < _relators.size(); ++i) {
    if (!_alphabet.admits(_relators[i])) {
      throw DomainError("relator r" + std::to_string(i + 1) +
                        " uses a letter outside the alphabet");
    }
  }
}

GroupPresentation as_group(InverseMonoidPresentation const& p) {
  return GroupPresentation(p.alphabet(), p.relators());
}

InverseMonoidPresentation as_inverse(GroupPresentation const& p,
                                     PresentationKind kind) {
  std::vector<Word> rels;
  for (auto const& r : p.relators()) {
    if (!r.empty()) {
      rels.push_back(r);
    }
  }
  return InverseMonoidPresentation(kind, p.alphabet(), std::move(rels));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::pair<std::string_view, std::size_t>> split_ws(
    std::string_view s) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
      ++j;
    }
    out.emplace_back(s.substr(i, j - i), i);
    i = j;
  }
  return out;
}

struct ParsedFile {
  std::optional<PresentationKind> kind;
  std::optional<Alphabet> alphabet;
  std::vector<Word> relators;
};

ParsedFile parse_file(std::string_view text) {
  ParsedFile f;
  for (auto const& rec : read_records(text)) {
    if (rec.key == "kind") {
      if (f.kind) {
        throw ParseError("duplicate kind line", rec.line, 1);
      }
      try {
        f.kind = parse_kind(rec.value);
      } catch (ParseError const& e) {
        throw ParseError(e.what(), rec.line, rec.column);
      }
    } else if (rec.key == "gens") {
      if (f.alphabet) {
        throw ParseError("duplicate gens line", rec.line, 1);
      }
      if (rec.value.empty() && f.kind == PresentationKind::group) {
        f.alphabet = Alphabet();
      } else {
        f.alphabet = parse_record_generators(rec);
      }
    } else if (rec.key == "rel") {
      if (!f.alphabet) {
        throw ParseError("rel line before gens line", rec.line, 1);
      }
      Word r = parse_record_word(rec, *f.alphabet);
      if (r.empty() &&
          !(f.kind == PresentationKind::group && rec.value == "1")) {
        throw ParseError("empty relator", rec.line, rec.column);
      }
      if (f.kind == PresentationKind::monoid && !r.is_positive()) {
        throw ParseError("monoid relator with a negative letter", rec.line,
                         rec.column);
      }
      f.relators.push_back(std::move(r));
    } else {
      throw ParseError("unknown key '" + rec.key + "'", rec.line, 1);
    }
  }
  if (!f.kind) {
    throw ParseError("missing kind line");
  }
  if (!f.alphabet) {
    throw ParseError("missing gens line");
  }
  return f;
}

}  // namespace

std::vector<Record> read_records(std::string_view text) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", line_no, 1);
    }
    Record rec;
    rec.key = std::string(trim(line.substr(0, colon)));
    std::size_t v = colon + 1;
    while (v < line.size() && std::isspace(static_cast<unsigned char>(line[v]))) {
      ++v;
    }
    rec.value = std::string(trim(line.substr(v)));
    rec.line = line_no;
    rec.column = v + 1;
    out.push_back(std::move(rec));
  }
  return out;
}

Word parse_record_word(Record const& rec, Alphabet const& alphabet) {
  try {
    return parse_word(rec.value, alphabet);
  } catch (ParseError const& e) {
    throw ParseError(e.what(), rec.line,
                     e.column() == 0 ? rec.column : rec.column + e.column() - 1);
  }
}

Alphabet parse_record_generators(Record const& rec) {
  std::vector<std::string> names;
  std::set<std::string_view> seen;
  for (auto [tok, at] : split_ws(rec.value)) {
    if (!is_identifier(tok)) {
      throw ParseError("invalid generator name '" + std::string(tok) + "'",
                       rec.line, rec.column + at);
    }
    if (!seen.insert(tok).second) {
      throw ParseError("duplicate generator '" + std::string(tok) + "'",
                       rec.line, rec.column + at);
    }
    names.emplace_back(tok);
  }
  if (names.empty()) {
    throw ParseError("no generators", rec.line, rec.column);
  }
  return Alphabet(std::move(names));
}

InverseMonoidPresentation parse_presentation(std::string_view text) {
  auto f = parse_file(text);
  if (f.relators.empty()) {
    throw ParseError("no relators");
  }
  return InverseMonoidPresentation(*f.kind, std::move(*f.alphabet),
                                   std::move(f.relators));
}

GroupPresentation parse_group_presentation(std::string_view text) {
  auto f = parse_file(text);
  if (*f.kind != PresentationKind::group) {
    throw ParseError("expected kind: grp");
  }
  return GroupPresentation(std::move(*f.alphabet), std::move(f.relators));
}

namespace {

std::string render_body(PresentationKind kind, Alphabet const& a,
                        std::vector<Word> const& rels, WordStyle style) {
  std::ostringstream out;
  out << "kind: " << kind_name(kind) << '\n' << "gens:";
  for (auto const& n : a.names()) {
    out << ' ' << n;
  }
  out << '\n';
  for (auto const& r : rels) {
    out << "rel: " << render(r, a, style) << '\n';
  }
  return out.str();
}

}  // namespace

std::string render(InverseMonoidPresentation const& p, WordStyle style) {
  return render_body(p.kind(), p.alphabet(), p.relators(), style);
}

std::string render(GroupPresentation const& p, WordStyle style) {
  return render_body(PresentationKind::group, p.alphabet(), p.relators(),
                     style);
}

bool is_free_presentation(GroupPresentation const& p) {
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [](Word const& r) { return free_reduce(r).empty(); });
}

namespace {

bool is_rotation(Word const& u, Word const& v) {
  if (u.size() != v.size()) {
    return false;
  }
  if (u.empty()) {
    return true;
  }
  return (u * u).find(v).has_value();
}

// Renumbers generators after removing g.
Word drop_generator(Word const& w, Generator g) {
  Word out;
  for (Letter x : w) {
    if (x.gen == g) {
      throw DomainError("generator still in use");
    }
    out.push_back({x.gen > g ? x.gen - 1 : x.gen, x.sign});
  }
  return out;
}

GroupPresentation introduce(GroupPresentation const& p,
                            IntroduceGenerator const& m) {
  if (!is_identifier(m.name)) {
    throw DomainError("invalid generator name '" + m.name + "'");
  }
  if (p.alphabet().find(m.name)) {
    throw DomainError("generator '" + m.name + "' already exists");
  }
  if (!p.alphabet().admits(m.definition)) {
    throw DomainError("definition of '" + m.name +
                      "' uses an unknown generator");
  }
  Generator n = static_cast<Generator>(p.rank());
  auto rels = p.relators();
  rels.push_back(Word{pos(n)} * invert(m.definition));
  return GroupPresentation(p.alphabet().with(m.name), std::move(rels));
}

struct Occurrence {
  std::size_t relator;
  std::size_t position;
};

std::optional<Occurrence> single_occurrence(std::vector<Word> const& rels,
                                            Generator g) {
  std::optional<Occurrence> found;
  std::size_t count = 0;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (std::size_t k = 0; k < rels[i].size(); ++k) {
      if (rels[i][k].gen == g) {
        ++count;
        found = Occurrence{i, k};
      }
    }
  }
  return count == 1 ? found : std::nullopt;
}

GroupPresentation eliminate(GroupPresentation const& p,
                            EliminateGenerator const& m) {
  auto g = p.alphabet().find(m.name);
  if (!g) {
    throw DomainError("unknown generator '" + m.name + "'");
  }
  auto rels = p.relators();
  auto occ = single_occurrence(rels, *g);
  if (!occ) {
    for (auto& r : rels) {
      r = cyclic_reduce(r).core;
    }
    occ = single_occurrence(rels, *g);
  }
  if (!occ) {
    throw DomainError("cannot eliminate '" + m.name +
                      "': it does not occur exactly once in the relators");
  }
  Word const& r = rels[occ->relator];
  Letter x = r[occ->position];
  Word u = r.prefix(occ->position);
  Word v = r.suffix(r.size() - occ->position - 1);
  // x v u = 1 after rotation
  Word value = x.sign > 0 ? invert(v * u) : v * u;

  std::vector<Word> images;
  for (Generator h = 0; h < p.rank(); ++h) {
    images.push_back(h == *g ? value : Word{pos(h)});
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i == occ->relator) {
      continue;
    }
    out.push_back(drop_generator(free_reduce(substitute(p.relators()[i], images)),
                                 *g));
  }
  return GroupPresentation(p.alphabet().without(*g), std::move(out));
}

GroupPresentation substitute_in(GroupPresentation const& p,
                                SubstituteInRelators const& m) {
  if (m.lhs.empty()) {
    throw DomainError("substitution with empty left-hand side");
  }
  if (!p.alphabet().admits(m.lhs) || !p.alphabet().admits(m.rhs)) {
    throw DomainError("substitution uses an unknown generator");
  }
  Word rel = cyclic_reduce(m.lhs * invert(m.rhs)).core;
  Word rel_inv = invert(rel);
  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < p.relators().size() && !witness; ++i) {
    Word c = cyclic_reduce(p.relators()[i]).core;
    if (is_rotation(c, rel) || is_rotation(c, rel_inv)) {
      witness = i;
    }
  }
  if (!witness) {
    throw DomainError("substitution is not a consequence of a single relator");
  }
  auto rels = p.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i != *witness) {
      rels[i] = free_reduce(rewrite_to_fixpoint(rels[i], m.lhs, m.rhs, 10000).word);
    }
  }
  return GroupPresentation(p.alphabet(), std::move(rels));
}

GroupPresentation remove_trivial(GroupPresentation const& p,
                                 RemoveTrivialRelator const& m) {
  if (m.index >= p.relators().size()) {
    throw DomainError("no relator r" + std::to_string(m.index + 1));
  }
  if (!free_reduce(p.relators()[m.index]).empty()) {
    throw DomainError("relator r" + std::to_string(m.index + 1) +
                      " is not trivial");
  }
  auto rels = p.relators();
  rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(m.index));
  return GroupPresentation(p.alphabet(), std::move(rels));
}

}  // namespace

GroupPresentation apply_tietze(GroupPresentation const& p,
                               TietzeMove const& move) {
  return std::visit(
      [&](auto const& m) -> GroupPresentation {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, IntroduceGenerator>) {
          return introduce(p, m);
        } else if constexpr (std::is_same_v<M, EliminateGenerator>) {
          return eliminate(p, m);
        } else if constexpr (std::is_same_v<M, SubstituteInRelators>) {
          return substitute_in(p, m);
        } else {
          return remove_trivial(p, m);
        }
      },
      move);
}

SimplifyResult simplify(GroupPresentation const& p, std::size_t max_moves) {
  SimplifyResult result{p, {}};
  while (result.moves.size() < max_moves) {
    auto const& cur = result.presentation;
    std::optional<TietzeMove> next;
    for (std::size_t i = 0; i < cur.relators().size() && !next; ++i) {
      if (free_reduce(cur.relators()[i]).empty()) {
        next = RemoveTrivialRelator{i};
      }
    }
    std::vector<Word> cores;
    for (auto const& r : cur.relators()) {
      cores.push_back(cyclic_reduce(r).core);
    }
    for (Generator g = 0; g < cur.rank() && !next; ++g) {
      if (single_occurrence(cur.relators(), g) || single_occurrence(cores, g)) {
        next = EliminateGenerator{cur.alphabet().name(g)};
      }
    }
    if (!next) {
      break;
    }
    result.presentation = apply_tietze(cur, *next);
    result.moves.push_back(std::move(*next));
  }
  return result;
}

GroupPresentation replay_tietze(GroupPresentation const& p,
                                std::string_view script) {
  GroupPresentation cur = p;
  std::size_t line_no = 0;
  while (!script.empty()) {
    ++line_no;
    auto nl = script.find('\n');
    std::string_view line = script.substr(0, nl);
    script = nl == std::string_view::npos ? std::string_view()
                                          : script.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    auto toks = split_ws(line);
    std::string_view cmd = toks[0].first;
    std::string_view rest = trim(line.substr(cmd.size()));
    auto fail = [&](std::string const& what) -> ParseError {
      return ParseError(what, line_no, 1);
    };
    auto word = [&](std::string_view text) {
      try {
        return parse_word(text, cur.alphabet());
      } catch (ParseError const& e) {
        throw ParseError(e.what(), line_no, 0);
      }
    };
    TietzeMove move;
    if (cmd == "introduce") {
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) {
        throw fail("expected 'introduce <name> = <word>'");
      }
      move = IntroduceGenerator{std::string(trim(rest.substr(0, eq))),
                                word(rest.substr(eq + 1))};
    } else if (cmd == "substitute") {
      auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) {
        throw fail("expected 'substitute <word> -> <word>'");
      }
      move = SubstituteInRelators{word(rest.substr(0, arrow)),
                                  word(rest.substr(arrow + 2))};
    } else if (cmd == "eliminate") {
      if (toks.size() != 2) {
        throw fail("expected 'eliminate <name>'");
      }
      move = EliminateGenerator{std::string(toks[1].first)};
    } else if (cmd == "remove") {
      std::size_t idx = 0;
      try {
        idx = std::stoul(std::string(rest));
      } catch (std::exception const&) {
        throw fail("expected 'remove <relator number>'");
      }
      if (idx == 0) {
        throw fail("relator numbers start at 1");
      }
      move = RemoveTrivialRelator{idx - 1};
    } else if (cmd == "auto") {
      cur = simplify(cur).presentation;
      continue;
    } else {
      throw fail("unknown move '" + std::string(cmd) + "'");
    }
    try {
      cur = apply_tietze(cur, move);
    } catch (DomainError const& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cur;
}

}  // namespace invunits
