#include "invunits/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "invunits/errors.hpp"

namespace invunits {

ConstructionSpec parse_construction_spec(std::string_view text) {
  ConstructionSpec spec;
  bool have_gens = false;
  bool have_t = false;
  for (auto const& rec : read_records(text)) {
    if (rec.key == "kind") {
      if (rec.value != "inv") {
        throw ParseError("construction specs describe inverse monoids (kind: inv)",
                         rec.line, rec.column);
      }
    } else if (rec.key == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", rec.line, 1);
      spec.alphabet = parse_record_generators(rec);
      have_gens = true;
    } else if (rec.key == "rel" || rec.key == "W") {
      if (!have_gens) {
        throw ParseError(rec.key + " line before gens line", rec.line, 1);
      }
      Word w = parse_record_word(rec, spec.alphabet);
      if (w.empty()) {
        throw ParseError("empty word", rec.line, rec.column);
      }
      (rec.key == "rel" ? spec.q : spec.w).push_back(std::move(w));
    } else if (rec.key == "t") {
      if (have_t) throw ParseError("duplicate t line", rec.line, 1);
      if (!is_identifier(rec.value)) {
        throw ParseError("invalid stable letter name '" + rec.value + "'",
                         rec.line, rec.column);
      }
      spec.t = rec.value;
      have_t = true;
    } else {
      throw ParseError("unknown key '" + rec.key + "'", rec.line, 1);
    }
  }
  if (!have_gens) {
    throw ParseError("missing gens line");
  }
  try {
    validate(spec);
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
  return spec;
}

Word e_word(std::span<Word const> us) {
  Word out;
  for (auto const& u : us) {
    out *= u * invert(u);
  }
  return out;
}

void validate(ConstructionSpec const& spec) {
  if (!is_identifier(spec.t)) {
    throw DomainError("invalid stable letter name '" + spec.t + "'");
  }
  if (spec.alphabet.find(spec.t)) {
    throw DomainError("stable letter '" + spec.t + "' collides with a generator");
  }
  for (auto const* ws : {&spec.q, &spec.w}) {
    for (auto const& w : *ws) {
      if (!spec.alphabet.admits(w)) {
        throw DomainError("construction word outside the alphabet");
      }
    }
  }
}

bool inverse_closed(ConstructionSpec const& spec) {
  return std::all_of(spec.w.begin(), spec.w.end(), [&](Word const& w) {
    return std::find(spec.w.begin(), spec.w.end(), invert(w)) != spec.w.end();
  });
}

Word f_word(ConstructionSpec const& spec) {
  validate(spec);
  Generator n = static_cast<Generator>(spec.alphabet.size());
  Word t{pos(n)};
  Word t_inv{neg(n)};
  std::vector<Word> us;
  for (Generator a = 0; a < n; ++a) us.push_back(Word{pos(a)});
  for (auto const& w : spec.w) us.push_back(t * w * t_inv);
  for (Generator a = 0; a < n; ++a) us.push_back(Word{neg(a)});
  return e_word(us);
}

InverseMonoidPresentation build_mqw(ConstructionSpec const& spec) {
  Word f = f_word(spec);
  std::vector<Word> rels;
  if (spec.q.empty()) {
    rels.push_back(f);
  } else {
    rels.push_back(f * spec.q.front());
    rels.insert(rels.end(), spec.q.begin() + 1, spec.q.end());
  }
  return InverseMonoidPresentation(PresentationKind::inverse,
                                   spec.alphabet.with(spec.t), std::move(rels));
}

InverseMonoidPresentation build_alt_presentation(ConstructionSpec const& spec) {
  validate(spec);
  Generator n = static_cast<Generator>(spec.alphabet.size());
  std::vector<Word> rels = spec.q;
  for (Generator a = 0; a < n; ++a) {
    rels.push_back(Word{pos(a), neg(a)});
    rels.push_back(Word{neg(a), pos(a)});
  }
  Word t{pos(n)};
  Word t_inv{neg(n)};
  for (auto const& w : spec.w) {
    rels.push_back(t * w * t_inv * t * invert(w) * t_inv);
  }
  return InverseMonoidPresentation(PresentationKind::inverse,
                                   spec.alphabet.with(spec.t), std::move(rels));
}

namespace {

std::string primed_name(std::string const& name, Alphabet const& taken) {
  std::string upper = name;
  upper[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(upper[0])));
  if (upper != name && !taken.find(upper)) {
    return upper;
  }
  std::string candidate = name + "_inv";
  while (taken.find(candidate)) {
    candidate += "_";
  }
  return candidate;
}

}  // namespace

InverseMonoidPresentation positive_form(InverseMonoidPresentation const& p,
                                        std::set<std::string> const& one_sided) {
  Alphabet a = p.alphabet();
  Generator n = static_cast<Generator>(a.size());
  for (Generator g = 0; g < n; ++g) {
    a = a.with(primed_name(p.alphabet().name(g), a));
  }
  auto prime = [n](Letter x) {
    return x.sign > 0 ? x : pos(x.gen + n);
  };
  std::vector<Word> rels;
  auto add = [&](Word w) {
    if (std::find(rels.begin(), rels.end(), w) == rels.end()) {
      rels.push_back(std::move(w));
    }
  };
  for (auto const& r : p.relators()) {
    Word w;
    for (Letter x : r) w.push_back(prime(x));
    add(std::move(w));
  }
  for (Generator g = 0; g < n; ++g) {
    add(Word{pos(g), pos(g + n)});
    if (!one_sided.contains(p.alphabet().name(g))) {
      add(Word{pos(g + n), pos(g)});
    }
  }
  return InverseMonoidPresentation(p.kind(), std::move(a), std::move(rels));
}

namespace {

struct Entry {
  char const* name;
  char const* text;
};

constexpr Entry entries[] = {
    {"ohare",
     "kind: inv\n"
     "gens: a b c d\n"
     "rel: a b c d a c d a d a b b c d a c d\n"},
    {"higman",
     "kind: grp\n"
     "gens: a b\n"
     "rel: a b' a a b a' a' a' a'\n"},
    {"surface-units",
     "kind: inv\n"
     "gens: a b c d t\n"
     "rel: a a' b b' c c' d d'"
     " t a t' t a' t' t a' t' t a t' t b t' t b' t' t b' t' t b t'"
     " t c t' t c' t' t c' t' t c t' t d t' t d' t' t d' t' t d t'"
     " a' a b' b c' c d' d"
     " a b a' b' c d c' d'\n"},
    {"grunewald",
     "kind: inv\n"
     "gens: c1 c2 d1 d2 t C1 C2 D1 D2 T\n"
     "rel: c1 C1\nrel: C1 c1\nrel: c2 C2\nrel: C2 c2\n"
     "rel: d1 D1\nrel: D1 d1\nrel: d2 D2\nrel: D2 d2\n"
     "rel: t T\n"
     "rel: c1 d1 C1 D1\nrel: c1 d2 C1 D2\nrel: c2 d1 C2 D1\nrel: c2 d2 C2 D2\n"
     "rel: t c2 T t C2 T\nrel: t C2 T t c2 T\n"
     "rel: t d2 T t D2 T\nrel: t D2 T t d2 T\n"
     "rel: t c1 d1 T t D1 C1 T\nrel: t D1 C1 T t c1 d1 T\n"},
    {"section3-example",
     "kind: inv\n"
     "gens: a b c\n"
     "rel: a b c c b' a b c c c b' a b c c b' a\n"},
};

constexpr Entry spec_entries[] = {
    {"surface-units",
     "kind: inv\n"
     "gens: a b c d\n"
     "rel: a b a' b' c d c' d'\n"
     "W: a\nW: a'\nW: b\nW: b'\nW: c\nW: c'\nW: d\nW: d'\n"
     "t: t\n"},
    {"grunewald",
     "kind: inv\n"
     "gens: c1 c2 d1 d2\n"
     "rel: c1 d1 c1' d1'\nrel: c1 d2 c1' d2'\n"
     "rel: c2 d1 c2' d1'\nrel: c2 d2 c2' d2'\n"
     "W: c1 d1\nW: c2\nW: d2\nW: d1' c1'\nW: c2'\nW: d2'\n"
     "t: t\n"},
};

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (auto const& e : entries) out.emplace_back(e.name);
  return out;
}

bool in_catalog(std::string_view name) {
  return std::any_of(std::begin(entries), std::end(entries),
                     [&](Entry const& e) { return name == e.name; });
}

CatalogEntry catalog(std::string_view name) {
  for (auto const& e : entries) {
    if (name == e.name) {
      std::string_view text = e.text;
      if (text.starts_with("kind: grp")) {
        return parse_group_presentation(text);
      }
      return parse_presentation(text);
    }
  }
  throw DomainError("unknown catalog entry '" + std::string(name) + "'");
}

ConstructionSpec catalog_spec(std::string_view name) {
  for (auto const& e : spec_entries) {
    if (name == e.name) {
      return parse_construction_spec(e.text);
    }
  }
  throw DomainError("no construction data for '" + std::string(name) + "'");
}

std::vector<Word> higman_set() {
  Alphabet a({"a", "b"});
  return {parse_word("a b' a a", a), parse_word("b", a),
          parse_word("a a a a", a)};
}

}  // namespace invunits
