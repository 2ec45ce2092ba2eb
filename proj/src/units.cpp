#include "invunits/units.hpp"

#include <algorithm>
#include <map>

#include "invunits/benois.hpp"
#include "invunits/errors.hpp"

namespace invunits {

std::string_view condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::F1:
      return "F1";
    case Condition::F2:
      return "F2";
    case Condition::F3:
      return "F3";
    case Condition::markers:
      return "Markers";
    case Condition::poset:
      return "Poset";
  }
  return "F1";
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive-search-exhausted";
  }
  return "fails";
}

std::string_view minimality_name(Minimality m) noexcept {
  return m == Minimality::certified ? "certified" : "unknown";
}

std::string_view status_name(UnitsStatus s) noexcept {
  switch (s) {
    case UnitsStatus::certified_presentation:
      return "certified-presentation";
    case UnitsStatus::candidate_only:
      return "candidate-only";
    case UnitsStatus::no_condition:
      return "no-condition";
  }
  return "no-condition";
}

namespace {

std::set<Generator> letters_of(std::span<Word const> pieces) {
  std::set<Generator> out;
  for (auto const& p : pieces) {
    auto c = content(p);
    out.insert(c.begin(), c.end());
  }
  return out;
}

bool absent_from_others(std::span<Word const> pieces, std::size_t i,
                        Generator x) {
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (j != i && occurrences(pieces[j], x) > 0) {
      return false;
    }
  }
  return true;
}

ConditionReport search_f1(std::span<Word const> pieces) {
  ConditionReport rep{Condition::F1, Verdict::fails, std::nullopt, {}};
  F1Witness w;
  std::set<Generator> used;
  for (auto const& p : pieces) {
    Letter x = p.front();
    if (!std::all_of(p.begin(), p.end(), [x](Letter y) { return y == x; }) ||
        !used.insert(x.gen).second) {
      return rep;
    }
    w.powers.emplace_back(x.gen, x.sign * static_cast<long>(p.size()));
  }
  rep.verdict = Verdict::holds;
  rep.witness = std::move(w);
  return rep;
}

ConditionReport search_f2(std::span<Word const> pieces) {
  ConditionReport rep{Condition::F2, Verdict::fails, std::nullopt, {}};
  F2Witness w;
  std::set<Generator> used;
  for (auto const& p : pieces) {
    auto c = content(p);
    for (Generator x : c) {
      if (!used.insert(x).second) {
        return rep;
      }
    }
    w.contents.push_back(std::move(c));
  }
  rep.verdict = Verdict::holds;
  rep.witness = std::move(w);
  return rep;
}

// A piece that may come last needs a letter occurring once in it and in no
// other remaining piece; dropping pieces never invalidates the others, so
// peeling eligible pieces from the back is exhaustive.
ConditionReport search_f3(std::span<Word const> pieces) {
  ConditionReport rep{Condition::F3, Verdict::fails, std::nullopt, {}};
  std::vector<std::size_t> remaining(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) remaining[i] = i;
  std::vector<std::size_t> rev_order;
  std::vector<Generator> rev_letters;
  while (!remaining.empty()) {
    bool found = false;
    for (std::size_t k = 0; k < remaining.size() && !found; ++k) {
      std::size_t i = remaining[k];
      for (Generator x : content(pieces[i])) {
        if (occurrences(pieces[i], x) != 1) continue;
        bool elsewhere = std::any_of(
            remaining.begin(), remaining.end(), [&](std::size_t j) {
              return j != i && occurrences(pieces[j], x) > 0;
            });
        if (!elsewhere) {
          rev_order.push_back(i);
          rev_letters.push_back(x);
          remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
          found = true;
          break;
        }
      }
    }
    if (!found) {
      return rep;
    }
  }
  F3Witness w;
  w.order.assign(rev_order.rbegin(), rev_order.rend());
  w.letters.assign(rev_letters.rbegin(), rev_letters.rend());
  rep.verdict = Verdict::holds;
  rep.witness = std::move(w);
  return rep;
}

ConditionReport search_markers(std::span<Word const> pieces) {
  ConditionReport rep{Condition::markers, Verdict::fails, std::nullopt, {}};
  MarkersWitness w;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::optional<Generator> marker;
    for (Generator x : content(pieces[i])) {
      if (absent_from_others(pieces, i, x)) {
        marker = x;
        break;
      }
    }
    if (!marker) {
      return rep;
    }
    w.markers.push_back(*marker);
  }
  rep.verdict = Verdict::holds;
  rep.witness = std::move(w);
  return rep;
}

struct PosetSearch {
  std::span<Word const> pieces;
  std::vector<std::vector<Generator>> choices;
  std::vector<Generator> mu;
  std::set<Generator> used;
  std::optional<PosetWitness> found;

  using Mask = std::uint32_t;

  std::set<Generator> c_of(std::size_t i) const {
    std::set<Generator> out;
    for (Generator x : content(pieces[i])) {
      if (used.contains(x)) out.insert(x);
    }
    return out;
  }

  // Subset dynamic programme over orderings.
  std::optional<std::vector<std::size_t>> order() const {
    std::size_t n = pieces.size();
    std::vector<std::set<Generator>> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = c_of(i);
    std::vector<std::optional<std::pair<Mask, std::size_t>>> from(Mask{1} << n);
    std::vector<bool> reach(Mask{1} << n, false);
    reach[0] = true;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (!reach[s]) continue;
      std::set<Generator> covered;
      for (std::size_t j = 0; j < n; ++j) {
        if (s & (Mask{1} << j)) covered.insert(c[j].begin(), c[j].end());
      }
      for (std::size_t i = 0; i < n; ++i) {
        Mask bit = Mask{1} << i;
        if ((s & bit) || reach[s | bit]) continue;
        bool rule_i = c[i] == std::set<Generator>{mu[i]};
        bool rule_ii = false;
        if (!rule_i && occurrences(pieces[i], mu[i]) == 1) {
          std::set<Generator> fresh;
          std::set_difference(c[i].begin(), c[i].end(), covered.begin(),
                              covered.end(), std::inserter(fresh, fresh.end()));
          rule_ii = fresh == std::set<Generator>{mu[i]};
        }
        if (rule_i || rule_ii) {
          reach[s | bit] = true;
          from[s | bit] = std::pair{s, i};
        }
      }
    }
    Mask full = (Mask{1} << n) - 1;
    if (!reach[full]) return std::nullopt;
    std::vector<std::size_t> rev;
    for (Mask s = full; s != 0; s = from[s]->first) rev.push_back(from[s]->second);
    return std::vector<std::size_t>(rev.rbegin(), rev.rend());
  }

  void run(std::size_t i) {
    if (found) return;
    if (i == pieces.size()) {
      if (auto ord = order()) {
        PosetWitness w;
        w.c = used;
        for (Generator x : letters_of(pieces)) {
          if (!used.contains(x)) w.b.insert(x);
        }
        w.mu = mu;
        w.order = std::move(*ord);
        found = std::move(w);
      }
      return;
    }
    for (Generator x : choices[i]) {
      if (used.contains(x)) continue;
      used.insert(x);
      mu.push_back(x);
      run(i + 1);
      mu.pop_back();
      used.erase(x);
    }
  }
};

ConditionReport search_poset(std::span<Word const> pieces,
                             SearchLimits const& limits) {
  ConditionReport rep{Condition::poset, Verdict::fails, std::nullopt, {}};
  auto all = letters_of(pieces);
  if (pieces.size() > all.size()) {
    rep.note = "fewer letters than pieces";
    return rep;
  }
  if (pieces.size() > limits.poset_max_pieces ||
      all.size() > limits.poset_max_letters || pieces.size() > 31) {
    rep.verdict = Verdict::inconclusive;
    rep.note = "search bounds exceeded";
    return rep;
  }
  PosetSearch s{pieces, {}, {}, {}, std::nullopt};
  for (auto const& p : pieces) {
    auto c = content(p);
    s.choices.emplace_back(c.begin(), c.end());
  }
  s.run(0);
  if (s.found) {
    rep.verdict = Verdict::holds;
    rep.witness = std::move(*s.found);
  }
  return rep;
}

}  // namespace

ConditionReport check_condition(Condition c, std::span<Word const> pieces,
                                SearchLimits const& limits) {
  for (auto const& p : pieces) {
    if (p.empty()) {
      throw DomainError("empty piece");
    }
  }
  switch (c) {
    case Condition::F1:
      return search_f1(pieces);
    case Condition::F2:
      return search_f2(pieces);
    case Condition::F3:
      return search_f3(pieces);
    case Condition::markers:
      return search_markers(pieces);
    case Condition::poset:
      return search_poset(pieces, limits);
  }
  throw DomainError("unknown condition");
}

namespace {

bool is_permutation_of_pieces(std::vector<std::size_t> const& order,
                              std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool verify(std::span<Word const> pieces, F1Witness const& w) {
  if (w.powers.size() != pieces.size()) return false;
  std::set<Generator> gens;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto [g, e] = w.powers[i];
    if (e == 0 || !gens.insert(g).second) return false;
    Word expect = power(Word{e > 0 ? pos(g) : neg(g)},
                        static_cast<std::size_t>(e > 0 ? e : -e));
    if (pieces[i] != expect) return false;
  }
  return true;
}

bool verify(std::span<Word const> pieces, F2Witness const& w) {
  if (w.contents.size() != pieces.size()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (Letter x : pieces[i]) {
      if (!w.contents[i].contains(x.gen)) return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      for (Generator x : w.contents[i]) {
        if (w.contents[j].contains(x)) return false;
      }
    }
  }
  return true;
}

bool verify(std::span<Word const> pieces, F3Witness const& w) {
  if (!is_permutation_of_pieces(w.order, pieces.size()) ||
      w.letters.size() != pieces.size()) {
    return false;
  }
  for (std::size_t k = 0; k < w.order.size(); ++k) {
    Word const& p = pieces[w.order[k]];
    Generator x = w.letters[k];
    if (occurrences(p, x) != 1) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (occurrences(pieces[w.order[j]], x) != 0) return false;
    }
  }
  return true;
}

bool verify(std::span<Word const> pieces, MarkersWitness const& w) {
  if (w.markers.size() != pieces.size()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (occurrences(pieces[i], w.markers[i]) == 0) return false;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j != i && occurrences(pieces[j], w.markers[i]) != 0) return false;
    }
  }
  return true;
}

bool verify(std::span<Word const> pieces, PosetWitness const& w) {
  std::size_t n = pieces.size();
  if (w.mu.size() != n || w.c.size() != n ||
      !is_permutation_of_pieces(w.order, n)) {
    return false;
  }
  std::set<Generator> all;
  for (auto const& p : pieces) {
    for (Letter x : p) all.insert(x.gen);
  }
  std::set<Generator> joined = w.b;
  for (Generator x : w.c) {
    if (!joined.insert(x).second) return false;  // B and C overlap
  }
  if (joined != all) return false;
  std::set<Generator> image(w.mu.begin(), w.mu.end());
  if (image != w.c) return false;
  std::set<Generator> earlier;
  for (std::size_t i : w.order) {
    std::set<Generator> ci;
    for (Letter x : pieces[i]) {
      if (w.c.contains(x.gen)) ci.insert(x.gen);
    }
    Generator m = w.mu[i];
    if (!ci.contains(m)) return false;
    bool rule_i = ci.size() == 1;
    bool rule_ii = occurrences(pieces[i], m) == 1 && !earlier.contains(m) &&
                   std::all_of(ci.begin(), ci.end(), [&](Generator x) {
                     return x == m || earlier.contains(x);
                   });
    if (!rule_i && !rule_ii) return false;
    earlier.insert(ci.begin(), ci.end());
  }
  return true;
}

}  // namespace

bool verify_witness(Condition c, std::span<Word const> pieces,
                    ConditionWitness const& witness) {
  auto expected = static_cast<std::size_t>(c);
  if (witness.index() != expected) {
    return false;
  }
  return std::visit([&](auto const& w) { return verify(pieces, w); }, witness);
}

Bicyclic operator*(Bicyclic x, Bicyclic y) noexcept {
  // b^-m1 b^n1 b^-m2 b^n2, cancelling b b^-1 in the middle
  if (x.n >= y.m) {
    return {x.m, x.n - y.m + y.n};
  }
  return {x.m + y.m - x.n, y.n};
}

Bicyclic bicyclic_value(Word const& over_b) {
  Bicyclic v;
  for (Letter x : over_b) {
    if (x.gen != 0) {
      throw DomainError("bicyclic word over more than one generator");
    }
    v = v * (x.sign > 0 ? Bicyclic{0, 1} : Bicyclic{1, 0});
  }
  return v;
}

Word to_word(Bicyclic x) {
  return power(Word{neg(0)}, x.m) * power(Word{pos(0)}, x.n);
}

Bicyclic evaluate(BicyclicMorphism const& phi, Word const& w) {
  Bicyclic v;
  for (Letter x : w) {
    if (x.gen >= phi.size()) {
      throw DomainError("morphism has no image for a letter");
    }
    Bicyclic img = bicyclic_value(phi[x.gen]);
    v = v * (x.sign > 0 ? img : img.inverse());
  }
  return v;
}

std::optional<BicyclicMorphism> find_bicyclic_refutation(
    InverseMonoidPresentation const& p, Word const& target,
    SearchLimits const& limits) {
  std::size_t k = p.alphabet().size();
  if (k > limits.bicyclic_max_generators) {
    throw DomainError("bicyclic search over " + std::to_string(k) +
                      " generators exceeds the bound of " +
                      std::to_string(limits.bicyclic_max_generators));
  }
  if (!p.alphabet().admits(target)) {
    throw DomainError("target uses a letter outside the alphabet");
  }
  std::vector<Word> values{Word{}, Word{pos(0)}, Word{neg(0)}};
  if (limits.bicyclic_long_images) {
    values.push_back(Word{pos(0), pos(0)});
    values.push_back(Word{pos(0), neg(0)});
    values.push_back(Word{neg(0), pos(0)});
    values.push_back(Word{neg(0), neg(0)});
  }
  std::vector<Bicyclic> value_of;
  for (auto const& v : values) value_of.push_back(bicyclic_value(v));

  auto eval = [&](std::vector<std::size_t> const& digits, Word const& w) {
    Bicyclic v;
    for (Letter x : w) {
      Bicyclic img = value_of[digits[x.gen]];
      v = v * (x.sign > 0 ? img : img.inverse());
    }
    return v;
  };

  std::vector<std::size_t> digits(k, 0);
  while (true) {
    bool kills = std::all_of(p.relators().begin(), p.relators().end(),
                             [&](Word const& r) { return eval(digits, r).is_identity(); });
    if (kills && !eval(digits, target).is_identity()) {
      BicyclicMorphism phi;
      for (std::size_t d : digits) phi.push_back(values[d]);
      return phi;
    }
    std::size_t i = k;
    while (i > 0 && digits[i - 1] + 1 == values.size()) {
      digits[--i] = 0;
    }
    if (i == 0) {
      return std::nullopt;
    }
    ++digits[i - 1];
  }
}

CertificationReport certify_minimal(InverseMonoidPresentation const& p,
                                    std::vector<PieceDecomposition> const& ds,
                                    SearchLimits const& limits) {
  CertificationReport rep;
  std::map<Word, std::optional<BicyclicMorphism>> cache;
  bool all = true;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    auto pieces = ds[r].pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t len = 1; len < pieces[i].size(); ++len) {
        Word q = pieces[i].prefix(len);
        auto it = cache.find(q);
        if (it == cache.end()) {
          std::optional<BicyclicMorphism> phi;
          try {
            phi = find_bicyclic_refutation(p, q, limits);
          } catch (DomainError const& e) {
            rep.note = e.what();
          }
          it = cache.emplace(q, std::move(phi)).first;
        }
        all = all && it->second.has_value();
        rep.evidence.push_back({r, i, q, it->second});
      }
    }
  }
  rep.status = all ? Minimality::certified : Minimality::unknown;
  return rep;
}

Repackaged repackage_presentation(InverseMonoidPresentation const& p,
                                  std::vector<PieceDecomposition> const& ds,
                                  SubgroupGraph const& graph) {
  if (ds.size() != p.size()) {
    throw DomainError("one decomposition per relator expected");
  }
  auto b = basis(graph);
  std::vector<Word> rels;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    if (ds[r].relator() != p.relator(r)) {
      throw DomainError("decomposition does not match relator r" +
                        std::to_string(r + 1));
    }
    Word out;
    for (auto const& piece : ds[r].pieces()) {
      if (!piece.is_reduced()) {
        throw DomainError("hypothesis violated: piece is not freely reduced");
      }
      auto y = express(graph, piece);
      if (!y) {
        throw DomainError("piece outside the folded subgroup");
      }
      out *= substitute(*y, b);
    }
    rels.push_back(std::move(out));
  }
  return {InverseMonoidPresentation(p.kind(), p.alphabet(), std::move(rels)),
          std::move(b)};
}

bool condition_applies(Condition c, std::size_t relator_count) noexcept {
  return relator_count == 1 ||
         (c != Condition::markers && c != Condition::poset);
}

Alphabet fresh_alphabet(std::size_t n, std::string_view stem) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::string(stem) + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

UnitsReport units_presentation(InverseMonoidPresentation const& p,
                               SearchLimits const& limits) {
  UnitsReport rep;
  rep.inverse_signature = p.kind() != PresentationKind::inverse;
  rep.decompositions = benois_decompositions(p);
  rep.minimality = certify_minimal(p, rep.decompositions, limits);

  std::vector<Word> nontrivial;
  for (auto const& piece : distinct_pieces(rep.decompositions)) {
    if (!free_reduce(piece).empty()) nontrivial.push_back(piece);
  }
  auto graph = fold(nontrivial);
  rep.basis = basis(graph);

  for (Condition c : all_conditions) {
    rep.conditions.push_back(check_condition(c, rep.basis, limits));
    if (!rep.condition_used && rep.conditions.back().holds() &&
        condition_applies(c, p.size())) {
      rep.condition_used = c;
    }
  }
  if (!rep.condition_used) {
    rep.status = UnitsStatus::no_condition;
    return rep;
  }

  std::vector<Word> rels;
  for (auto const& d : rep.decompositions) {
    Word r;
    for (auto const& piece : d.pieces()) {
      auto y = express(graph, piece);
      if (!y) {
        throw DomainError("piece outside the folded subgroup");
      }
      r *= *y;
    }
    rels.push_back(free_reduce(r));
  }
  rep.units = GroupPresentation(fresh_alphabet(rep.basis.size()), std::move(rels));
  rep.status = rep.minimality.status == Minimality::certified
                   ? UnitsStatus::certified_presentation
                   : UnitsStatus::candidate_only;
  return rep;
}

MonoidUnitsReport monoid_units_presentation(InverseMonoidPresentation const& p) {
  if (p.kind() != PresentationKind::monoid) {
    throw DomainError("monoid presentation expected");
  }
  if (p.size() != 1) {
    throw DomainError(
        "monoid presentations with more than one relator are not supported");
  }
  MonoidUnitsReport rep;
  rep.code = adjan_code(p.relators());
  auto factors = factorize_over_code(p.relator(0), rep.code);
  std::map<std::size_t, Generator> letter;
  Word r;
  for (std::size_t f : factors) {
    auto [it, fresh] = letter.emplace(f, static_cast<Generator>(letter.size()));
    if (fresh) {
      rep.pieces.push_back(rep.code.words[f]);
    }
    r.push_back(pos(it->second));
  }
  rep.units = GroupPresentation(fresh_alphabet(rep.pieces.size()), {r});
  return rep;
}

}  // namespace invunits
