// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "invunits/adjan.hpp"
#include "invunits/benois.hpp"
#include "invunits/constructions.hpp"
#include "invunits/errors.hpp"
#include "invunits/foldings.hpp"
#include "invunits/presentations.hpp"
#include "invunits/units.hpp"
#include "invunits/words.hpp"
#include "support/oracles.hpp"

using namespace invunits;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<bool(std::ostream&)> check;
};

InverseMonoidPresentation inverse_entry(std::string_view name) {
  return std::get<InverseMonoidPresentation>(catalog(name));
}

std::string compact(std::vector<Word> const& ws, Alphabet const& a) {
  std::string out;
  for (auto const& w : ws) {
    if (!out.empty()) out += " | ";
    out += render(w, a, WordStyle::compact);
  }
  return out;
}

std::vector<InverseMonoidPresentation> refinement_corpus() {
  std::mt19937_64 rng(2024);
  std::vector<InverseMonoidPresentation> out;
  for (int i = 0; i < 200; ++i) out.push_back(oracle::random_presentation(rng, 4, 3, 12));
  return out;
}

// Relator lengths add up to at most 10.
std::vector<InverseMonoidPresentation> oracle_corpus() {
  std::mt19937_64 rng(7);
  std::vector<InverseMonoidPresentation> out;
  while (out.size() < 50) {
    std::size_t gens = 1 + rng() % 3;
    std::size_t rels = 1 + rng() % 3;
    std::size_t budget = 10;
    std::vector<Word> rs;
    for (std::size_t i = 0; i < rels && budget > 0; ++i) {
      std::size_t len = 1 + rng() % std::min<std::size_t>(budget, 6);
      budget -= len;
      rs.push_back(oracle::random_word(rng, gens, len));
    }
    out.emplace_back(PresentationKind::inverse, oracle::letters(gens), rs);
  }
  return out;
}

bool ohare_benois(std::ostream& log) {
  auto p = inverse_entry("ohare");
  auto d = benois_decomposition(p.relator(0), build_saturated_automaton(build_sigma(p)));
  std::string got = compact(d.pieces(), p.alphabet());
  log << got;
  return got == "abcd | acd | ad | abbcd | acd";
}

bool ohare_adjan(std::ostream& log) {
  auto p = inverse_entry("ohare");
  auto code = adjan_code(p.relators());
  log << code.words.size() << " code word(s)";
  return code.words == p.relators() &&
         factorize_over_code(p.relator(0), code) == std::vector<std::size_t>{0};
}

bool refinement(std::ostream& log) {
  std::size_t relators = 0, violations = 0;
  for (auto const& p : refinement_corpus()) {
    auto bs = benois_decompositions(p);
    auto as = adjan_decompositions(p);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      ++relators;
      if (!refines(bs[i], as[i])) ++violations;
    }
  }
  log << relators << " relators, " << violations << " violations";
  return violations == 0 && relators >= 200;
}

bool section3_units(std::ostream& log) {
  auto r = units_presentation(inverse_entry("section3-example"));
  if (!r.units) return false;
  // x1 -> x, x2 -> t
  Alphabet xt({"x", "t"});
  GroupPresentation expect(xt, {parse_word("x t t x t t t x t t x", xt)});
  GroupPresentation renamed(xt, r.units->relators());
  log << status_name(r.status) << ", " << render(renamed.relators()[0], xt, WordStyle::compact);
  return r.units->rank() == 2 && renamed == expect &&
         r.status == UnitsStatus::certified_presentation;
}

bool ohare_units(std::ostream& log) {
  auto r = units_presentation(inverse_entry("ohare"));
  if (!r.units) return false;
  Alphabet xyz({"x", "y", "z"});
  GroupPresentation expect(xyz, {parse_word("x y z y z z x x y z y z", xyz)});
  GroupPresentation renamed(xyz, r.units->relators());
  bool emitted = r.units->rank() == 3 && renamed == expect &&
                 r.status == UnitsStatus::certified_presentation;
  auto simplified = replay_tietze(renamed,
                                  "introduce t = y z\n"
                                  "substitute y z -> t\n"
                                  "eliminate y\n"
                                  "eliminate z\n");
  log << status_name(r.status) << ", after script: rank " << simplified.rank() << ", "
      << simplified.relators().size() << " relators";
  return emitted && simplified.rank() == 2 && simplified.relators().empty() &&
         is_free_presentation(simplified);
}

bool same_subgroup(std::vector<Word> const& x, std::vector<Word> const& y) {
  auto gx = fold(x), gy = fold(y);
  return std::all_of(x.begin(), x.end(), [&](Word const& u) { return contains(gy, u); }) &&
         std::all_of(y.begin(), y.end(), [&](Word const& u) { return contains(gx, u); });
}

bool basis_fixtures(std::ostream& log) {
  Alphabet abcd({"a", "b", "c", "d"});
  auto ws = [&](std::initializer_list<char const*> ts) {
    std::vector<Word> out;
    for (auto t : ts) out.push_back(parse_word(t, abcd));
    return out;
  };
  auto s3 = fold(ws({"a", "bccB", "bcccB"}));
  auto oh = fold(ws({"abcd", "acd", "ad", "abbcd"}));
  log << "ranks " << s3.rank() << " and " << oh.rank();
  return s3.rank() == 2 && same_subgroup(basis(s3), ws({"a", "bcB"})) && oh.rank() == 3 &&
         same_subgroup(basis(oh), ws({"abA", "acA", "ad"}));
}

bool higman_control(std::ostream& log) {
  auto h = higman_set();
  int held = 0;
  for (Condition c : all_conditions) held += check_condition(c, h).holds();
  Alphabet ab({"a", "b"});
  Word a = parse_word("a", ab);
  auto fix = rewrite_to_fixpoint(power(a, 8) * parse_word("b", ab), parse_word("aab", ab),
                                 parse_word("baaa", ab));
  log << held << " condition(s) hold, rewriting took " << fix.steps << " steps";
  return held == 0 && fix.steps == 4 && fix.word == parse_word("b", ab) * power(a, 12);
}

bool constructions(std::ostream& log) {
  bool ok = true;
  for (auto name : {"surface-units", "grunewald"}) {
    auto spec = catalog_spec(name);
    auto m = build_mqw(spec);
    Generator t = static_cast<Generator>(spec.alphabet.size());
    bool reduces = free_reduce(f_word(spec)).empty();
    bool counts = m.size() == spec.q.size() &&
                  build_alt_presentation(spec).size() ==
                      spec.q.size() + 2 * spec.alphabet.size() + spec.w.size();
    auto pos = positive_form(m, {spec.t});
    bool positive = std::all_of(pos.relators().begin(), pos.relators().end(),
                                [](Word const& r) { return r.is_positive(); });
    auto phi = find_bicyclic_refutation(m, Word{invunits::pos(t)});
    bool refuted = false;
    if (phi) {
      refuted = oracle::bicyclic_normal_form(substitute(Word{invunits::pos(t)}, *phi)).size() > 0;
      for (auto const& r : m.relators()) {
        refuted = refuted && oracle::bicyclic_normal_form(substitute(r, *phi)).empty();
      }
    }
    log << name << ": " << (reduces && counts && positive && refuted ? "ok" : "broken") << "; ";
    ok = ok && reduces && counts && positive && refuted;
  }
  auto g = inverse_entry("grunewald");
  Generator t = *g.alphabet().find("t");
  bool displayed = g.size() == 19 &&
                   std::all_of(g.relators().begin(), g.relators().end(),
                               [](Word const& r) { return r.is_positive(); }) &&
                   find_bicyclic_refutation(g, Word{pos(t)}).has_value();
  log << "displayed presentation: " << (displayed ? "ok" : "broken");
  return ok && displayed;
}

// Every word of length at most `depth`, walked as a trie; dead branches of
// both recognisers are pruned since the language is prefix closed.
struct Walk {
  SaturatedAutomaton const& aut;
  oracle::ClosureOracle const& brute;
  std::function<bool(Word const&)> deeper;  // second opinion from a wider closure
  std::size_t gens;
  std::size_t words = 0;
  std::size_t rechecked = 0;
  std::size_t mismatches = 0;

  void run(Word& w, StateSet const& s, oracle::ClosureOracle::States o, std::size_t depth) {
    ++words;
    bool a = aut.accepting(s);
    bool b = oracle::ClosureOracle::alive(o);
    if (a && !b) {
      ++rechecked;
      b = deeper(w);
    }
    if (a != b) ++mismatches;
    if (!a || depth == 0) return;
    for (Generator g = 0; g < gens; ++g) {
      for (Letter x : {pos(g), neg(g)}) {
        w.push_back(x);
        run(w, aut.step(s, x), brute.step(o, x), depth - 1);
        w.pop_back();
      }
    }
  }
};

bool saturation_oracle(std::ostream& log) {
  std::size_t words = 0, rechecked = 0, mismatches = 0;
  for (auto const& p : oracle_corpus()) {
    auto aut = build_saturated_automaton(build_sigma(p));
    std::size_t gens = p.alphabet().size();
    oracle::ClosureOracle brute(p.relators(), gens, 4);
    std::vector<std::unique_ptr<oracle::ClosureOracle>> wide;
    auto deeper = [&](Word const& w) {
      if (wide.empty()) {
        for (std::size_t depth : {4, 6}) {
          wide.push_back(std::make_unique<oracle::ClosureOracle>(
              p.relators(), gens, depth, oracle::ClosureOracle::Bound::nesting));
        }
      }
      return std::any_of(wide.begin(), wide.end(), [&](auto const& o) { return o->accepts(w); });
    };
    Walk walk{aut, brute, deeper, gens};
    Word w;
    walk.run(w, aut.start(), brute.start(), 8);
    words += walk.words;
    rechecked += walk.rechecked;
    mismatches += walk.mismatches;
  }
  log << words << " words checked, " << rechecked << " rechecked with a wider closure, "
      << mismatches << " discrepancies";
  return mismatches == 0;
}

bool property_suites(std::ostream& log) {
  std::mt19937_64 rng(99);
  std::size_t failures = 0;

  for (int i = 0; i < 500; ++i) {
    Word w = oracle::random_word(rng, 3, rng() % 21);
    Word r = free_reduce(w);
    for (int k = 0; k < 4; ++k) failures += oracle::reduce_randomly(w, rng) != r;
  }

  for (int i = 0; i < 200; ++i) {
    std::vector<Word> gens;
    while (gens.size() < 1 + i % 3) {
      Word g = free_reduce(oracle::random_word(rng, 3, 1 + rng() % 6));
      if (!g.empty()) gens.push_back(g);
    }
    auto ref = fold(gens);
    std::vector<GraphEdge> edges;
    std::size_t n = 1;
    for (auto const& g : gens) {
      std::size_t prev = 0;
      for (std::size_t k = 0; k < g.size(); ++k) {
        std::size_t next = k + 1 == g.size() ? 0 : n++;
        if (g[k].sign > 0) edges.push_back({prev, next, g[k].gen});
        else edges.push_back({next, prev, g[k].gen});
        prev = next;
      }
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    auto other = fold_graph(n, edges);
    failures += other.edges() != ref.edges() || other.vertex_count() != ref.vertex_count();
    for (int k = 0; k < 20; ++k) {
      Word probe = oracle::random_word(rng, 3, rng() % 8);
      failures += contains(other, probe) != contains(ref, probe);
    }
  }

  std::size_t reports = 0;
  auto corpus = refinement_corpus();
  auto small = oracle_corpus();
  corpus.insert(corpus.end(), small.begin(), small.end());
  for (auto const& p : corpus) {
    auto code = adjan_code(p.relators());
    failures += !is_biprefix(code.words);
    for (auto const& r : p.relators()) {
      try {
        factorize_over_code(r, code);
      } catch (DomainError const&) {
        ++failures;
      }
    }
    auto rep = units_presentation(p);
    ++reports;
    if (rep.status == UnitsStatus::certified_presentation) {
      bool used_holds = false;
      for (auto const& c : rep.conditions) {
        if (rep.condition_used && c.condition == *rep.condition_used) used_holds = c.holds();
      }
      failures += !(used_holds && rep.minimality.status == Minimality::certified && rep.units);
    }
    if (rep.units) {
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        failures += free_reduce(substitute(rep.units->relators()[i], rep.basis)) !=
                    free_reduce(p.relator(i));
      }
    }
  }
  log << reports << " units reports, " << failures << " failures";
  return failures == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "O'Hare Benois pieces", 1, ohare_benois},
      {2, "O'Hare Adjan pieces", 1, ohare_adjan},
      {3, "Benois refines Adjan on 200 random presentations", 60, refinement},
      {4, "units of the one-relator x t example", 1, section3_units},
      {5, "O'Hare units and Tietze script", 1, ohare_units},
      {6, "basis fixtures", 1, basis_fixtures},
      {7, "Higman negative control and rewriting", 1, higman_control},
      {8, "construction invariants", 5, constructions},
      {9, "saturation agrees with brute-force closure", 30, saturation_oracle},
      {10, "property suites", 60, property_suites},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    std::ostringstream log;
    auto begin = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(log);
    } catch (std::exception const& e) {
      log << "threw: " << e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    bool in_time = seconds < c.limit_seconds;
    if (!in_time) log << "; over the " << c.limit_seconds << " s limit";
    bool pass = ok && in_time;
    failed += !pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " [" << timing
              << "] " << log.str() << '\n';
  }
  return failed == 0 ? 0 : 1;
}
