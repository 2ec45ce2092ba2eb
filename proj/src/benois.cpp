#include "invunits/benois.hpp"

#include <algorithm>

#include "invunits/errors.hpp"

namespace invunits {

bool StateSet::empty() const noexcept {
  return std::all_of(_bits.begin(), _bits.end(),
                     [](std::uint64_t b) { return b == 0; });
}

StateSet& StateSet::operator|=(StateSet const& o) noexcept {
  for (std::size_t i = 0; i < _bits.size(); ++i) {
    _bits[i] |= o._bits[i];
  }
  return *this;
}

PrefixGenerators build_sigma(std::span<Word const> relators) {
  PrefixGenerators out;
  auto add = [&](Word const& w) {
    if (std::find(out.spine.begin(), out.spine.end(), w) == out.spine.end()) {
      out.spine.push_back(w);
    }
    for (auto& p : prefixes(w)) {
      out.sigma.insert(std::move(p));
    }
  };
  for (auto const& r : relators) {
    add(r);
    add(invert(r));
  }
  if (out.sigma.empty()) {
    out.sigma.insert(Word{});
  }
  return out;
}

PrefixGenerators build_sigma(InverseMonoidPresentation const& p) {
  return build_sigma(p.relators());
}

SaturatedAutomaton::SaturatedAutomaton(PrefixGenerators const& sigma) {
  Generator bound = 0;
  for (auto const& w : sigma.spine) {
    bound = std::max(bound, w.generator_bound());
    _state_count += w.size();
  }
  _letter_count = 2 * static_cast<std::size_t>(bound);
  _out.assign(_state_count,
              std::vector<std::vector<std::size_t>>(_letter_count));
  _closure.assign(_state_count, StateSet(_state_count));
  for (std::size_t s = 0; s < _state_count; ++s) {
    _closure[s].insert(s);
    _closure[s].insert(0);
  }
  std::size_t next = 1;
  for (auto const& w : sigma.spine) {
    std::size_t prev = 0;
    for (Letter x : w) {
      _edges.push_back({prev, x, next});
      _out[prev][code(x)].push_back(next);
      prev = next++;
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>>
SaturatedAutomaton::epsilon_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < _state_count; ++p) {
    for (std::size_t q = 0; q < _state_count; ++q) {
      if (_closure[p].contains(q)) {
        out.emplace_back(p, q);
      }
    }
  }
  return out;
}

void SaturatedAutomaton::add_epsilon(std::size_t p, std::size_t q) {
  StateSet const target = _closure[q];
  for (std::size_t s = 0; s < _state_count; ++s) {
    if (_closure[s].contains(p)) {
      _closure[s] |= target;
    }
  }
}

void SaturatedAutomaton::saturate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& e : _edges) {
      std::size_t inv = code(e.label.inverse());
      for (std::size_t q1 = 0; q1 < _state_count; ++q1) {
        if (!_closure[e.to].contains(q1)) {
          continue;
        }
        for (std::size_t q : _out[q1][inv]) {
          if (!_closure[e.from].contains(q)) {
            add_epsilon(e.from, q);
            changed = true;
          }
        }
      }
    }
  }
  _saturated = true;
}

StateSet SaturatedAutomaton::step(StateSet const& s, Letter x) const {
  StateSet out(_state_count);
  std::size_t c = code(x);
  if (c >= _letter_count) {
    return out;
  }
  for (std::size_t p = 0; p < _state_count; ++p) {
    if (s.contains(p)) {
      for (std::size_t q : _out[p][c]) {
        out |= _closure[q];
      }
    }
  }
  return out;
}

bool SaturatedAutomaton::accepts(Word const& w) const {
  StateSet s = start();
  for (Letter x : w) {
    s = step(s, x);
    if (s.empty()) {
      return false;
    }
  }
  return accepting(s);
}

SaturatedAutomaton build_saturated_automaton(PrefixGenerators const& sigma) {
  SaturatedAutomaton aut(sigma);
  aut.saturate();
  return aut;
}

bool member_V(SaturatedAutomaton const& aut, Word const& u) {
  if (!aut.saturated()) {
    throw DomainError("membership query on an unsaturated automaton");
  }
  return aut.accepts(free_reduce(u));
}

PieceDecomposition benois_decomposition(Word const& relator,
                                        SaturatedAutomaton const& aut) {
  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k < relator.size(); ++k) {
    if (member_V(aut, invert(relator.prefix(k)))) {
      cuts.push_back(k);
    }
  }
  return PieceDecomposition(relator, std::move(cuts), Algorithm::benois);
}

std::vector<PieceDecomposition> benois_decompositions(
    InverseMonoidPresentation const& p) {
  auto aut = build_saturated_automaton(build_sigma(p));
  std::vector<PieceDecomposition> out;
  for (auto const& r : p.relators()) {
    out.push_back(benois_decomposition(r, aut));
  }
  return out;
}

bool i_overlap_free(std::span<Word const> words) {
  std::vector<Word> all;
  for (auto const& w : words) {
    if (w.empty()) {
      throw DomainError("empty word in overlap test");
    }
    for (Word const& x : {w, invert(w)}) {
      if (std::find(all.begin(), all.end(), x) == all.end()) {
        all.push_back(x);
      }
    }
  }
  for (auto const& u : all) {
    for (auto const& v : all) {
      std::size_t limit = std::min(u.size(), v.size());
      for (std::size_t k = 1; k <= limit; ++k) {
        if (&u == &v && k == u.size()) {
          continue;
        }
        if (v.ends_with(u.prefix(k))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace invunits
