#include "invunits/adjan.hpp"

#include <set>
#include <unordered_set>

#include "invunits/errors.hpp"

namespace invunits {

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

std::set<Word> next_round(std::set<Word> const& w) {
  WordSet pref, prop_pref, suff, prop_suff;
  for (auto const& x : w) {
    for (std::size_t k = 1; k <= x.size(); ++k) {
      pref.insert(x.prefix(k));
      suff.insert(x.suffix(k));
      if (k < x.size()) {
        prop_pref.insert(x.prefix(k));
        prop_suff.insert(x.suffix(k));
      }
    }
  }
  std::set<Word> out;

  for (auto const& u : w) {
    bool keep = true;
    for (auto const& v : w) {
      if (v != u && (u.starts_with(v) || u.ends_with(v))) {
        keep = false;
        break;
      }
    }
    if (keep) {
      out.insert(u);
    }
  }
  for (auto const& u : pref) {
    if ((prop_pref.contains(u) && suff.contains(u)) || prop_suff.contains(u)) {
      out.insert(u);
    }
  }
  for (auto const& x : w) {
    for (std::size_t k = 1; k < x.size(); ++k) {
      if (pref.contains(x.suffix(x.size() - k))) {
        out.insert(x.prefix(k));
      }
      if (suff.contains(x.prefix(k))) {
        out.insert(x.suffix(x.size() - k));
      }
    }
  }
  return out;
}

}  // namespace

BiprefixCode adjan_code(std::span<Word const> relators, AdjanOptions opts) {
  std::set<Word> w;
  for (auto const& r : relators) {
    if (r.empty()) {
      throw DomainError("empty relator");
    }
    w.insert(r);
  }
  BiprefixCode code;
  code.rounds.emplace_back(w.begin(), w.end());
  while (true) {
    auto next = next_round(w);
    if (next.size() > opts.max_set_size) {
      throw DomainError("overlap iteration exceeded " +
                        std::to_string(opts.max_set_size) + " words");
    }
    if (next == w) {
      break;
    }
    w = std::move(next);
    code.rounds.emplace_back(w.begin(), w.end());
  }
  code.words.assign(w.begin(), w.end());
  return code;
}

std::vector<std::size_t> factorize_over_code(Word const& w,
                                             BiprefixCode const& code) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  while (at < w.size()) {
    bool matched = false;
    for (std::size_t i = 0; i < code.words.size(); ++i) {
      auto const& c = code.words[i];
      if (c.size() <= w.size() - at && w.subword(at, c.size()) == c) {
        out.push_back(i);
        at += c.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw DomainError("not in U(R): no code word matches at position " +
                        std::to_string(at));
    }
  }
  return out;
}

bool is_biprefix(std::span<Word const> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && (words[i].starts_with(words[j]) ||
                     words[i].ends_with(words[j]))) {
        return false;
      }
    }
  }
  return true;
}

PieceDecomposition adjan_decomposition(Word const& relator,
                                       BiprefixCode const& code) {
  auto factors = factorize_over_code(relator, code);
  std::vector<std::size_t> cuts;
  std::size_t at = 0;
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    at += code.words[factors[k]].size();
    cuts.push_back(at);
  }
  return PieceDecomposition(relator, std::move(cuts), Algorithm::adjan);
}

std::vector<PieceDecomposition> adjan_decompositions(
    InverseMonoidPresentation const& p, AdjanOptions opts) {
  auto code = adjan_code(p.relators(), opts);
  std::vector<PieceDecomposition> out;
  for (auto const& r : p.relators()) {
    out.push_back(adjan_decomposition(r, code));
  }
  return out;
}

}  // namespace invunits
