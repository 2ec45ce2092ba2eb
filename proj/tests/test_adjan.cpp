#include <random>

#include "doctest.h"
#include "invunits/adjan.hpp"
#include "invunits/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace invunits;
using fixture::w;

namespace {

Alphabet const abcd({"a", "b", "c", "d"});

std::vector<std::string> code_of(std::vector<std::string> const& rels) {
  std::vector<Word> rs;
  for (auto const& r : rels) rs.push_back(w(r, abcd));
  return fixture::rendered(adjan_code(rs).words, abcd);
}

bool in_code_monoid(Word const& x, BiprefixCode const& code) {
  try {
    factorize_over_code(x, code);
    return true;
  } catch (DomainError const&) {
    return false;
  }
}

Word random_product(std::mt19937_64& rng, BiprefixCode const& code, std::size_t k) {
  Word out;
  std::uniform_int_distribution<std::size_t> pick(0, code.words.size() - 1);
  for (std::size_t i = 0; i < k; ++i) out *= code.words[pick(rng)];
  return out;
}

}  // namespace

TEST_SUITE("adjan") {
  TEST_CASE("code examples") {
    CHECK(code_of({"bc"}) == std::vector<std::string>{"bc"});
    CHECK(code_of({"abcdacdadabbcdacd"}) == std::vector<std::string>{"abcdacdadabbcdacd"});
    CHECK(code_of({"ab", "cabd", "cdd"}) == std::vector<std::string>{"ab", "cabd", "cdd"});
    CHECK(code_of({"abab"}) == std::vector<std::string>{"ab"});
    // aba overlaps itself in a, giving pieces a and b
    CHECK(code_of({"aba"}) == std::vector<std::string>{"a", "b"});
  }

  TEST_CASE("factorization examples") {
    auto code = adjan_code(std::vector<Word>{w("abab", abcd)});
    CHECK(factorize_over_code(w("abab", abcd), code) == std::vector<std::size_t>{0, 0});
    CHECK(factorize_over_code(Word{}, code).empty());
    auto bc = adjan_code(std::vector<Word>{w("bc", abcd)});
    CHECK_THROWS_WITH_AS(factorize_over_code(w("bbcc", abcd), bc),
                         doctest::Contains("not in U(R)"), DomainError);
  }

  TEST_CASE("decompositions") {
    auto p = fixture::inverse("ohare");
    auto ds = adjan_decompositions(p);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].cuts().empty());
    CHECK(ds[0].algorithm() == Algorithm::adjan);

    auto ab = adjan_code(std::vector<Word>{w("abab", abcd)});
    CHECK(adjan_decomposition(w("abab", abcd), ab).cuts() == std::vector<std::size_t>{2});
  }

  TEST_CASE("biprefix check") {
    CHECK(is_biprefix(std::vector<Word>{w("ab", abcd), w("ba", abcd)}));
    CHECK_FALSE(is_biprefix(std::vector<Word>{w("ab", abcd), w("abc", abcd)}));
    CHECK_FALSE(is_biprefix(std::vector<Word>{w("bc", abcd), w("abc", abcd)}));
  }

  TEST_CASE("iteration guard") {
    AdjanOptions tiny{1};
    CHECK_THROWS_AS(adjan_code(std::vector<Word>{w("abab", abcd), w("cd", abcd)}, tiny),
                    DomainError);
  }

  TEST_CASE("code invariants on random relators") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      auto p = oracle::random_presentation(rng, 4, 3, 12);
      auto code = adjan_code(p.relators());
      REQUIRE_FALSE(code.words.empty());
      CHECK(is_biprefix(code.words));
      for (auto const& x : code.words) CHECK_FALSE(x.empty());

      // provenance starts at R and ends stable at the returned set
      std::set<Word> r0(p.relators().begin(), p.relators().end());
      std::set<Word> first(code.rounds.front().begin(), code.rounds.front().end());
      CHECK(first == r0);
      std::set<Word> last(code.rounds.back().begin(), code.rounds.back().end());
      CHECK(last == std::set<Word>(code.words.begin(), code.words.end()));
      if (code.rounds.size() >= 2) {
        auto const& prev = code.rounds[code.rounds.size() - 2];
        CHECK(std::set<Word>(prev.begin(), prev.end()) != last);
      }

      // every relator factorizes, and the factors concatenate back
      for (auto const& r : p.relators()) {
        auto idx = factorize_over_code(r, code);
        Word back;
        for (auto i : idx) back *= code.words[i];
        CHECK(back == r);
      }

      // property A on sampled overlaps
      for (int s = 0; s < 20; ++s) {
        Word x = random_product(rng, code, 1 + s % 3);
        Word y = random_product(rng, code, 1 + s % 2);
        for (std::size_t k = 1; k <= std::min(x.size(), y.size()); ++k) {
          Word beta = x.suffix(k);
          if (!y.starts_with(beta)) continue;
          Word alpha = x.prefix(x.size() - k);
          Word gamma = y.suffix(y.size() - k);
          CHECK(in_code_monoid(alpha, code));
          CHECK(in_code_monoid(beta, code));
          CHECK(in_code_monoid(gamma, code));
        }
      }
    }
  }
}
