#include <random>

#include "doctest.h"
#include "invunits/errors.hpp"
#include "invunits/words.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace invunits;
using fixture::w;

namespace {
Alphabet const abcd({"a", "b", "c", "d"});
}

TEST_SUITE("words") {
  TEST_CASE("free reduction examples") {
    CHECK(free_reduce(w("a a'", abcd)).empty());
    Word long_form = w("abAacAadacAadadabAabAacAadacAad", abcd);
    CHECK(free_reduce(long_form) == w("abcdacdadabbcdacd", abcd));
    Word mixed = invert(w("acd", abcd)) * w("abcd", abcd) * invert(w("abbcd", abcd));
    CHECK(free_reduce(mixed) == w("DCBA", abcd));
    CHECK(free_reduce(Word{}).empty());
  }

  TEST_CASE("inversion examples") {
    CHECK(invert(w("abcd", abcd)) == w("d' c' b' a'", abcd));
    CHECK(invert(Word{}).empty());
    CHECK(invert(w("cdd", abcd)) == w("DDC", abcd));
  }

  TEST_CASE("cyclic reduction examples") {
    auto r = cyclic_reduce(w("abcBA", abcd));
    CHECK(r.core == w("c", abcd));
    CHECK(r.conjugator == w("ab", abcd));
    Word ohare = w("abcdacdadabbcdacd", abcd);
    CHECK(cyclic_reduce(ohare).core == ohare);
    CHECK(cyclic_reduce(ohare).conjugator.empty());
    auto degenerate = cyclic_reduce(w("aA", abcd));
    CHECK(degenerate.core.empty());
    CHECK(degenerate.conjugator.empty());
  }

  TEST_CASE("substitution examples") {
    Alphabet xyz({"x", "y", "z"});
    std::vector<Word> images{w("ab", abcd), w("c", abcd)};
    CHECK(substitute(w("x y x", xyz), images) == w("abcab", abcd));

    Alphabet xt({"x", "t"});
    std::vector<Word> im2{w("a", abcd), w("bcB", abcd)};
    Word t = w("x t t x t t t x t t x", xt);
    CHECK(free_reduce(substitute(t, im2)) == w("abccBabcccBabccBa", abcd));

    std::vector<Word> im3{w("aBaa", abcd), w("b", abcd), w("aaaa", abcd)};
    CHECK(substitute(w("x y z'", xyz), im3) == w("aBaabAAAA", abcd));

    CHECK_THROWS_AS(substitute(w("x y z", xyz), im2), DomainError);
  }

  TEST_CASE("prefixes and suffixes") {
    CHECK(fixture::rendered(prefixes(w("abc", abcd)), abcd) ==
          std::vector<std::string>{"1", "a", "ab", "abc"});
    CHECK(prefixes(Word{}) == std::vector<Word>{Word{}});
    CHECK(fixture::rendered(prefixes(w("cdd", abcd)), abcd) ==
          std::vector<std::string>{"1", "c", "cd", "cdd"});
    CHECK(fixture::rendered(suffixes(w("abc", abcd)), abcd) ==
          std::vector<std::string>{"1", "c", "bc", "abc"});
  }

  TEST_CASE("leftmost rewriting") {
    Alphabet ab({"a", "b"});
    Word start = power(w("a", ab), 8) * w("b", ab);
    auto once = rewrite_leftmost(start, w("aab", ab), w("baaa", ab));
    REQUIRE(once);
    CHECK(*once == power(w("a", ab), 6) * w("b", ab) * power(w("a", ab), 3));
    auto fix = rewrite_to_fixpoint(start, w("aab", ab), w("baaa", ab));
    CHECK(fix.word == w("b", ab) * power(w("a", ab), 12));
    CHECK(fix.steps == 4);
    CHECK_FALSE(rewrite_leftmost(w("cd", abcd), w("ab", abcd), w("c", abcd)));
    CHECK_THROWS_AS(rewrite_leftmost(start, Word{}, start), DomainError);
  }

  TEST_CASE("word syntax") {
    CHECK(parse_word("a b^-1 c'", abcd) == w("aBC", abcd));
    CHECK(parse_word("1", abcd).empty());
    CHECK(render(w("aBc", abcd), abcd) == "a b' c");
    CHECK(render(w("aBc", abcd), abcd, WordStyle::compact) == "aBc");
    CHECK(render(Word{}, abcd) == "1");
    Alphabet long_names({"x1", "x2"});
    CHECK(render(parse_word("x1 x2'", long_names), long_names, WordStyle::compact) ==
          "x1 x2'");
    CHECK_THROWS_AS(parse_word("e", abcd), ParseError);
    CHECK_THROWS_AS(parse_word("x1x2", long_names), ParseError);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
    CHECK_THROWS_AS(Alphabet({"1a"}), Error);
  }

  TEST_CASE("reduction is confluent under random deletion orders") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
      std::size_t len = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
      Word x = oracle::random_word(rng, 2, len);
      Word r = free_reduce(x);
      CHECK(r.is_reduced());
      CHECK(free_reduce(r) == r);
      for (int k = 0; k < 3; ++k) CHECK(oracle::reduce_randomly(x, rng) == r);
    }
  }

  TEST_CASE("reduction is a homomorphism and inversion an anti-homomorphism") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
      Word u = oracle::random_word(rng, 3, trial % 13);
      Word v = oracle::random_word(rng, 3, (trial * 7) % 11);
      CHECK(free_reduce(u * v) == free_reduce(free_reduce(u) * free_reduce(v)));
      CHECK(free_reduce(invert(u)) == invert(free_reduce(u)));
      CHECK(invert(invert(u)) == u);
    }
  }

  TEST_CASE("cyclic reduction conjugates back") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      Word x = oracle::random_word(rng, 2, trial % 15);
      auto [core, g] = cyclic_reduce(x);
      CHECK(core.is_reduced());
      if (core.size() > 1) CHECK_FALSE(core.front().is_inverse_of(core.back()));
      CHECK(free_reduce(g * core * invert(g)) == free_reduce(x));
    }
  }

  TEST_CASE("splitting property of partial reduction") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t len = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
      Word x = oracle::random_word(rng, 2, len);
      for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (!x[i].is_inverse_of(x[i + 1])) continue;
        Word y = x.prefix(i) * x.suffix(x.size() - i - 2);
        for (std::size_t k = 0; k <= y.size(); ++k) {
          Word y1 = y.prefix(k), y2 = y.suffix(y.size() - k);
          bool found = false;
          for (std::size_t j = 0; j <= x.size() && !found; ++j) {
            found = oracle::descendants(x.prefix(j)).contains(y1) &&
                    oracle::descendants(x.suffix(x.size() - j)).contains(y2);
          }
          CHECK(found);
        }
      }
    }
  }

  TEST_CASE("substitution commutes with reduction") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
      Word tmpl = oracle::random_word(rng, 3, trial % 9);
      std::vector<Word> images;
      for (int g = 0; g < 3; ++g) images.push_back(oracle::random_word(rng, 2, trial % 5));
      std::vector<Word> reduced;
      for (auto const& im : images) reduced.push_back(free_reduce(im));
      CHECK(free_reduce(substitute(tmpl, images)) ==
            free_reduce(substitute(free_reduce(tmpl), reduced)));
    }
  }
}
