#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "invunits/pieces.hpp"
#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace invunits {

// Letters are treated as opaque symbols of the doubled alphabet; no free
// reduction takes place.
struct BiprefixCode {
  std::vector<Word> words;               // the final set, sorted
  std::vector<std::vector<Word>> rounds;  // W_0, ..., W_n with W_n stable

  std::size_t round_count() const noexcept {
    return rounds.empty() ? 0 : rounds.size() - 1;
  }
};

struct AdjanOptions {
  std::size_t max_set_size = 10000;
};

BiprefixCode adjan_code(std::span<Word const> relators, AdjanOptions opts = {});

// Indices into code.words. Throws DomainError ("not in U(R)") when w is not
// a product of code words.
std::vector<std::size_t> factorize_over_code(Word const& w,
                                             BiprefixCode const& code);

bool is_biprefix(std::span<Word const> words);

PieceDecomposition adjan_decomposition(Word const& relator,
                                       BiprefixCode const& code);
std::vector<PieceDecomposition> adjan_decompositions(
    InverseMonoidPresentation const& p, AdjanOptions opts = {});

}  // namespace invunits
