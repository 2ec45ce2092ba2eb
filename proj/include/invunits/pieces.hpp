#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "invunits/words.hpp"

namespace invunits {

enum class Algorithm { adjan, benois };

std::string_view algorithm_name(Algorithm a) noexcept;

// A relator cut at strictly increasing positions 0 < c_1 < ... < |r|.
class PieceDecomposition {
 public:
  PieceDecomposition(Word relator, std::vector<std::size_t> cuts,
                     Algorithm algorithm);

  Word const& relator() const noexcept { return _relator; }
  std::vector<std::size_t> const& cuts() const noexcept { return _cuts; }
  Algorithm algorithm() const noexcept { return _algorithm; }
  std::vector<Word> pieces() const;

  bool operator==(PieceDecomposition const&) const = default;

 private:
  Word _relator;
  std::vector<std::size_t> _cuts;
  Algorithm _algorithm;
};

// The cuts of coarse are all cuts of fine. Throws DomainError when the two
// decompose different relators.
bool refines(PieceDecomposition const& fine, PieceDecomposition const& coarse);

// Distinct pieces of all decompositions, in order of first appearance.
std::vector<Word> distinct_pieces(std::vector<PieceDecomposition> const& ds);

}  // namespace invunits
