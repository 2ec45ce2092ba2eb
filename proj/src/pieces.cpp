#include "invunits/pieces.hpp"

#include <algorithm>

#include "invunits/errors.hpp"

namespace invunits {

std::string_view algorithm_name(Algorithm a) noexcept {
  return a == Algorithm::adjan ? "adjan" : "benois";
}

PieceDecomposition::PieceDecomposition(Word relator,
                                       std::vector<std::size_t> cuts,
                                       Algorithm algorithm)
    : _relator(std::move(relator)), _cuts(std::move(cuts)), _algorithm(algorithm) {
  std::size_t last = 0;
  for (std::size_t c : _cuts) {
    if (c <= last || c >= _relator.size()) {
      throw DomainError("cut positions must increase strictly inside the relator");
    }
    last = c;
  }
}

std::vector<Word> PieceDecomposition::pieces() const {
  std::vector<Word> out;
  std::size_t start = 0;
  for (std::size_t c : _cuts) {
    out.push_back(_relator.subword(start, c - start));
    start = c;
  }
  out.push_back(_relator.subword(start, _relator.size() - start));
  return out;
}

bool refines(PieceDecomposition const& fine, PieceDecomposition const& coarse) {
  if (fine.relator() != coarse.relator()) {
    throw DomainError("decompositions of different relators");
  }
  return std::includes(fine.cuts().begin(), fine.cuts().end(),
                       coarse.cuts().begin(), coarse.cuts().end());
}

std::vector<Word> distinct_pieces(std::vector<PieceDecomposition> const& ds) {
  std::vector<Word> out;
  for (auto const& d : ds) {
    for (auto& p : d.pieces()) {
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace invunits
