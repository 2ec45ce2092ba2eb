#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invunits/constructions.hpp"
#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace fixture {

inline invunits::InverseMonoidPresentation inverse(std::string_view name) {
  return std::get<invunits::InverseMonoidPresentation>(invunits::catalog(name));
}

inline invunits::Word w(std::string_view text, invunits::Alphabet const& a) {
  return invunits::parse_word(text, a);
}

inline std::vector<std::string> rendered(std::vector<invunits::Word> const& ws,
                                         invunits::Alphabet const& a) {
  std::vector<std::string> out;
  for (auto const& x : ws) out.push_back(invunits::render(x, a, invunits::WordStyle::compact));
  return out;
}

}  // namespace fixture
