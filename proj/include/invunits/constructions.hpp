#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace invunits {

// Generators A = {a_1, ..., a_n}, group relators Q, words W and a stable
// letter t outside A.
struct ConstructionSpec {
  Alphabet alphabet;
  std::vector<Word> q;
  std::vector<Word> w;
  std::string t = "t";
};

// Spec files use the presentation format plus `W:` lines and a `t:` line;
// `rel:` lines give Q and may be absent.
ConstructionSpec parse_construction_spec(std::string_view text);

// u_1 u_1^-1 ... u_m u_m^-1
Word e_word(std::span<Word const> us);

// The word f over A and t (t is generator n).
Word f_word(ConstructionSpec const& spec);

void validate(ConstructionSpec const& spec);
bool inverse_closed(ConstructionSpec const& spec);

// Inv<A, t | f r_1, r_2, ..., r_m>, or Inv<A, t | f> when Q is empty.
InverseMonoidPresentation build_mqw(ConstructionSpec const& spec);

// Inv<A, t | r_i, a a^-1, a^-1 a, t w t^-1 t w^-1 t^-1>.
InverseMonoidPresentation build_alt_presentation(ConstructionSpec const& spec);

// Adds x' for each generator, writes x^-1 as x' and appends x x' and x' x
// (only x x' for generators listed as one-sided); relators already present
// are not repeated.
InverseMonoidPresentation positive_form(
    InverseMonoidPresentation const& p,
    std::set<std::string> const& one_sided = {});

using CatalogEntry = std::variant<InverseMonoidPresentation, GroupPresentation>;

std::vector<std::string> catalog_names();
bool in_catalog(std::string_view name);
CatalogEntry catalog(std::string_view name);

// Construction data behind "surface-units" and "grunewald".
ConstructionSpec catalog_spec(std::string_view name);

// The pieces {a b^-1 a^2, b, a^4} of the "higman" relator.
std::vector<Word> higman_set();

}  // namespace invunits
