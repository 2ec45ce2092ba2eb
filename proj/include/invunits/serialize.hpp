#pragma once

#include <vector>

#include "json.hpp"

#include "invunits/adjan.hpp"
#include "invunits/foldings.hpp"
#include "invunits/pieces.hpp"
#include "invunits/presentations.hpp"
#include "invunits/units.hpp"
#include "invunits/words.hpp"

namespace invunits {

using Json = nlohmann::ordered_json;

// Relators and pieces are numbered from 1 in every report.

Json to_json(Word const& w, Alphabet const& a);

// {"kind", "generators", "relators": [[{"gen", "sign"}, ...], ...]}
Json to_json(InverseMonoidPresentation const& p);
Json to_json(GroupPresentation const& p);
InverseMonoidPresentation inverse_presentation_from_json(Json const& j);
GroupPresentation group_presentation_from_json(Json const& j);

// {"code", "rounds", "factorizations"}, relators numbered from 1.
Json to_json(BiprefixCode const& code, std::vector<Word> const& relators,
             Alphabet const& a);

// {"relator", "cuts", "pieces", "algorithm"}
Json to_json(PieceDecomposition const& d, std::size_t relator_number,
             Alphabet const& a);

Json to_json(SubgroupGraph const& g, Alphabet const& a);
Json to_json(ConditionReport const& r, Alphabet const& a);
Json to_json(CertificationReport const& r, Alphabet const& a);
Json to_json(UnitsReport const& r, Alphabet const& a);
Json to_json(MonoidUnitsReport const& r, Alphabet const& a);

}  // namespace invunits
