#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "invunits/adjan.hpp"
#include "invunits/foldings.hpp"
#include "invunits/pieces.hpp"
#include "invunits/presentations.hpp"
#include "invunits/words.hpp"

namespace invunits {

struct SearchLimits {
  std::size_t bicyclic_max_generators = 12;
  bool bicyclic_long_images = false;  // also try b^2, b b^-1, b^-1 b, b^-2
  std::size_t poset_max_pieces = 6;
  std::size_t poset_max_letters = 8;
};

enum class Condition { F1, F2, F3, markers, poset };
inline constexpr Condition all_conditions[] = {
    Condition::F1, Condition::F2, Condition::F3, Condition::markers,
    Condition::poset};

std::string_view condition_name(Condition c) noexcept;

// A generator counts once per occurrence of x or x^-1.

struct F1Witness {
  std::vector<std::pair<Generator, long>> powers;  // piece i = gen^exp
};
struct F2Witness {
  std::vector<std::set<Generator>> contents;
};
struct F3Witness {
  std::vector<std::size_t> order;     // piece indices, first to last
  std::vector<Generator> letters;     // distinguished letter of order[k]
};
struct MarkersWitness {
  std::vector<Generator> markers;     // per piece
};
struct PosetWitness {
  std::set<Generator> b;
  std::set<Generator> c;
  std::vector<Generator> mu;          // per piece, a bijection onto c
  std::vector<std::size_t> order;
};

using ConditionWitness =
    std::variant<F1Witness, F2Witness, F3Witness, MarkersWitness, PosetWitness>;

enum class Verdict { holds, fails, inconclusive };
std::string_view verdict_name(Verdict v) noexcept;

struct ConditionReport {
  Condition condition;
  Verdict verdict = Verdict::fails;
  std::optional<ConditionWitness> witness;
  std::string note;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

// Throws DomainError on an empty piece.
ConditionReport check_condition(Condition c, std::span<Word const> pieces,
                                SearchLimits const& limits = {});

// Rechecks a witness against the definition of the condition.
bool verify_witness(Condition c, std::span<Word const> pieces,
                    ConditionWitness const& witness);

// Words over one generator b (index 0) reduced in the bicyclic monoid
// Inv<b | b b^-1 = 1>, whose normal forms are b^-m b^n.
struct Bicyclic {
  std::size_t m = 0;
  std::size_t n = 0;

  bool is_identity() const noexcept { return m == 0 && n == 0; }
  Bicyclic inverse() const noexcept { return {n, m}; }
  friend Bicyclic operator*(Bicyclic x, Bicyclic y) noexcept;
  bool operator==(Bicyclic const&) const = default;
};
Bicyclic bicyclic_value(Word const& over_b);
Word to_word(Bicyclic x);

// Generator images, each a word over b.
using BicyclicMorphism = std::vector<Word>;

Bicyclic evaluate(BicyclicMorphism const& phi, Word const& w);

// The first morphism, in lexicographic order of images (1 < b < b^-1, the
// first generator most significant), killing every relator but not target.
// Throws DomainError when the alphabet exceeds the configured bound.
std::optional<BicyclicMorphism> find_bicyclic_refutation(
    InverseMonoidPresentation const& p, Word const& target,
    SearchLimits const& limits = {});

enum class Minimality { certified, unknown };
std::string_view minimality_name(Minimality m) noexcept;

struct PrefixEvidence {
  std::size_t relator;
  std::size_t piece;
  Word prefix;
  std::optional<BicyclicMorphism> refutation;
};

struct CertificationReport {
  Minimality status = Minimality::unknown;
  std::vector<PrefixEvidence> evidence;
  std::string note;
};

// Refutes every proper nonempty prefix of every piece.
CertificationReport certify_minimal(InverseMonoidPresentation const& p,
                                    std::vector<PieceDecomposition> const& ds,
                                    SearchLimits const& limits = {});

struct Repackaged {
  InverseMonoidPresentation presentation;
  std::vector<Word> pieces;
};

// Rewrites every relator as a product of basis words, without reduction.
// Throws DomainError ("hypothesis violated") on an unreduced piece.
Repackaged repackage_presentation(InverseMonoidPresentation const& p,
                                  std::vector<PieceDecomposition> const& ds,
                                  SubgroupGraph const& graph);

enum class UnitsStatus { certified_presentation, candidate_only, no_condition };
std::string_view status_name(UnitsStatus s) noexcept;

struct UnitsReport {
  bool inverse_signature = false;  // the input was not an inverse presentation
  std::vector<PieceDecomposition> decompositions;
  CertificationReport minimality;
  std::vector<Word> basis;
  std::vector<ConditionReport> conditions;
  std::optional<Condition> condition_used;
  std::optional<GroupPresentation> units;
  UnitsStatus status = UnitsStatus::no_condition;
};

// Markers and Poset only qualify for one-relator presentations.
bool condition_applies(Condition c, std::size_t relator_count) noexcept;

UnitsReport units_presentation(InverseMonoidPresentation const& p,
                               SearchLimits const& limits = {});

struct MonoidUnitsReport {
  BiprefixCode code;
  std::vector<Word> pieces;  // distinct, in order of appearance
  GroupPresentation units;
};

// Special one-relator monoids only; throws DomainError otherwise.
MonoidUnitsReport monoid_units_presentation(InverseMonoidPresentation const& p);

// Alphabet x1, ..., xn.
Alphabet fresh_alphabet(std::size_t n, std::string_view stem = "x");

}  // namespace invunits
