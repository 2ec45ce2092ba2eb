#include "invunits/serialize.hpp"

#include "invunits/errors.hpp"

namespace invunits {

namespace {

Json words_json(std::vector<Word> const& ws, Alphabet const& a) {
  Json out = Json::array();
  for (auto const& w : ws) out.push_back(render(w, a));
  return out;
}

Json relators_json(std::vector<Word> const& rels, Alphabet const& a) {
  Json out = Json::array();
  for (auto const& r : rels) {
    Json letters = Json::array();
    for (Letter x : r) {
      letters.push_back({{"gen", a.name(x.gen)}, {"sign", x.sign}});
    }
    out.push_back(std::move(letters));
  }
  return out;
}

Json presentation_json(PresentationKind kind, Alphabet const& a,
                       std::vector<Word> const& rels) {
  return {{"kind", kind_name(kind)},
          {"generators", a.names()},
          {"relators", relators_json(rels, a)}};
}

struct Decoded {
  PresentationKind kind;
  Alphabet alphabet;
  std::vector<Word> relators;
};

Decoded decode(Json const& j) {
  try {
    auto kind = parse_kind(j.at("kind").get<std::string>());
    Alphabet a(j.at("generators").get<std::vector<std::string>>());
    std::vector<Word> rels;
    for (auto const& r : j.at("relators")) {
      Word w;
      for (auto const& x : r) {
        int sign = x.at("sign").get<int>();
        if (sign != 1 && sign != -1) {
          throw ParseError("letter sign must be 1 or -1");
        }
        w.push_back({a.index(x.at("gen").get<std::string>()), sign});
      }
      rels.push_back(std::move(w));
    }
    return {kind, std::move(a), std::move(rels)};
  } catch (Json::exception const& e) {
    throw ParseError(std::string("malformed presentation JSON: ") + e.what());
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
}

Json morphism_json(BicyclicMorphism const& phi, Alphabet const& a) {
  static Alphabet const b({"b"});
  Json out = Json::object();
  for (std::size_t g = 0; g < phi.size(); ++g) {
    out[a.name(static_cast<Generator>(g))] = render(phi[g], b);
  }
  return out;
}

Json letters_json(std::set<Generator> const& s, Alphabet const& a) {
  Json out = Json::array();
  for (Generator g : s) out.push_back(a.name(g));
  return out;
}

}  // namespace

Json to_json(Word const& w, Alphabet const& a) { return render(w, a); }

Json to_json(InverseMonoidPresentation const& p) {
  return presentation_json(p.kind(), p.alphabet(), p.relators());
}

Json to_json(GroupPresentation const& p) {
  return presentation_json(PresentationKind::group, p.alphabet(), p.relators());
}

InverseMonoidPresentation inverse_presentation_from_json(Json const& j) {
  auto d = decode(j);
  try {
    return InverseMonoidPresentation(d.kind, std::move(d.alphabet),
                                     std::move(d.relators));
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
}

GroupPresentation group_presentation_from_json(Json const& j) {
  auto d = decode(j);
  if (d.kind != PresentationKind::group) {
    throw ParseError("expected kind grp");
  }
  return GroupPresentation(std::move(d.alphabet), std::move(d.relators));
}

Json to_json(BiprefixCode const& code, std::vector<Word> const& relators,
             Alphabet const& a) {
  Json fact = Json::object();
  for (std::size_t i = 0; i < relators.size(); ++i) {
    fact[std::to_string(i + 1)] = factorize_over_code(relators[i], code);
  }
  return {{"code", words_json(code.words, a)},
          {"rounds", code.round_count()},
          {"factorizations", std::move(fact)}};
}

Json to_json(PieceDecomposition const& d, std::size_t relator_number,
             Alphabet const& a) {
  return {{"relator", relator_number},
          {"cuts", d.cuts()},
          {"pieces", words_json(d.pieces(), a)},
          {"algorithm", algorithm_name(d.algorithm())}};
}

Json to_json(SubgroupGraph const& g, Alphabet const& a) {
  Json edges = Json::array();
  for (auto const& e : g.edges()) {
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"label", a.name(e.label)}});
  }
  return {{"vertices", g.vertex_count()},
          {"basepoint", 0},
          {"edges", std::move(edges)},
          {"tree_edges", g.tree_edges()},
          {"basis_edges", g.basis_edges()},
          {"rank", g.rank()},
          {"basis", words_json(basis(g), a)}};
}

Json to_json(ConditionReport const& r, Alphabet const& a) {
  Json out = {{"condition", condition_name(r.condition)},
              {"verdict", verdict_name(r.verdict)},
              {"holds", r.holds()}};
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.witness) return out;
  out["witness"] = std::visit(
      [&](auto const& w) -> Json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, F1Witness>) {
          Json j = Json::array();
          for (auto [g, e] : w.powers) j.push_back({{"gen", a.name(g)}, {"exponent", e}});
          return j;
        } else if constexpr (std::is_same_v<W, F2Witness>) {
          Json j = Json::array();
          for (auto const& s : w.contents) j.push_back(letters_json(s, a));
          return j;
        } else if constexpr (std::is_same_v<W, F3Witness>) {
          Json j = Json::array();
          for (std::size_t k = 0; k < w.order.size(); ++k) {
            j.push_back({{"piece", w.order[k] + 1}, {"letter", a.name(w.letters[k])}});
          }
          return j;
        } else if constexpr (std::is_same_v<W, MarkersWitness>) {
          Json j = Json::array();
          for (Generator g : w.markers) j.push_back(a.name(g));
          return j;
        } else {
          Json mu = Json::array();
          for (Generator g : w.mu) mu.push_back(a.name(g));
          Json order = Json::array();
          for (std::size_t i : w.order) order.push_back(i + 1);
          return {{"B", letters_json(w.b, a)},
                  {"C", letters_json(w.c, a)},
                  {"mu", std::move(mu)},
                  {"order", std::move(order)}};
        }
      },
      *r.witness);
  return out;
}

Json to_json(CertificationReport const& r, Alphabet const& a) {
  Json ev = Json::array();
  for (auto const& e : r.evidence) {
    Json item = {{"relator", e.relator + 1},
                 {"piece", e.piece + 1},
                 {"prefix", render(e.prefix, a)}};
    item["refutation"] = e.refutation ? morphism_json(*e.refutation, a) : Json();
    ev.push_back(std::move(item));
  }
  Json out = {{"status", minimality_name(r.status)}, {"evidence", std::move(ev)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(UnitsReport const& r, Alphabet const& a) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < r.decompositions.size(); ++i) {
    pieces.push_back(to_json(r.decompositions[i], i + 1, a));
  }
  Json conds = Json::array();
  for (auto const& c : r.conditions) conds.push_back(to_json(c, a));
  Json out = {{"analysis", r.inverse_signature ? "inverse-signature" : "inverse"},
              {"pieces", std::move(pieces)},
              {"minimality", to_json(r.minimality, a)},
              {"basis", words_json(r.basis, a)},
              {"conditions", std::move(conds)}};
  out["conditionUsed"] =
      r.condition_used ? Json(condition_name(*r.condition_used)) : Json();
  out["unitsPresentation"] = r.units ? to_json(*r.units) : Json();
  out["status"] = status_name(r.status);
  return out;
}

Json to_json(MonoidUnitsReport const& r, Alphabet const& a) {
  return {{"code", words_json(r.code.words, a)},
          {"rounds", r.code.round_count()},
          {"pieces", words_json(r.pieces, a)},
          {"unitsPresentation", to_json(r.units)}};
}

}  // namespace invunits
