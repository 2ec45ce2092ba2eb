#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"

#include "invunits/adjan.hpp"
#include "invunits/benois.hpp"
#include "invunits/constructions.hpp"
#include "invunits/errors.hpp"
#include "invunits/foldings.hpp"
#include "invunits/serialize.hpp"
#include "invunits/units.hpp"

namespace invunits::cli {

namespace {

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::string algo = "both";
  bool json = false;
  bool compact = false;
  std::optional<std::size_t> max_search;
  std::string replay;
  std::string catalog_name;
  std::string mqw;
  std::string form = "mqw";

  WordStyle style() const { return compact ? WordStyle::compact : WordStyle::tokens; }
  bool adjan() const { return algo != "benois"; }
  bool benois() const { return algo != "adjan"; }
  SearchLimits limits() const {
    SearchLimits l;
    if (max_search) {
      l.bicyclic_max_generators = *max_search;
      l.poset_max_letters = *max_search;
    }
    return l;
  }
};

using Loaded = std::variant<InverseMonoidPresentation, GroupPresentation>;

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_group_text(std::string_view text) {
  for (auto const& rec : read_records(text)) {
    if (rec.key == "kind") return rec.value == "grp";
  }
  return false;
}

Loaded load(std::string const& ref) {
  if (!std::filesystem::exists(ref) && in_catalog(ref)) {
    return std::visit([](auto&& v) -> Loaded { return v; }, catalog(ref));
  }
  std::string text = read_file(ref);
  if (is_group_text(text)) {
    return parse_group_presentation(text);
  }
  return parse_presentation(text);
}

InverseMonoidPresentation as_inverse_input(Loaded const& l) {
  if (auto const* p = std::get_if<InverseMonoidPresentation>(&l)) return *p;
  return as_inverse(std::get<GroupPresentation>(l));
}

GroupPresentation as_group_input(Loaded const& l) {
  if (auto const* p = std::get_if<GroupPresentation>(&l)) return *p;
  return as_group(std::get<InverseMonoidPresentation>(l));
}

std::string join_pieces(PieceDecomposition const& d, Alphabet const& a,
                        WordStyle style) {
  std::string out;
  for (auto const& p : d.pieces()) {
    if (!out.empty()) out += style == WordStyle::compact && a.compact_compatible() ? "|" : " | ";
    out += render(p, a, style);
  }
  return out;
}

std::string count(std::size_t n, char const* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

void print_json(std::ostream& out, Json const& j) { out << j.dump(2) << '\n'; }

void print_decompositions(std::ostream& out, char const* label,
                          std::vector<PieceDecomposition> const& ds,
                          Alphabet const& a, WordStyle style) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << "  " << label << " r" << i + 1 << " ("
        << count(ds[i].pieces().size(), "piece") << "): "
        << join_pieces(ds[i], a, style) << '\n';
  }
}

Json decompositions_json(std::vector<PieceDecomposition> const& ds,
                         Alphabet const& a) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < ds.size(); ++i) arr.push_back(to_json(ds[i], i + 1, a));
  return arr;
}

std::string benois_label(InverseMonoidPresentation const& p) {
  return p.kind() == PresentationKind::inverse ? "inverse" : "inverse-signature";
}

void cmd_pieces(std::string const& label, Loaded const& l, Options const& o,
                std::ostream& out, bool compare) {
  auto p = as_inverse_input(l);
  auto const& a = p.alphabet();
  std::optional<BiprefixCode> code;
  std::vector<PieceDecomposition> adj, ben;
  if (o.adjan() || compare) {
    code = adjan_code(p.relators());
    for (auto const& r : p.relators()) adj.push_back(adjan_decomposition(r, *code));
  }
  if (o.benois() || compare) ben = benois_decompositions(p);
  std::vector<bool> refined;
  if (compare) {
    for (std::size_t i = 0; i < p.size(); ++i) refined.push_back(refines(ben[i], adj[i]));
  }

  if (o.json) {
    Json j = {{"input", label}};
    if (code) {
      Json aj = to_json(*code, p.relators(), a);
      aj["decompositions"] = decompositions_json(adj, a);
      j["adjan"] = std::move(aj);
    }
    if (!ben.empty()) {
      j["benois"] = {{"analysis", benois_label(p)},
                     {"decompositions", decompositions_json(ben, a)}};
    }
    if (compare) j["refines"] = refined;
    print_json(out, j);
    return;
  }
  out << label << '\n';
  if (code) print_decompositions(out, "adjan ", adj, a, o.style());
  if (!ben.empty()) {
    print_decompositions(out, "benois", ben, a, o.style());
    if (p.kind() != PresentationKind::inverse) {
      out << "  benois: inverse-signature analysis\n";
    }
  }
  for (std::size_t i = 0; i < refined.size(); ++i) {
    out << "  r" << i + 1 << ": benois refines adjan: "
        << (refined[i] ? "yes" : "no") << '\n';
  }
}

std::string morphism_text(BicyclicMorphism const& phi, Alphabet const& a) {
  static Alphabet const b({"b"});
  std::string out;
  for (std::size_t g = 0; g < phi.size(); ++g) {
    if (!out.empty()) out += ", ";
    out += a.name(static_cast<Generator>(g)) + " -> " + render(phi[g], b);
  }
  return out;
}

std::string condition_text(ConditionReport const& c, Alphabet const& a) {
  std::string out = std::string(condition_name(c.condition)) + ": " +
                    std::string(verdict_name(c.verdict));
  if (c.witness) {
    out += " " + to_json(c, a)["witness"].dump();
  }
  return out;
}

std::string replay_script(Options const& o) {
  return o.replay.empty() ? std::string() : read_file(o.replay);
}

void cmd_units(std::string const& label, Loaded const& l, Options const& o,
               std::ostream& out) {
  auto p = as_inverse_input(l);
  auto const& a = p.alphabet();
  std::string script = replay_script(o);

  if (p.kind() == PresentationKind::monoid) {
    auto rep = monoid_units_presentation(p);
    std::optional<GroupPresentation> replayed;
    if (!script.empty()) replayed = replay_tietze(rep.units, script);
    if (o.json) {
      Json j = {{"input", label}};
      j.update(to_json(rep, a));
      if (replayed) j["replay"] = to_json(*replayed);
      print_json(out, j);
      return;
    }
    out << label << '\n' << "  code:";
    for (auto const& w : rep.code.words) out << ' ' << render(w, a, o.style());
    out << "\n  units:\n" << render(rep.units, o.style());
    if (replayed) out << "  after replay:\n" << render(*replayed, o.style());
    return;
  }

  auto rep = units_presentation(p, o.limits());
  std::optional<GroupPresentation> replayed;
  if (!script.empty()) {
    if (!rep.units) {
      throw DomainError("no units presentation to replay the script on");
    }
    replayed = replay_tietze(*rep.units, script);
  }
  if (o.json) {
    Json j = {{"input", label}};
    j.update(to_json(rep, a));
    if (replayed) j["replay"] = to_json(*replayed);
    print_json(out, j);
    return;
  }
  out << label << '\n';
  if (rep.inverse_signature) out << "  analysis: inverse-signature\n";
  print_decompositions(out, "pieces", rep.decompositions, a, o.style());
  out << "  minimality: " << minimality_name(rep.minimality.status) << '\n';
  out << "  basis:";
  for (std::size_t k = 0; k < rep.basis.size(); ++k) {
    out << (k ? ", " : " ") << "x" << k + 1 << " = " << render(rep.basis[k], a, o.style());
  }
  out << '\n';
  for (auto const& c : rep.conditions) out << "  " << condition_text(c, a) << '\n';
  out << "  condition used: "
      << (rep.condition_used ? condition_name(*rep.condition_used) : "none") << '\n';
  out << "  status: " << status_name(rep.status) << '\n';
  if (rep.units) out << "  units:\n" << render(*rep.units, o.style());
  if (replayed) out << "  after replay:\n" << render(*replayed, o.style());
}

void cmd_fold(std::string const& label, Loaded const& l, Options const& o,
              std::ostream& out) {
  auto p = as_inverse_input(l);
  auto const& a = p.alphabet();
  auto ds = o.algo == "adjan" ? adjan_decompositions(p) : benois_decompositions(p);
  std::vector<Word> gens;
  for (auto const& w : distinct_pieces(ds)) {
    if (!free_reduce(w).empty()) gens.push_back(w);
  }
  auto g = fold(gens);
  if (o.json) {
    Json j = {{"input", label}, {"algorithm", o.algo == "adjan" ? "adjan" : "benois"}};
    Json pj = Json::array();
    for (auto const& w : gens) pj.push_back(render(w, a));
    j["pieces"] = std::move(pj);
    j["graph"] = to_json(g, a);
    print_json(out, j);
    return;
  }
  auto b = basis(g);
  out << label << '\n' << "  rank: " << g.rank() << '\n';
  for (std::size_t k = 0; k < b.size(); ++k) {
    out << "  y" << k + 1 << " = " << render(b[k], a, o.style()) << '\n';
  }
}

void cmd_certify(std::string const& label, Loaded const& l, Options const& o,
                 std::ostream& out) {
  auto p = as_inverse_input(l);
  auto const& a = p.alphabet();
  auto ds = benois_decompositions(p);
  auto rep = certify_minimal(p, ds, o.limits());
  if (o.json) {
    Json j = {{"input", label}};
    j.update(to_json(rep, a));
    print_json(out, j);
    return;
  }
  out << label << '\n' << "  minimality: " << minimality_name(rep.status) << '\n';
  if (!rep.note.empty()) out << "  note: " << rep.note << '\n';
  for (auto const& e : rep.evidence) {
    out << "  r" << e.relator + 1 << " piece " << e.piece + 1 << " prefix "
        << render(e.prefix, a, o.style()) << ": "
        << (e.refutation ? "refuted by " + morphism_text(*e.refutation, a)
                         : std::string("no refutation found"))
        << '\n';
  }
}

void cmd_tietze(std::string const& label, Loaded const& l, Options const& o,
                std::ostream& out) {
  if (o.replay.empty()) {
    throw DomainError("tietze needs --replay <script>");
  }
  auto p = as_group_input(l);
  auto result = replay_tietze(p, read_file(o.replay));
  bool free = is_free_presentation(result);
  if (o.json) {
    Json j = to_json(result);
    j["input"] = label;
    j["free"] = free;
    print_json(out, j);
    return;
  }
  out << "# " << label << '\n' << render(result, o.style());
  if (free) out << "# free of rank " << result.rank() << '\n';
}

void cmd_construct(Options const& o, std::ostream& out) {
  if (o.catalog_name.empty() == o.mqw.empty()) {
    throw ParseError("construct needs exactly one of --catalog or --mqw");
  }
  if (!o.catalog_name.empty()) {
    auto entry = catalog(o.catalog_name);
    std::visit(
        [&](auto const& p) {
          if (o.json) {
            print_json(out, to_json(p));
          } else {
            out << render(p, o.style());
          }
        },
        entry);
    return;
  }
  auto spec = parse_construction_spec(read_file(o.mqw));
  InverseMonoidPresentation p =
      o.form == "alt"        ? build_alt_presentation(spec)
      : o.form == "positive" ? positive_form(build_alt_presentation(spec), {spec.t})
                             : build_mqw(spec);
  bool closed = inverse_closed(spec);
  if (o.json) {
    Json j = to_json(p);
    j["wInverseClosed"] = closed;
    print_json(out, j);
    return;
  }
  out << "# W closed under inverses: " << (closed ? "yes" : "no") << '\n'
      << render(p, o.style());
}

struct Outcome {
  std::string text;
  int status = 0;
  std::string error;
};

int status_of(std::exception_ptr e, std::string& message) {
  try {
    std::rethrow_exception(e);
  } catch (ParseError const& x) {
    message = x.what();
    return 2;
  } catch (IoError const& x) {
    message = x.what();
    return 2;
  } catch (Error const& x) {
    message = x.what();
    return 1;
  } catch (std::exception const& x) {
    message = x.what();
    return 1;
  }
}

Outcome process(std::string const& ref, Options const& o) {
  Outcome result;
  std::ostringstream out;
  try {
    Loaded l = load(ref);
    if (o.command == "pieces") cmd_pieces(ref, l, o, out, false);
    else if (o.command == "compare") cmd_pieces(ref, l, o, out, true);
    else if (o.command == "units") cmd_units(ref, l, o, out);
    else if (o.command == "fold") cmd_fold(ref, l, o, out);
    else if (o.command == "certify") cmd_certify(ref, l, o, out);
    else cmd_tietze(ref, l, o, out);
  } catch (...) {
    result.status = status_of(std::current_exception(), result.error);
    result.error = ref + ": " + result.error;
  }
  result.text = out.str();
  return result;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Invertible pieces and groups of units of inverse monoids"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_inputs) {
    if (with_inputs) {
      sub->add_option("inputs", o.inputs, "Presentation files or catalog names")
          ->required();
    }
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_flag("--compact", o.compact, "Single-letter words, uppercase for inverses");
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-search", o.max_search,
                    "Alphabet bound for the bicyclic and Poset searches");
  };

  auto* pieces = app.add_subcommand("pieces", "Invertible pieces of each relator");
  add_common(pieces, true);
  pieces->add_option("--algo", o.algo, "adjan, benois or both")
      ->check(CLI::IsMember({"adjan", "benois", "both"}));
  auto* compare = app.add_subcommand("compare", "Both decompositions and refinement");
  add_common(compare, true);
  auto* units = app.add_subcommand("units", "Presentation of the group of units");
  add_common(units, true);
  add_limits(units);
  units->add_option("--replay", o.replay, "Tietze script applied to the result");
  auto* fold_cmd = app.add_subcommand("fold", "Free basis of the subgroup of pieces");
  add_common(fold_cmd, true);
  fold_cmd->add_option("--algo", o.algo, "adjan or benois pieces")
      ->check(CLI::IsMember({"adjan", "benois", "both"}));
  auto* certify = app.add_subcommand("certify", "Minimality evidence for the pieces");
  add_common(certify, true);
  add_limits(certify);
  auto* construct = app.add_subcommand("construct", "Emit a constructed presentation");
  add_common(construct, false);
  construct->add_option("--catalog", o.catalog_name, "Catalog entry name");
  construct->add_option("--mqw", o.mqw, "Construction spec file");
  construct->add_option("--form", o.form, "mqw, alt or positive")
      ->check(CLI::IsMember({"mqw", "alt", "positive"}));
  auto* tietze = app.add_subcommand("tietze", "Replay a Tietze move script");
  add_common(tietze, true);
  tietze->add_option("--replay", o.replay, "Move script")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();

  if (o.command == "construct") {
    try {
      cmd_construct(o, out);
      return 0;
    } catch (...) {
      std::string message;
      int status = status_of(std::current_exception(), message);
      err << "error: " << message << '\n';
      return status;
    }
  }

  std::vector<std::future<Outcome>> jobs;
  for (auto const& ref : o.inputs) {
    jobs.push_back(std::async(std::launch::async, process, ref, std::cref(o)));
  }
  for (auto& job : jobs) {
    Outcome r = job.get();
    out << r.text;
    if (r.status != 0) {
      err << "error: " << r.error << '\n';
      return r.status;
    }
  }
  return 0;
}

}  // namespace invunits::cli
