#include "longhom/cli.hpp"

#include <array>
#include <optional>

#include <CLI11.hpp>

#include "longhom/adapted.hpp"
#include "longhom/errors.hpp"
#include "longhom/json_io.hpp"
#include "longhom/poset.hpp"
#include "longhom/symmap.hpp"

namespace longhom {

namespace {

using json::Json;

struct SeqOptions {
  std::string dirs;
  std::string json_file;
  std::string alpha;
  std::string up;
  std::string variant;
};

struct BoundOptions {
  std::size_t max_parts = Bounds{}.max_parts;
  std::uint64_t shift_bound = Bounds{}.shift_bound;
};

void add_seq_options(CLI::App* cmd, SeqOptions& o) {
  cmd->add_option("-s,--dirs", o.dirs, "finite direction sequence, e.g. uud");
  cmd->add_option("--json", o.json_file, "direction sequence as a JSON document");
  cmd->add_option("--alpha", o.alpha, "length of the sequence, e.g. w*2 or w1");
  cmd->add_option("--up", o.up, "positions pointing up, e.g. \"[1,w)\"");
  cmd->add_option("--variant", o.variant, "expected variant: finite, countable-limit or omega1");
}

void add_bound_options(CLI::App* cmd, BoundOptions& b) {
  cmd->add_option("--max-parts", b.max_parts, "maximum number of parts of an enumerated set");
  cmd->add_option("--shift-bound", b.shift_bound, "finite offsets past each run start used as cut points");
}

DirectionSeq load_seq(const SeqOptions& o, bool normalized) {
  const int sources = !o.dirs.empty() + !o.json_file.empty() + (!o.alpha.empty() || !o.up.empty());
  if (sources == 0 && o.variant.empty()) throw ParseError("no sequence given; use -s, --json or --alpha/--up");
  if (sources > 1) throw ParseError("give exactly one of -s, --json, --alpha/--up");

  std::optional<DirectionSeq> s;
  if (!o.dirs.empty()) {
    s = DirectionSeq::from_dirs(o.dirs);
  } else if (!o.json_file.empty()) {
    s = json::seq_from_json(json::load_file(o.json_file));
  } else {
    Universe alpha = o.alpha.empty() ? Universe::omega_one() : Universe::parse(o.alpha);
    if (o.alpha.empty() && o.variant != "omega1") throw ParseError("--alpha is required unless --variant omega1 is given");
    IntervalSet up = o.up.empty() ? IntervalSet(alpha) : parse_interval_set(alpha, o.up);
    s = DirectionSeq(std::move(alpha), std::move(up));
  }
  if (normalized) s = normalize(*s);
  if (!o.variant.empty()) {
    const Variant v = variant_of(normalize(*s));
    if (to_string(v) != o.variant)
      throw DomainError("sequence of length " + s->alpha().to_string() + " has variant " + to_string(v) +
                        ", not " + o.variant);
  }
  return *s;
}

Json completeness_json(Completeness c) { return c == Completeness::Complete; }

int cmd_classes(const DirectionSeq& s, const BoundOptions& b, std::ostream& out) {
  std::vector<IntervalSet> classes;
  Completeness completeness = Completeness::Complete;
  if (s.is_finite()) {
    classes = enumerate_adapted_finite(s);
  } else {
    AdaptedFamily f = enumerate_adapted(s, {b.max_parts, b.shift_bound});
    classes = std::move(f.classes);
    completeness = f.completeness;
  }
  Json list = Json::array();
  for (const auto& w : classes) list.push_back(json::set_to_json(w));
  Json doc;
  doc["alpha"] = s.alpha().to_string();
  doc["s"] = json::seq_to_json(s);
  doc["count"] = classes.size();
  doc["complete"] = completeness_json(completeness);
  doc["classes"] = std::move(list);
  out << json::dump(doc) << '\n';
  return kExitYes;
}

int cmd_check(const DirectionSeq& s, const std::string& subset, const std::string& subset_file, std::ostream& out) {
  if (subset.empty() == subset_file.empty()) throw ParseError("give exactly one of --subset, --subset-json");
  const IntervalSet w = subset.empty() ? json::set_from_json(json::load_file(subset_file))
                                       : parse_interval_set(s.alpha(), subset);
  const AdaptedVerdict v = is_adapted(s, w);
  Json doc;
  doc["adapted"] = v.adapted;
  doc["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  out << json::dump(doc) << '\n';
  return v.adapted ? kExitYes : kExitNo;
}

SymbolicMap load_map(const DirectionSeq* s, const std::string& file, const std::string& letters, int which) {
  const std::string n = std::to_string(which);
  if (file.empty() == letters.empty()) throw ParseError("give exactly one of --map" + n + ", --labels" + n);
  if (!file.empty()) return json::map_from_json(json::load_file(file));
  if (!s) throw ParseError("--labels" + n + " needs a sequence");
  return SymbolicMap::from_letters(*s, letters);
}

int cmd_homotopic(const std::optional<DirectionSeq>& s, const std::array<std::string, 2>& files,
                  const std::array<std::string, 2>& letters, std::ostream& out, std::ostream& err) {
  const SymbolicMap m1 = load_map(s ? &*s : nullptr, files[0], letters[0], 1);
  const SymbolicMap m2 = load_map(s ? &*s : nullptr, files[1], letters[1], 2);
  if (!(m1.seq() == m2.seq())) {
    err << "longhom: the two maps are defined over different direction sequences\n";
    return kExitInconsistent;
  }
  int which = 1;
  for (const SymbolicMap* m : {&m1, &m2}) {
    const Consistency c = is_consistent(*m);
    if (!c.consistent) {
      Json doc;
      doc["consistent"] = false;
      doc["map"] = which;
      doc["boundary"] = c.boundary->to_string();
      doc["reason"] = c.reason;
      out << json::dump(doc) << '\n';
      err << "longhom: map " << which << " is inconsistent at Delta_" << c.boundary->to_string() << "\n";
      return kExitInconsistent;
    }
    ++which;
  }
  const bool same = homotopic(m1, m2);
  Json doc;
  doc["homotopic"] = same;
  doc["class1"] = json::set_to_json(verdicts(m1).cofinal_set);
  doc["class2"] = json::set_to_json(verdicts(m2).cofinal_set);
  out << json::dump(doc) << '\n';
  return same ? kExitYes : kExitNo;
}

int cmd_diag(const std::string& file, std::ostream& out) {
  if (file.empty()) throw ParseError("diag needs --json <family file>");
  const IndexedFamily family = json::family_from_json(json::load_file(file));
  const IntervalSet d = diagonal_intersection(family);
  Json doc;
  doc["diagonal"] = json::set_to_json(d);
  doc["club"] = family.universe.is_limit() ? Json(d.is_club()) : Json(nullptr);
  out << json::dump(doc) << '\n';
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy classes of maps from long surfaces to the reals"};
  app.name("longhom");
  app.require_subcommand(1);

  SeqOptions seq;
  BoundOptions bounds;
  std::string subset, subset_file, family_file;
  std::array<std::string, 2> map_files, map_letters;

  auto* classes = app.add_subcommand("classes", "enumerate adapted sets (homotopy classes)");
  add_seq_options(classes, seq);
  add_bound_options(classes, bounds);

  auto* check = app.add_subcommand("check", "decide whether a subset is adapted");
  add_seq_options(check, seq);
  check->add_option("--subset", subset, "subset as an interval expression, e.g. \"{1,2}\"");
  check->add_option("--subset-json", subset_file, "subset as an interval set JSON document");

  auto* homot = app.add_subcommand("homotopic", "decide whether two symbolic maps are homotopic");
  add_seq_options(homot, seq);
  homot->add_option("--map1", map_files[0], "first map as JSON");
  homot->add_option("--map2", map_files[1], "second map as JSON");
  homot->add_option("--labels1", map_letters[0], "first map as letters z/h/v, with -s");
  homot->add_option("--labels2", map_letters[1], "second map as letters z/h/v, with -s");

  auto* dot = app.add_subcommand("dot", "Graphviz digraph of the covering steps");
  add_seq_options(dot, seq);

  auto* diag = app.add_subcommand("diag", "diagonal intersection of an indexed family");
  diag->add_option("--json", family_file, "family as JSON")->required();

  auto* norm = app.add_subcommand("normalize", "rotate a successor length to its limit part");
  add_seq_options(norm, seq);

  std::vector<const char*> argv{"longhom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "longhom: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (classes->parsed()) return cmd_classes(load_seq(seq, true), bounds, out);
    if (check->parsed()) return cmd_check(load_seq(seq, true), subset, subset_file, out);
    if (homot->parsed()) {
      std::optional<DirectionSeq> s;
      if (!seq.dirs.empty() || !seq.json_file.empty() || !seq.alpha.empty()) s = load_seq(seq, true);
      return cmd_homotopic(s, map_files, map_letters, out, err);
    }
    if (dot->parsed()) {
      out << PosetView(load_seq(seq, true)).export_dot();
      return kExitYes;
    }
    if (diag->parsed()) return cmd_diag(family_file, out);
    if (norm->parsed()) {
      out << json::dump(json::seq_to_json(normalize(load_seq(seq, false)))) << '\n';
      return kExitYes;
    }
  } catch (const ParseError& e) {
    err << "longhom: " << e.what() << '\n';
    return kExitParse;
  } catch (const InconsistentMap& e) {
    err << "longhom: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "longhom: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::overflow_error& e) {
    err << "longhom: " << e.what() << '\n';
    return kExitBound;
  }
  return kExitParse;
}

}  // namespace longhom
