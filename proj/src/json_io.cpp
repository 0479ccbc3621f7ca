#include "longhom/json_io.hpp"

#include <fstream>
#include <sstream>

#include "longhom/errors.hpp"

namespace longhom::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Ordinal ordinal_field(const Json& j, const char* key) { return parse_ordinal(text(field(j, key), key)); }

}  // namespace

Json interval_to_json(const Interval& i) {
  Json out;
  out["lo"] = i.lo.to_string();
  switch (i.kind) {
    case Interval::Hi::Tail:
      out["hi"] = "tail";
      break;
    case Interval::Hi::Inclusive:
      out["hi"] = Json{{"incl", i.hi.to_string()}};
      break;
    case Interval::Hi::Exclusive:
      out["hi"] = Json{{"excl", i.hi.to_string()}};
      break;
  }
  return out;
}

Interval interval_from_json(const Json& j) {
  Ordinal lo = ordinal_field(j, "lo");
  const Json& hi = field(j, "hi");
  if (hi.is_string()) {
    if (hi.get<std::string>() != "tail") throw ParseError("interval bound must be \"tail\" or an object");
    return Interval::tail(std::move(lo));
  }
  if (hi.is_object() && hi.size() == 1) {
    if (hi.contains("incl")) return Interval::closed(std::move(lo), ordinal_field(hi, "incl"));
    if (hi.contains("excl")) return Interval::half_open(std::move(lo), ordinal_field(hi, "excl"));
  }
  throw ParseError("interval bound must be \"tail\", {\"incl\":...} or {\"excl\":...}");
}

Json set_to_json(const IntervalSet& s) {
  Json parts = Json::array();
  for (const auto& p : s.parts()) parts.push_back(interval_to_json(p));
  Json out;
  out["universe"] = s.universe().to_string();
  out["parts"] = std::move(parts);
  return out;
}

IntervalSet parts_from_json(const Universe& u, const Json& parts) {
  if (!parts.is_array()) throw ParseError("parts must be an array");
  std::vector<Interval> items;
  for (const auto& p : parts) items.push_back(interval_from_json(p));
  return IntervalSet(u, items);
}

IntervalSet set_from_json(const Json& j) {
  const Universe u = Universe::parse(text(field(j, "universe"), "universe"));
  return parts_from_json(u, field(j, "parts"));
}

Json seq_to_json(const DirectionSeq& s) {
  Json out;
  out["alpha"] = s.alpha().to_string();
  if (s.is_finite()) {
    out["dirs"] = s.dirs();
  } else {
    Json parts = Json::array();
    for (const auto& p : s.up_set().parts()) parts.push_back(interval_to_json(p));
    out["up"] = std::move(parts);
  }
  return out;
}

DirectionSeq seq_from_json(const Json& j) {
  const Universe alpha = Universe::parse(text(field(j, "alpha"), "alpha"));
  if (j.contains("dirs")) {
    DirectionSeq s = DirectionSeq::from_dirs(text(j["dirs"], "dirs"));
    if (!(s.alpha() == alpha))
      throw DomainError("alpha " + alpha.to_string() + " disagrees with " + std::to_string(s.length()) + " directions");
    return s;
  }
  return DirectionSeq(alpha, parts_from_json(alpha, field(j, "up")));
}

Json map_to_json(const SymbolicMap& m) {
  Json labels = Json::array();
  for (const auto& r : m.runs()) {
    Json item = interval_to_json(r.where);
    item["label"] = to_string(r.label);
    labels.push_back(std::move(item));
  }
  Json out;
  out["s"] = seq_to_json(m.seq());
  out["labels"] = std::move(labels);
  return out;
}

SymbolicMap map_from_json(const Json& j) {
  DirectionSeq s = seq_from_json(field(j, "s"));
  const Json& labels = field(j, "labels");
  if (labels.is_string()) return SymbolicMap::from_letters(std::move(s), labels.get<std::string>());
  if (!labels.is_array()) throw ParseError("labels must be an array or a letter string");
  std::vector<LabelRun> runs;
  for (const auto& item : labels) runs.push_back({interval_from_json(item), parse_label(text(field(item, "label"), "label"))});
  return SymbolicMap::from_runs(std::move(s), runs);
}

Json family_to_json(const IndexedFamily& f) {
  Json pieces = Json::array();
  for (const auto& [index, set] : f.pieces) {
    Json parts = Json::array();
    for (const auto& p : set.parts()) parts.push_back(interval_to_json(p));
    Json item;
    item["index"] = interval_to_json(index);
    item["set"] = std::move(parts);
    pieces.push_back(std::move(item));
  }
  Json out;
  out["universe"] = f.universe.to_string();
  out["family"] = std::move(pieces);
  return out;
}

IndexedFamily family_from_json(const Json& j) {
  IndexedFamily f{Universe::parse(text(field(j, "universe"), "universe")), {}};
  const Json& pieces = field(j, "family");
  if (!pieces.is_array()) throw ParseError("family must be an array");
  for (const auto& item : pieces)
    f.pieces.emplace_back(interval_from_json(field(item, "index")), parts_from_json(f.universe, field(item, "set")));
  f.validate();
  return f;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace longhom::json
