#include "polyadic/io.hpp"

#include <algorithm>
#include <cmath>

namespace polyadic::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) schema("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0))
    schema(std::string(what) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

int as_arity(const Json& v) {
  auto a = as_index(v, "arity");
  if (a < 2 || a > 64) schema("arity must be between 2 and 64");
  return static_cast<int>(a);
}

std::vector<Element> index_array(const Json& v, const char* what, std::size_t bound) {
  if (!v.is_array()) schema(std::string(what) + " must be an array");
  std::vector<Element> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    auto x = as_index(e, what);
    if (x >= bound) schema(std::string(what) + " entry " + std::to_string(x) + " out of range");
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::vector<std::string> names_of(const Json& doc) {
  std::vector<std::string> names;
  auto it = doc.find("names");
  if (it == doc.end()) return names;
  if (!it->is_array()) schema("names must be an array of strings");
  for (const auto& n : *it) {
    if (!n.is_string()) schema("names must be an array of strings");
    names.push_back(n.get<std::string>());
  }
  return names;
}

Json names_json(const Carrier& c) {
  Json arr = Json::array();
  for (const auto& n : c.names()) arr.push_back(n);
  return arr;
}

Json array_of(const std::vector<Element>& v) {
  Json arr = Json::array();
  for (Element x : v) arr.push_back(x);
  return arr;
}

bool is_content_error(ErrorKind k) {
  return k == ErrorKind::NotAGroup || k == ErrorKind::NotPolyadic ||
         k == ErrorKind::InvalidPresentation || k == ErrorKind::IncompatibleSystem;
}

VerificationReport error_item(const std::string& check, const Error& e) {
  VerificationReport r;
  r.check = check;
  r.fail({std::string(to_string(e.kind())) + ": " + e.what(), {}});
  return r;
}

VerificationReport validate_system_doc(const Json& doc, const CheckOptions& opts) {
  VerificationReport report;
  report.check = "system-document";
  SystemDoc sd = parse_system_doc(doc);
  for (std::size_t i = 0; i < sd.levels.size(); ++i)
    if (sd.levels[i].presentation) {
      auto v = validate_presentation_doc(*sd.levels[i].presentation);
      v.subject = "level " + sd.ids[i];
      if (v.failed()) {
        report.add_item(std::move(v));
        return report;
      }
    }
  std::optional<InverseSystem> sys;
  try {
    sys.emplace(build_system(sd, opts));
  } catch (const Error& e) {
    if (!is_content_error(e.kind())) throw;
    report.add_item(error_item("build-system", e));
    return report;
  }
  report.add_item(validate_system(*sys, opts));
  if (report.failed()) return report;
  auto covers = induced_cover_system(*sys);
  report.add_item(covers.groups.report);
  auto retracts = induced_retract_system(*sys, thread_from_top(*sys, 0));
  report.add_item(retracts.report);
  return report;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const auto scalar = [](const Json& v) { return !v.is_object() && !v.is_array(); };
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      out.append(static_cast<std::size_t>(indent + 2), ' ');
      out += Json(key).dump() + ": ";
      dump_into(v, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "}";
  } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), scalar)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out.append(static_cast<std::size_t>(indent + 2), ' ');
      dump_into(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "]";
  } else {
    out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

DocumentKind detect_kind(const Json& doc) {
  if (!doc.is_object()) return DocumentKind::Unknown;
  if (doc.contains("levels")) return DocumentKind::System;
  if (doc.contains("level") && doc.contains("subset")) return DocumentKind::Cylinder;
  if (doc.contains("table") && doc.contains("arity")) return DocumentKind::Group;
  if (doc.contains("theta") || doc.contains("presentation")) return DocumentKind::Presentation;
  return DocumentKind::Unknown;
}

PresentationDoc parse_presentation_doc(const Json& outer) {
  const Json* doc = &outer;
  std::optional<int> outer_arity;
  if (outer.is_object() && outer.contains("presentation")) {
    doc = &outer.at("presentation");
    if (outer.contains("arity")) outer_arity = as_arity(outer.at("arity"));
  }
  PresentationDoc p;
  p.arity = as_arity(field(*doc, "n"));
  if (outer_arity && *outer_arity != p.arity) schema("arity and presentation n differ");
  const Json& base = field(*doc, "base");
  const Json& table = field(base, "table");
  if (!table.is_array()) schema("base table must be an array");
  auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (base.contains("size")) side = as_index(base.at("size"), "base size");
  if (side == 0 || side * side != table.size()) schema("base table must have size^2 entries");
  p.base_size = side;
  p.base_table = index_array(table, "base table", side);
  if (base.contains("identity")) {
    auto e = as_index(base.at("identity"), "identity");
    if (e >= side) schema("identity out of range");
    p.base_identity = static_cast<Element>(e);
  }
  p.names = names_of(base);
  if (!p.names.empty() && p.names.size() != side) schema("names must match the base size");
  p.theta = index_array(field(*doc, "theta"), "theta", side);
  if (p.theta.size() != side) schema("theta must have one image per element");
  auto b = as_index(field(*doc, "b"), "b");
  if (b >= side) schema("b out of range");
  p.b = static_cast<Element>(b);
  return p;
}

GroupDoc parse_group_doc(const Json& doc) {
  GroupDoc g;
  if (doc.is_object() && doc.contains("theta")) {
    g.presentation = parse_presentation_doc(doc);
    g.arity = g.presentation->arity;
    g.size = g.presentation->base_size;
    return g;
  }
  g.arity = as_arity(field(doc, "arity"));
  if (doc.contains("presentation")) {
    g.presentation = parse_presentation_doc(doc);
    g.size = g.presentation->base_size;
  }
  if (doc.contains("size")) {
    auto s = as_index(doc.at("size"), "size");
    if (s == 0) schema("size must be positive");
    if (g.presentation && s != g.size) schema("size and presentation base size differ");
    g.size = s;
  }
  g.names = names_of(doc);
  if (doc.contains("table")) {
    if (g.size == 0) schema("missing field \"size\"");
    auto expect = checked_pow(g.size, static_cast<unsigned>(g.arity), kDefaultBudget);
    if (!expect) schema("table-backed groups are capped at size^n <= 10^7 entries");
    g.table = index_array(doc.at("table"), "table", g.size);
    if (g.table.size() != *expect)
      schema("table must have size^n = " + std::to_string(*expect) + " entries");
  } else if (!g.presentation) {
    schema("group document needs a table or a presentation");
  }
  if (!g.names.empty() && g.names.size() != g.size) schema("names must match the size");
  return g;
}

HGPresentation build_presentation(const PresentationDoc& doc) {
  Carrier carrier = doc.names.empty() ? Carrier(doc.base_size) : Carrier(doc.base_size, doc.names);
  FiniteGroup base = FiniteGroup::from_table(std::move(carrier), doc.base_table);
  if (doc.base_identity && *doc.base_identity != base.identity())
    throw Error(ErrorKind::InvalidPresentation,
                "declared identity " + std::to_string(*doc.base_identity) +
                    " is not the identity of the base (which is " + std::to_string(base.identity()) + ")");
  return HGPresentation(doc.arity, std::move(base), doc.theta, doc.b);
}

NaryGroup build_group(const GroupDoc& doc, const CheckOptions& opts) {
  if (doc.table.empty()) return derive(build_presentation(*doc.presentation));
  Carrier carrier = doc.names.empty() ? Carrier(doc.size) : Carrier(doc.size, doc.names);
  NaryGroup g = NaryGroup::from_table(doc.arity, std::move(carrier), doc.table);
  if (doc.presentation)
    g.attach_presentation(std::make_shared<const HGPresentation>(build_presentation(*doc.presentation)),
                          opts);
  return g;
}

VerificationReport validate_presentation_doc(const PresentationDoc& doc) {
  VerificationReport report;
  report.check = "presentation-document";
  auto base = check_group_table(doc.base_size, doc.base_table);
  base.check = "base group axioms";
  const bool base_ok = !base.failed();
  report.add_item(std::move(base));
  if (!base_ok) return report;
  HGPresentation p = [&] {
    try {
      return build_presentation(doc);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidPresentation) throw;
      report.add_item(error_item("declared identity", e));
      throw;
    }
  }();
  for (auto& it : validate_presentation(p).items) report.add_item(std::move(it));
  return report;
}

Json to_json(const FiniteGroup& g) {
  Json j;
  j["size"] = g.size();
  j["table"] = array_of(g.table());
  j["identity"] = g.identity();
  if (g.carrier().has_names()) j["names"] = names_json(g.carrier());
  return j;
}

Json to_json(const HGPresentation& p) {
  Json j;
  j["n"] = p.arity;
  j["base"] = to_json(p.base);
  j["theta"] = array_of(p.theta);
  j["b"] = p.b;
  return j;
}

Json to_json(const NaryGroup& g, bool materialize) {
  Json j;
  j["arity"] = g.arity();
  j["size"] = g.size();
  if (g.carrier().has_names()) j["names"] = names_json(g.carrier());
  if (g.has_table()) {
    j["table"] = array_of(g.table());
  } else if (materialize && checked_pow(g.size(), static_cast<unsigned>(g.arity()), kDefaultBudget)) {
    j["table"] = array_of(g.materialized().table());
  }
  if (g.presentation()) j["presentation"] = to_json(*g.presentation());
  return j;
}

Json to_json(const PostCoverGroup& c) {
  Json j;
  j["arity"] = c.source->arity;
  j["size"] = c.cover.size();
  j["table"] = array_of(c.cover.table());
  j["identity"] = c.cover.identity();
  Json grading = Json::array(), elements = Json::array();
  for (Element u = 0; u < c.cover.size(); ++u) {
    auto [x, i] = c.split(u);
    grading.push_back(i);
    elements.push_back(Json::array({x, i}));
  }
  j["grading"] = std::move(grading);
  j["elements"] = std::move(elements);
  j["embedding"] = array_of(c.embedding);
  j["kernel"] = array_of(c.kernel);
  j["source"] = to_json(*c.source);
  return j;
}

Json to_json(const VerificationReport& r, bool include_timing) {
  Json j;
  if (!r.subject.empty()) j["subject"] = r.subject;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.values.empty()) {
    Json v;
    for (const auto& [k, val] : r.values) v[k] = val;
    j["values"] = std::move(v);
  }
  if (!r.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
      Json wj;
      wj["label"] = w.label;
      wj["values"] = w.values;
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (include_timing) j["wall_ms"] = r.wall_ms;
  if (!r.items.empty()) {
    Json items = Json::array();
    for (const auto& it : r.items) items.push_back(to_json(it, include_timing));
    j["items"] = std::move(items);
  }
  return j;
}

FiniteGroup parse_finite_group(const Json& doc) {
  auto size = as_index(field(doc, "size"), "size");
  if (size == 0) schema("size must be positive");
  auto table = index_array(field(doc, "table"), "table", size);
  if (table.size() != size * size) schema("table must have size^2 entries");
  auto names = names_of(doc);
  Carrier c = names.empty() ? Carrier(size) : Carrier(size, std::move(names));
  FiniteGroup g = FiniteGroup::from_table(std::move(c), std::move(table));
  if (doc.contains("identity") && as_index(doc.at("identity"), "identity") != g.identity())
    throw Error(ErrorKind::NotAGroup, "declared identity is not the identity");
  return g;
}

SystemDoc parse_system_doc(const Json& doc) {
  SystemDoc sd;
  const Json& levels = field(doc, "levels");
  if (!levels.is_object() || levels.empty()) schema("levels must be a non-empty object");
  for (const auto& [id, level] : levels.items()) {
    if (id.find('>') != std::string::npos) schema("level ids may not contain '>'");
    sd.ids.push_back(id);
    sd.levels.push_back(parse_group_doc(level));
  }
  const Json& order = field(doc, "order");
  if (!order.is_array()) schema("order must be an array of [i, j] pairs");
  for (const auto& pr : order) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      schema("order entries must be [i, j] pairs of level ids");
    sd.order.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
  }
  const Json& maps = field(doc, "maps");
  if (!maps.is_object()) schema("maps must be an object keyed by \"i>j\"");
  for (const auto& [key, arr] : maps.items()) {
    auto gt = key.find('>');
    if (gt == std::string::npos) schema("map key " + key + " is not of the form i>j");
    if (!arr.is_array()) schema("map " + key + " must be an array");
    sd.maps.emplace_back(key, index_array(arr, "map image", UINT32_MAX));
  }
  const Json& top = field(doc, "top");
  if (!top.is_string()) schema("top must be a level id");
  sd.top = top.get<std::string>();
  return sd;
}

InverseSystem build_system(const SystemDoc& sd, const CheckOptions& opts) {
  DirectedIndex index = DirectedIndex::make(sd.ids, sd.order, sd.top);
  std::vector<NaryGroup> levels;
  for (const auto& g : sd.levels) levels.push_back(build_group(g, opts));
  std::map<TransitionKey, std::vector<Element>> maps;
  for (const auto& [key, image] : sd.maps) {
    auto gt = key.find('>');
    std::size_t i = index.find(key.substr(0, gt)), j = index.find(key.substr(gt + 1));
    if (!maps.emplace(TransitionKey{i, j}, image).second) schema("duplicate map " + key);
  }
  return InverseSystem(std::move(index), std::move(levels), std::move(maps));
}

Json to_json(const InverseSystem& s) {
  const auto& idx = s.index();
  Json j;
  Json levels;
  for (std::size_t i = 0; i < s.level_count(); ++i) levels[idx.id(i)] = to_json(s.level(i));
  j["levels"] = std::move(levels);
  Json order = Json::array();
  for (auto [i, k] : idx.generating_pairs()) order.push_back(Json::array({idx.id(i), idx.id(k)}));
  j["order"] = std::move(order);
  Json maps = Json::object();
  for (const auto& [key, image] : s.maps())
    if (s.map_is_given(key.first, key.second))
      maps[idx.id(key.first) + ">" + idx.id(key.second)] = array_of(image);
  j["maps"] = std::move(maps);
  j["top"] = idx.id(idx.top());
  return j;
}

CylinderSet parse_cylinder(const Json& doc, const InverseSystem& s) {
  const Json& level = field(doc, "level");
  if (!level.is_string()) schema("cylinder level must be a level id");
  const std::size_t lvl = s.index().find(level.get<std::string>());
  return make_cylinder(s, lvl, index_array(field(doc, "subset"), "subset", s.level(lvl).size()));
}

Json to_json(const CylinderSet& a, const InverseSystem& s) {
  Json j;
  j["level"] = s.index().id(a.level);
  j["subset"] = array_of(a.subset);
  return j;
}

Json measure_report(const VerificationReport& identity) {
  Json j;
  j["m_p"] = identity.values.at("m_p");
  j["m"] = identity.values.at("m");
  j["m_star"] = identity.values.at("m_star");
  j["identity_holds"] = identity.values.at("identity_holds") == "true";
  return j;
}

VerificationReport validate_document(const Json& doc, const CheckOptions& opts) {
  switch (detect_kind(doc)) {
    case DocumentKind::Group: {
      GroupDoc gd = parse_group_doc(doc);
      VerificationReport report;
      report.check = "group-document";
      Carrier carrier = gd.names.empty() ? Carrier(gd.size) : Carrier(gd.size, gd.names);
      NaryGroup g = NaryGroup::from_table(gd.arity, std::move(carrier), gd.table);
      report.add_item(verify_polyadic(g, opts));
      if (gd.presentation) {
        auto v = validate_presentation_doc(*gd.presentation);
        const bool ok = !v.failed();
        report.add_item(std::move(v));
        if (ok) {
          try {
            g.attach_presentation(
                std::make_shared<const HGPresentation>(build_presentation(*gd.presentation)), opts);
            VerificationReport agree;
            agree.check = "presentation reproduces the table";
            agree.status = CheckStatus::Pass;
            report.add_item(std::move(agree));
          } catch (const Error& e) {
            if (!is_content_error(e.kind())) throw;
            report.add_item(error_item("presentation reproduces the table", e));
          }
        }
      }
      return report;
    }
    case DocumentKind::Presentation: {
      PresentationDoc pd = parse_presentation_doc(doc);
      VerificationReport report;
      report.check = "presentation";
      VerificationReport v;
      try {
        v = validate_presentation_doc(pd);
      } catch (const Error& e) {
        if (!is_content_error(e.kind())) throw;
        report.add_item(error_item("presentation-document", e));
        return report;
      }
      const bool ok = !v.failed();
      report.add_item(std::move(v));
      if (!ok) return report;
      auto p = std::make_shared<const HGPresentation>(build_presentation(pd));
      NaryGroup g = derive(p);
      report.add_item(verify_polyadic(g, opts));
      report.add_item(verify_cover_properties(build_post_cover(p), g));
      return report;
    }
    case DocumentKind::System:
      return validate_system_doc(doc, opts);
    default:
      schema("not a group, presentation or system document");
  }
}

}  // namespace polyadic::io
