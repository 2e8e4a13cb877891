#pragma once

// JSON documents for groups, presentations, covers, systems, cylinders and
// reports. Emission uses a fixed field order so output is byte-stable.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "polyadic/haar.hpp"
#include "polyadic/post_cover.hpp"
#include "polyadic/presentation.hpp"
#include "polyadic/profinite.hpp"

namespace polyadic::io {

using Json = nlohmann::ordered_json;

enum class DocumentKind { Group, Presentation, System, Cylinder, Unknown };

// Indented output with arrays of scalars kept on one line; ends in a newline.
std::string dump(const Json& j);

// Throws Error(Schema) on malformed text.
Json parse_text(const std::string& text);
DocumentKind detect_kind(const Json& doc);

// Raw shapes, checked only for structure and index ranges.
struct PresentationDoc {
  int arity = 0;
  std::size_t base_size = 0;
  std::vector<Element> base_table;
  std::optional<Element> base_identity;
  std::vector<std::string> names;
  std::vector<Element> theta;
  Element b = 0;
};

struct GroupDoc {
  int arity = 0;
  std::size_t size = 0;
  std::vector<Element> table;  // empty when presentation-only
  std::vector<std::string> names;
  std::optional<PresentationDoc> presentation;
};

// Accepts a bare presentation { "n", "base", "theta", "b" } or a group
// document { "arity", "presentation" }.
PresentationDoc parse_presentation_doc(const Json& doc);
GroupDoc parse_group_doc(const Json& doc);

// Throws NotAGroup / InvalidPresentation / InvalidArgument on bad content.
HGPresentation build_presentation(const PresentationDoc& doc);
NaryGroup build_group(const GroupDoc& doc, const CheckOptions& opts = {});

// Base group axioms, declared identity, then the presentation conditions.
VerificationReport validate_presentation_doc(const PresentationDoc& doc);

Json to_json(const FiniteGroup& g);
Json to_json(const HGPresentation& p);
// Emits the table when present (materializing presentation-only groups
// when `materialize` and the table fits) plus any attached presentation.
Json to_json(const NaryGroup& g, bool materialize = false);
Json to_json(const PostCoverGroup& c);
Json to_json(const VerificationReport& r, bool include_timing = false);

FiniteGroup parse_finite_group(const Json& doc);

struct SystemDoc {
  std::vector<std::string> ids;
  std::vector<GroupDoc> levels;
  std::vector<std::pair<std::string, std::string>> order;  // (i, j): j <= i
  std::vector<std::pair<std::string, std::vector<Element>>> maps;  // "i>j"
  std::string top;
};

SystemDoc parse_system_doc(const Json& doc);
InverseSystem build_system(const SystemDoc& doc, const CheckOptions& opts = {});
Json to_json(const InverseSystem& s);

CylinderSet parse_cylinder(const Json& doc, const InverseSystem& s);
Json to_json(const CylinderSet& a, const InverseSystem& s);

// { "m_p", "m", "m_star", "identity_holds" }.
Json measure_report(const VerificationReport& identity);

// Runs every applicable check on a group, presentation or system document.
// Content failures become failing report items; schema problems throw.
VerificationReport validate_document(const Json& doc, const CheckOptions& opts = {});

}  // namespace polyadic::io
