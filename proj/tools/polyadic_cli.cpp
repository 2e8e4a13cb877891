// polyadic: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyadic/polyadic.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Flags {
  bool json = false;
  uint64_t seed = 42;
  uint64_t budget = 10'000'000;
  uint64_t samples = 0;
  unsigned depth = 16;
  bool timing = false;
  std::string strategy = "auto";
};

struct Owned {
  char* p = nullptr;
  ~Owned() { pg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GroupHandle {
  pg_group* g = nullptr;
  ~GroupHandle() { pg_group_free(g); }
};

struct SystemHandle {
  pg_system* s = nullptr;
  ~SystemHandle() { pg_system_free(s); }
};

int exit_code(pg_status st) {
  switch (st) {
    case PG_OK: return kExitPass;
    case PG_ERR_INPUT:
    case PG_ERR_ARGUMENT: return kExitInput;
    default: return kExitFail;
  }
}

pg_options make_options(const Flags& f) {
  pg_options o;
  pg_options_init(&o);
  o.seed = f.seed;
  o.budget = f.budget;
  o.samples = f.samples;
  o.depth = f.depth;
  o.include_timing = f.timing ? 1 : 0;
  if (f.strategy == "exhaustive") o.strategy = PG_STRATEGY_EXHAUSTIVE;
  else if (f.strategy == "sampled") o.strategy = PG_STRATEGY_SAMPLED;
  else if (f.strategy == "certificate") o.strategy = PG_STRATEGY_CERTIFICATE;
  return o;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int error_out(pg_status st, const Flags& f) {
  const std::string msg = pg_last_error();
  if (f.json) {
    Json j;
    j["error"] = msg;
    j["exit"] = exit_code(st);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return exit_code(st);
}

int missing(const std::string& path, const Flags& f) {
  if (f.json) {
    Json j;
    j["error"] = "cannot read " + path;
    j["exit"] = kExitInput;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: cannot read " << path << "\n";
  }
  return kExitInput;
}

void render_report(const Json& r, int depth, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << r.value("check", "") << ": " << r.value("status", "");
  if (r.contains("subject")) out << " [" << r["subject"].get<std::string>() << "]";
  out << " (" << r.value("instances", 0ULL) << " instances";
  if (r.value("violations", 0ULL)) out << ", " << r["violations"].get<uint64_t>() << " violations";
  if (r.contains("seed")) out << ", seed " << r["seed"].get<uint64_t>();
  out << ")\n";
  if (r.contains("values"))
    for (const auto& [k, v] : r["values"].items()) out << pad << "  " << k << " = " << v.get<std::string>() << "\n";
  if (r.contains("witnesses"))
    for (const auto& w : r["witnesses"]) {
      out << pad << "  witness " << w["label"].get<std::string>() << ":";
      for (const auto& v : w["values"]) out << " " << v.get<int64_t>();
      out << "\n";
    }
  if (r.contains("notes"))
    for (const auto& n : r["notes"]) out << pad << "  note: " << n.get<std::string>() << "\n";
  if (r.contains("items"))
    for (const auto& it : r["items"]) render_report(it, depth + 1, out);
}

// Depth-first path to the first leaf that failed.
std::optional<std::string> first_failure(const Json& r) {
  if (r.value("status", "") != "fail") return std::nullopt;
  if (r.contains("items"))
    for (const auto& it : r["items"])
      if (auto p = first_failure(it)) return r.value("check", "") + " > " + *p;
  return r.value("check", "");
}

int emit_report(const std::string& text, pg_status st, const Flags& f) {
  if (f.json) {
    std::cout << text;
  } else {
    Json r = Json::parse(text);
    render_report(r, 0, std::cout);
    if (auto p = first_failure(r)) std::cout << "first failing check: " << *p << "\n";
    std::cout << (st == PG_OK ? "PASS" : "FAIL") << "\n";
  }
  return exit_code(st);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

// Documents go to --output when given, else to stdout. In text mode stdout
// gets a one-line summary first.
int emit_document(const std::string& doc, const std::string& summary, const std::string& output,
                  const Flags& f) {
  if (!output.empty()) {
    if (!write_file(output, doc)) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitInput;
    }
    if (!f.json) std::cout << summary << "\nwritten to " << output << "\n";
    return kExitPass;
  }
  if (!f.json) std::cout << summary << "\n";
  std::cout << doc;
  return kExitPass;
}

int load_group(const std::string& path, const Flags& f, GroupHandle& h) {
  auto text = slurp(path);
  if (!text) return missing(path, f);
  pg_options o = make_options(f);
  if (auto st = pg_group_parse(text->c_str(), &o, &h.g); st != PG_OK) return error_out(st, f);
  return kExitPass;
}

int load_system(const std::string& path, const Flags& f, SystemHandle& h) {
  auto text = slurp(path);
  if (!text) return missing(path, f);
  pg_options o = make_options(f);
  if (auto st = pg_system_parse(text->c_str(), &o, &h.s); st != PG_OK) return error_out(st, f);
  return kExitPass;
}

// Returns an exit code when the system fails validation, else nullopt.
std::optional<int> require_valid(SystemHandle& h, const Flags& f) {
  pg_options o = make_options(f);
  Owned report;
  pg_status st = pg_system_validate(h.s, &o, &report.p);
  if (st == PG_OK) return std::nullopt;
  if (!report.p) return error_out(st, f);
  return emit_report(report.str(), st, f);
}

int cmd_validate(const std::string& path, const Flags& f) {
  auto text = slurp(path);
  if (!text) return missing(path, f);
  pg_options o = make_options(f);
  Owned report;
  pg_status st = pg_validate_document(text->c_str(), &o, &report.p);
  if (!report.p) return error_out(st, f);
  return emit_report(report.str(), st, f);
}

int cmd_derive(const std::string& path, const std::string& output, const Flags& f) {
  auto text = slurp(path);
  if (!text) return missing(path, f);
  // The presentation must validate before anything is constructed.
  pg_options o = make_options(f);
  Owned check;
  pg_status st = pg_validate_document(text->c_str(), &o, &check.p);
  if (st != PG_OK) return check.p ? emit_report(check.str(), st, f) : error_out(st, f);
  GroupHandle h;
  if (int rc = load_group(path, f, h)) return rc;
  Owned doc;
  if ((st = pg_group_to_json(h.g, &doc.p)) != PG_OK) return error_out(st, f);
  return emit_document(doc.str(),
                       "derived " + std::to_string(pg_group_arity(h.g)) + "-ary group on " +
                           std::to_string(pg_group_size(h.g)) + " elements",
                       output, f);
}

int cmd_recover(const std::string& path, uint32_t a, const std::string& output, const Flags& f) {
  GroupHandle h;
  if (int rc = load_group(path, f, h)) return rc;
  pg_options o = make_options(f);
  Owned doc;
  if (auto st = pg_group_recover(h.g, a, &o, &doc.p); st != PG_OK) return error_out(st, f);
  return emit_document(doc.str(), "recovered presentation at base point " + std::to_string(a), output, f);
}

int cmd_retract(const std::string& path, uint32_t a, const std::string& output, const Flags& f) {
  GroupHandle h;
  if (int rc = load_group(path, f, h)) return rc;
  Owned doc;
  if (auto st = pg_group_retract(h.g, a, &doc.p); st != PG_OK) return error_out(st, f);
  return emit_document(doc.str(), "retract at base point " + std::to_string(a), output, f);
}

int cmd_post_cover(const std::string& path, uint32_t a, const std::string& output, const Flags& f) {
  GroupHandle h;
  if (int rc = load_group(path, f, h)) return rc;
  Owned doc, report;
  pg_status st = pg_group_post_cover(h.g, a, &doc.p, &report.p);
  if (!doc.p) return error_out(st, f);
  if (st != PG_OK) return emit_report(report.str(), st, f);
  if (!f.json) {
    Json r = Json::parse(report.str());
    render_report(r, 0, std::cout);
  }
  return emit_document(doc.str(),
                       "post cover of order " + std::to_string(Json::parse(doc.str())["size"].get<uint64_t>()),
                       output, f);
}

std::optional<std::string> cylinder_text(const std::string& cylinder, const std::string& level,
                                         const std::optional<std::string>& subset) {
  if (!cylinder.empty()) {
    if (cylinder.front() == '{') return cylinder;
    return slurp(cylinder);
  }
  Json j;
  j["level"] = level;
  Json arr = Json::array();
  std::string s = subset.value_or("");
  for (char& c : s)
    if (c == '[' || c == ']') c = ' ';
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    arr.push_back(std::stoull(tok));
  }
  j["subset"] = std::move(arr);
  return j.dump();
}

int cmd_measure(const std::string& path, const std::string& cylinder, const std::string& level,
                const std::optional<std::string>& subset, uint32_t a, const Flags& f) {
  if (cylinder.empty() && level.empty()) {
    std::cerr << "error: give --cylinder, or --level with --subset\n";
    return kExitInput;
  }
  auto cyl = cylinder_text(cylinder, level, subset);
  if (!cyl) {
    std::cerr << "error: malformed cylinder\n";
    return kExitInput;
  }
  SystemHandle h;
  if (int rc = load_system(path, f, h)) return rc;
  if (auto rc = require_valid(h, f)) return *rc;
  Owned out;
  pg_status st = pg_system_measure(h.s, cyl->c_str(), a, &out.p);
  if (!out.p) return error_out(st, f);
  if (f.json) {
    std::cout << out.str();
  } else {
    Json j = Json::parse(out.str());
    const auto& m = j["measure"];
    std::cout << "cylinder " << j["cylinder"]["level"].get<std::string>() << " "
              << j["cylinder"]["subset"].dump() << "\n"
              << "m_p    = " << m["m_p"].get<std::string>() << "\n"
              << "m      = " << m["m"].get<std::string>() << "\n"
              << "m_star = " << m["m_star"].get<std::string>() << "\n"
              << "identity " << (m["identity_holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  }
  return exit_code(st);
}

int cmd_check_haar(const std::string& path, uint32_t a, const Flags& f) {
  SystemHandle h;
  if (int rc = load_system(path, f, h)) return rc;
  if (auto rc = require_valid(h, f)) return *rc;
  pg_options o = make_options(f);
  Owned report;
  pg_status st = pg_system_check_haar(h.s, a, &o, &report.p);
  if (!report.p) return error_out(st, f);
  return emit_report(report.str(), st, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and profinite n-ary groups: axioms, presentations, Post covers and Haar measure"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "Machine-readable JSON output");
  app.add_option("--seed", f.seed, "Seed for every sampled check")->capture_default_str();
  app.add_option("--budget", f.budget, "Exhaustive-check budget (tuples)")->capture_default_str();
  app.add_option("--depth", f.depth, "Enumerate all cylinder subsets of levels with at most this many elements")
      ->capture_default_str()
      ->check(CLI::Range(0u, 30u));
  app.add_option("--samples", f.samples, "Sample count for sampled checks (0 = default)");
  app.add_option("--strategy", f.strategy, "auto, exhaustive, sampled or certificate")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled", "certificate"}))
      ->capture_default_str();
  app.add_flag("--timing", f.timing, "Include wall time in JSON reports");

  std::string path, output, cylinder, level;
  std::optional<std::string> subset;
  uint32_t base_point = 0;

  auto* validate = app.add_subcommand("validate", "Run every applicable check on a document");
  auto* derive = app.add_subcommand("derive", "Build the n-ary group of a presentation");
  auto* recover = app.add_subcommand("recover", "Find a presentation for a table-backed group");
  auto* retract = app.add_subcommand("retract", "Binary retract at a base point");
  auto* cover = app.add_subcommand("post-cover", "Post cover of a presented group");
  auto* measure = app.add_subcommand("measure", "m_p, m and m* of one cylinder set");
  auto* haar = app.add_subcommand("check-haar", "Haar identity and invariance suites");

  for (auto* sub : {validate, derive, recover, retract, cover, measure, haar})
    sub->add_option("path", path, "Input document")->required();
  for (auto* sub : {derive, recover, retract, cover})
    sub->add_option("-o,--output", output, "Write the document here");
  for (auto* sub : {recover, retract, cover, measure, haar})
    sub->add_option("-a,--base-point", base_point, "Base point (top-level element for systems)")
        ->capture_default_str();
  measure->add_option("--cylinder", cylinder, "Cylinder document or inline JSON");
  measure->add_option("--level", level, "Cylinder level id");
  measure->add_option("--subset", subset, "Comma-separated elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*validate) return cmd_validate(path, f);
    if (*derive) return cmd_derive(path, output, f);
    if (*recover) return cmd_recover(path, base_point, output, f);
    if (*retract) return cmd_retract(path, base_point, output, f);
    if (*cover) return cmd_post_cover(path, base_point, output, f);
    if (*measure) return cmd_measure(path, cylinder, level, subset, base_point, f);
    if (*haar) return cmd_check_haar(path, base_point, f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
