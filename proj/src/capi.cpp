#include "polyadic/polyadic.h"

#include <chrono>
#include <cstring>
#include <optional>
#include <string>

#include "polyadic/haar.hpp"
#include "polyadic/io.hpp"

using namespace polyadic;
using polyadic::io::Json;

struct pg_group {
  NaryGroup group;
};

struct pg_system {
  InverseSystem system;
};

namespace {

thread_local std::string last_error;

pg_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema: return PG_ERR_INPUT;
    case ErrorKind::InvalidArgument: return PG_ERR_ARGUMENT;
    case ErrorKind::BudgetExceeded: return PG_ERR_BUDGET;
    case ErrorKind::NotPolyadic: return PG_ERR_NOT_POLYADIC;
    case ErrorKind::NotAGroup:
    case ErrorKind::InvalidPresentation:
    case ErrorKind::IncompatibleSystem: return PG_FAILED;
    case ErrorKind::Internal: return PG_ERR_INTERNAL;
  }
  return PG_ERR_INTERNAL;
}

template <class F>
pg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    last_error = std::string(to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("schema: ") + e.what();
    return PG_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PG_ERR_INTERNAL;
  }
}

pg_status require(bool ok, const char* what) {
  if (ok) return PG_OK;
  last_error = what;
  return PG_ERR_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const Json& j) { return dup(io::dump(j)); }

pg_options defaults() {
  pg_options o;
  pg_options_init(&o);
  return o;
}

CheckOptions check_options(const pg_options* o) {
  CheckOptions c;
  if (!o) return c;
  c.strategy = static_cast<Strategy>(o->strategy);
  c.budget = o->budget;
  if (o->samples) c.samples = o->samples;
  c.seed = o->seed;
  return c;
}

template <class F>
VerificationReport timed(F&& run) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = run();
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

pg_status verdict(const VerificationReport& r) { return r.failed() ? PG_FAILED : PG_OK; }

Json parse(const char* json) {
  if (!json) throw Error(ErrorKind::InvalidArgument, "null document");
  return io::parse_text(json);
}

std::span<const Element> view(const uint32_t* p, std::size_t n) {
  if (!p && n) throw Error(ErrorKind::InvalidArgument, "null array");
  return {p, n};
}

}  // namespace

extern "C" {

void pg_options_init(pg_options* opts) {
  if (!opts) return;
  opts->strategy = PG_STRATEGY_AUTO;
  opts->budget = kDefaultBudget;
  opts->samples = 0;
  opts->seed = kDefaultSeed;
  opts->depth = HaarSuiteOptions{}.exhaustive_bits;
  opts->include_timing = 0;
}

const char* pg_last_error(void) { return last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_validate_document(const char* json, const pg_options* opts, char** report) {
  return guarded([&] {
    if (auto st = require(report != nullptr, "null output"); st) return st;
    Json doc = parse(json);
    auto r = timed([&] { return io::validate_document(doc, check_options(opts)); });
    *report = dump(io::to_json(r, opts && opts->include_timing));
    return verdict(r);
  });
}

pg_status pg_group_parse(const char* json, const pg_options* opts, pg_group** out) {
  return guarded([&] {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    *out = nullptr;
    Json doc = parse(json);
    auto kind = io::detect_kind(doc);
    if (kind != io::DocumentKind::Group && kind != io::DocumentKind::Presentation)
      throw Error(ErrorKind::Schema, "expected a group or presentation document");
    *out = new pg_group{io::build_group(io::parse_group_doc(doc), check_options(opts))};
    return PG_OK;
  });
}

void pg_group_free(pg_group* g) { delete g; }

int pg_group_arity(const pg_group* g) { return g ? g->group.arity() : 0; }

size_t pg_group_size(const pg_group* g) { return g ? g->group.size() : 0; }

pg_status pg_group_eval(const pg_group* g, const uint32_t* xs, size_t count, uint32_t* out) {
  return guarded([&] {
    if (auto st = require(g && out, "null argument"); st) return st;
    *out = g->group.eval(view(xs, count));
    return PG_OK;
  });
}

pg_status pg_group_solve(const pg_group* g, size_t slot, const uint32_t* prefix, size_t prefix_len,
                         const uint32_t* suffix, size_t suffix_len, uint32_t target, uint32_t* out) {
  return guarded([&] {
    if (auto st = require(g && out, "null argument"); st) return st;
    *out = solve(g->group, slot, view(prefix, prefix_len), view(suffix, suffix_len), target);
    return PG_OK;
  });
}

pg_status pg_group_verify(pg_group* g, const pg_options* opts, char** report) {
  return guarded([&] {
    if (auto st = require(g && report, "null argument"); st) return st;
    auto r = timed([&] { return verify_polyadic(g->group, check_options(opts)); });
    *report = dump(io::to_json(r, opts && opts->include_timing));
    return verdict(r);
  });
}

pg_status pg_group_to_json(const pg_group* g, char** out) {
  return guarded([&] {
    if (auto st = require(g && out, "null argument"); st) return st;
    *out = dump(io::to_json(g->group, true));
    return PG_OK;
  });
}

pg_status pg_group_retract(const pg_group* g, uint32_t base_point, char** out) {
  return guarded([&] {
    if (auto st = require(g && out, "null argument"); st) return st;
    if (base_point >= g->group.size())
      throw Error(ErrorKind::InvalidArgument, "base point out of range");
    *out = dump(io::to_json(retract(g->group, base_point)));
    return PG_OK;
  });
}

pg_status pg_group_recover(const pg_group* g, uint32_t base_point, const pg_options* opts,
                           char** out) {
  return guarded([&] {
    if (auto st = require(g && out, "null argument"); st) return st;
    if (base_point >= g->group.size())
      throw Error(ErrorKind::InvalidArgument, "base point out of range");
    RecoverOptions ro;
    if (opts) {
      ro.seed = opts->seed;
      ro.budget = opts->budget;
    }
    *out = dump(io::to_json(recover(g->group, base_point, ro)));
    return PG_OK;
  });
}

pg_status pg_group_post_cover(const pg_group* g, uint32_t base_point, char** cover, char** report) {
  return guarded([&] {
    if (auto st = require(g && cover, "null argument"); st) return st;
    if (base_point >= g->group.size())
      throw Error(ErrorKind::InvalidArgument, "base point out of range");
    NaryGroup group = g->group;
    if (!group.presentation())
      group.attach_presentation(std::make_shared<const HGPresentation>(recover(group, base_point)));
    auto c = build_post_cover(group.shared_presentation());
    auto r = verify_cover_properties(c, group);
    *cover = dump(io::to_json(c));
    if (report) *report = dump(io::to_json(r));
    return verdict(r);
  });
}

pg_status pg_system_parse(const char* json, const pg_options* opts, pg_system** out) {
  return guarded([&] {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    *out = nullptr;
    Json doc = parse(json);
    if (io::detect_kind(doc) != io::DocumentKind::System)
      throw Error(ErrorKind::Schema, "expected a system document");
    *out = new pg_system{io::build_system(io::parse_system_doc(doc), check_options(opts))};
    return PG_OK;
  });
}

void pg_system_free(pg_system* s) { delete s; }

pg_status pg_system_validate(pg_system* s, const pg_options* opts, char** report) {
  return guarded([&] {
    if (auto st = require(s && report, "null argument"); st) return st;
    auto r = timed([&] { return validate_system(s->system, check_options(opts)); });
    *report = dump(io::to_json(r, opts && opts->include_timing));
    return verdict(r);
  });
}

pg_status pg_system_measure(const pg_system* s, const char* cylinder_json, uint32_t base_point,
                            char** out) {
  return guarded([&] {
    if (auto st = require(s && out, "null argument"); st) return st;
    const auto& sys = s->system;
    if (base_point >= sys.level(sys.index().top()).size())
      throw Error(ErrorKind::InvalidArgument, "base point out of range");
    CylinderSet a = io::parse_cylinder(parse(cylinder_json), sys);
    HaarContext ctx(sys, thread_from_top(sys, base_point));
    if (!ctx.retracts().ok() || !ctx.covers().ok())
      throw Error(ErrorKind::IncompatibleSystem, "retract or cover system is not compatible");
    auto r = check_haar_identity(ctx, a);
    Json j;
    j["cylinder"] = io::to_json(a, sys);
    j["measure"] = io::measure_report(r);
    *out = dump(j);
    return verdict(r);
  });
}

pg_status pg_system_check_haar(const pg_system* s, uint32_t base_point, const pg_options* opts,
                               char** report) {
  return guarded([&] {
    if (auto st = require(s && report, "null argument"); st) return st;
    const auto& sys = s->system;
    if (base_point >= sys.level(sys.index().top()).size())
      throw Error(ErrorKind::InvalidArgument, "base point out of range");
    const pg_options o = opts ? *opts : defaults();
    HaarSuiteOptions h;
    h.exhaustive_bits = o.depth;
    if (o.samples) h.samples = o.samples;
    h.seed = o.seed;
    HaarContext ctx(sys, thread_from_top(sys, base_point));
    auto r = timed([&] { return run_haar_suite(ctx, h); });
    *report = dump(io::to_json(r, o.include_timing));
    return verdict(r);
  });
}

}  // extern "C"
