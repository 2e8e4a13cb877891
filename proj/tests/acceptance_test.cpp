// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "polyadic/haar.hpp"
#include "polyadic/post_cover.hpp"

using namespace polyadic;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct NamedSystem {
  std::string name;
  InverseSystem system;
};

std::vector<fs::path> corpus_files(const std::string& sub) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(POLYADIC_CORPUS) / sub))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

io::Json load(const fs::path& p) { return io::parse_text(fixtures::slurp(p.string())); }

std::vector<NamedSystem> corpus_systems() {
  std::vector<NamedSystem> out;
  for (const auto& p : corpus_files("systems"))
    out.push_back({p.stem().string(), io::build_system(io::parse_system_doc(load(p)))});
  return out;
}

// Every presentation the corpus carries, deduplicated.
std::vector<std::shared_ptr<const HGPresentation>> corpus_presentations() {
  std::vector<std::shared_ptr<const HGPresentation>> out;
  auto add = [&](std::shared_ptr<const HGPresentation> p) {
    for (const auto& q : out)
      if (*q == *p) return;
    out.push_back(std::move(p));
  };
  for (const auto& dir : {"groups", "presentations", "systems"})
    for (const auto& path : corpus_files(dir)) {
      auto doc = load(path);
      switch (io::detect_kind(doc)) {
        case io::DocumentKind::Presentation:
          add(std::make_shared<const HGPresentation>(io::build_presentation(io::parse_presentation_doc(doc))));
          break;
        case io::DocumentKind::Group: {
          auto g = io::build_group(io::parse_group_doc(doc));
          add(g.presentation() ? g.shared_presentation()
                               : std::make_shared<const HGPresentation>(recover(g, 0)));
          break;
        }
        case io::DocumentKind::System: {
          auto s = io::build_system(io::parse_system_doc(doc));
          for (std::size_t i = 0; i < s.level_count(); ++i) add(s.level(i).shared_presentation());
          break;
        }
        default:
          break;
      }
    }
  return out;
}

std::string describe(const HGPresentation& p) {
  std::ostringstream ss;
  ss << "n=" << p.arity << " |base|=" << p.base.size() << " b=" << p.b;
  return ss.str();
}

std::vector<Element> mask_subset(std::uint64_t mask, std::size_t size) {
  std::vector<Element> out;
  for (Element x = 0; x < size; ++x)
    if (mask >> x & 1u) out.push_back(x);
  return out;
}

CylinderSet random_cylinder(const InverseSystem& s, std::mt19937_64& rng) {
  const std::size_t level = rng() % s.level_count();
  std::vector<Element> sub;
  for (Element x = 0; x < s.level(level).size(); ++x)
    if (rng() & 1u) sub.push_back(x);
  return make_cylinder(s, level, std::move(sub));
}

// 1. m_p = m = (n-1) m* on every top-level cylinder.
Outcome haar_identity(std::vector<NamedSystem>& systems) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::set<int> arities;
  std::uint64_t exhaustive = 0, sampled = 0;
  std::mt19937_64 rng(kSeed);
  for (auto& [name, s] : systems) {
    if (validate_system(s).failed()) {
      o.fail(name + " does not validate");
      continue;
    }
    arities.insert(s.arity());
    HaarContext ctx(s, thread_from_top(s, 0));
    const std::size_t top = s.index().top(), size = s.level(top).size();
    auto run = [&](CylinderSet a) {
      if (check_haar_identity(ctx, a).failed()) o.fail(name + ": identity fails");
    };
    if (size <= 16) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask, ++exhaustive)
        run({top, mask_subset(mask, size)});
    } else {
      for (int k = 0; k < 4096; ++k, ++sampled) {
        CylinderSet a{top, {}};
        for (Element x = 0; x < size; ++x)
          if (rng() & 1u) a.subset.push_back(x);
        run(a);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (systems.size() < 6) o.fail("fewer than 6 systems");
  for (int n : {2, 3, 4, 5})
    if (!arities.count(n)) o.fail("no system with n=" + std::to_string(n));
  if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << systems.size() << " systems, " << exhaustive << " exhaustive + " << sampled << " sampled cylinders, "
       << static_cast<int>(secs * 1000) << " ms";
    o.detail = ss.str();
  }
  return o;
}

// 2. m*(G) = m*(K) = 1/(n-1) in every induced cover system.
Outcome cover_constant(const std::vector<NamedSystem>& systems) {
  Outcome o;
  std::size_t levels = 0;
  for (const auto& [name, s] : systems) {
    HaarContext ctx(s, thread_from_top(s, 0));
    const auto& covers = ctx.covers();
    if (!covers.ok()) {
      o.fail(name + ": cover system incompatible");
      continue;
    }
    const Measure expected(1, s.arity() - 1);
    for (std::size_t i = 0; i < s.level_count(); ++i, ++levels) {
      if (ctx.m_star(full_cylinder(s, i)) != expected) o.fail(name + ": m*(G) != 1/(n-1)");
      const auto& c = covers.covers[i];
      const Measure k(static_cast<std::int64_t>(c.kernel.size()), static_cast<std::int64_t>(c.cover.size()));
      if (k != expected) o.fail(name + ": m*(K) != 1/(n-1)");
    }
    // K is a cylinder of the cover system: its preimage at each level is K.
    for (const auto& [key, map] : covers.groups.maps) {
      const auto& from = covers.covers[key.first];
      const auto& to = covers.covers[key.second];
      for (Element u = 0; u < from.cover.size(); ++u) {
        const bool in_k = std::binary_search(from.kernel.begin(), from.kernel.end(), u);
        if (in_k != std::binary_search(to.kernel.begin(), to.kernel.end(), map[u]))
          o.fail(name + ": K not preserved by the cover transitions");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(levels) + " cover levels";
  return o;
}

std::vector<std::shared_ptr<const HGPresentation>> small(const std::vector<std::shared_ptr<const HGPresentation>>& ps) {
  std::vector<std::shared_ptr<const HGPresentation>> out;
  for (const auto& p : ps)
    if (p->base.size() <= 8 && p->arity <= 5) out.push_back(p);
  return out;
}

// 3. All five cover properties; item 4 exhaustive where s^n <= 10^6.
Outcome cover_contract(const std::vector<std::shared_ptr<const HGPresentation>>& ps) {
  Outcome o;
  std::size_t exhaustive = 0;
  for (const auto& p : ps) {
    auto r = verify_cover_properties(build_post_cover(p), derive(p));
    if (r.items.size() != 5) o.fail(describe(*p) + ": expected 5 items");
    for (const auto& it : r.items)
      if (it.failed()) o.fail(describe(*p) + ": " + it.check);
    double product = 1;
    for (int k = 0; k < p->arity; ++k) product *= static_cast<double>(p->base.size());
    if (product <= 1e6) {
      if (r.items.size() > 3 && r.items[3].status != CheckStatus::Pass) o.fail(describe(*p) + ": item 4 not exhaustive");
      ++exhaustive;
    }
  }
  if (o.pass) o.detail = std::to_string(ps.size()) + " presentations, " + std::to_string(exhaustive) + " with exhaustive products";
  return o;
}

// 4. derive then recover at every base point reproduces f.
Outcome round_trip(const std::vector<std::shared_ptr<const HGPresentation>>& ps) {
  Outcome o;
  std::uint64_t points = 0;
  for (const auto& p : ps) {
    const auto g = derive(p).materialized();
    for (Element a = 0; a < g.size(); ++a, ++points) {
      auto q = recover(g, a);
      if (derive(q).materialized().table() != g.table()) o.fail(describe(*p) + ": round trip differs at a=" + std::to_string(a));
    }
  }
  if (o.pass) o.detail = std::to_string(ps.size()) + " presentations, " + std::to_string(points) + " base points";
  return o;
}

// 5. Exhaustive axioms on every derived group; corrupted inputs rejected.
Outcome axioms(const std::vector<std::shared_ptr<const HGPresentation>>& ps) {
  Outcome o;
  CheckOptions opts;
  opts.strategy = Strategy::Exhaustive;
  opts.budget = 2'000'000'000;
  for (const auto& p : ps) {
    auto g = derive(p);
    auto r = verify_polyadic(g, opts);
    if (r.failed()) o.fail(describe(*p) + ": axioms fail");
    if (g.status().kind != VerificationStatus::Kind::Exhaustive) o.fail(describe(*p) + ": not exhaustive");
  }
  const std::pair<const char*, const char*> corrupted[] = {
      {"invalid/theta_moves_b.json", "theta-fixes-b"},
      {"invalid/theta_not_conjugation.json", "theta-power-is-conjugation-by-b"},
      {"invalid/non_latin_base.json", "base group axioms"},
      {"invalid/s1_broken_cocycle.json", "cocycle"},
  };
  std::function<const VerificationReport*(const VerificationReport&, const std::string&)> find;
  find = [&](const VerificationReport& r, const std::string& check) -> const VerificationReport* {
    if (r.check == check) return &r;
    for (const auto& it : r.items)
      if (const auto* f = find(it, check)) return f;
    return nullptr;
  };
  for (const auto& [rel, check] : corrupted) {
    auto r = io::validate_document(load(fs::path(POLYADIC_CORPUS) / rel));
    const auto* item = find(r, check);
    if (!r.failed() || !item || !item->failed() || item->witnesses.empty())
      o.fail(std::string(rel) + " not rejected with a witness");
  }
  if (o.pass) o.detail = std::to_string(ps.size()) + " derived groups exhaustive, 4 corrupted inputs rejected";
  return o;
}

// 6. Measure algebra over generated (system, cylinder, coefficient) instances.
Outcome measure_algebra(const std::vector<NamedSystem>& systems) {
  Outcome o;
  constexpr int kInstances = 10'000;
  std::mt19937_64 rng(kSeed);
  std::vector<HaarContext> contexts;
  for (const auto& [name, s] : systems) contexts.emplace_back(s, thread_from_top(s, 0));
  for (int k = 0; k < kInstances && o.pass; ++k) {
    const std::size_t pick = rng() % systems.size();
    const auto& [name, s] = systems[pick];
    const auto& ctx = contexts[pick];
    const std::size_t top = s.index().top();
    const auto a = random_cylinder(s, rng), b = random_cylinder(s, rng);
    const std::string where = name + " instance " + std::to_string(k);

    const auto fine = refine(s, a, top);
    if (ctx.m_p(fine) != ctx.m_p(a) || ctx.m(fine) != ctx.m(a) || ctx.m_star(fine) != ctx.m_star(a))
      o.fail(where + ": refinement");

    const auto u = cyl_union(s, a, b), i = cyl_intersect(s, a, b);
    if (ctx.m_p(u) + ctx.m_p(i) != ctx.m_p(a) + ctx.m_p(b)) o.fail(where + ": inclusion-exclusion");
    if (ctx.m_p(a) + ctx.m_p(cyl_complement(s, a)) != Measure(1)) o.fail(where + ": additivity");

    if (ctx.m_p(full_cylinder(s, a.level)) != Measure(1) || ctx.m_p(CylinderSet{a.level, {}}) != Measure(0))
      o.fail(where + ": normalization");

    if (!cyl_subset(s, i, a) || !cyl_subset(s, a, u) || ctx.m_p(i) > ctx.m_p(a) || ctx.m_p(a) > ctx.m_p(u))
      o.fail(where + ": monotonicity");

    std::vector<Thread> coeffs;
    for (int c = 0; c + 1 < s.arity(); ++c)
      coeffs.push_back(thread_from_top(s, static_cast<Element>(rng() % s.level(top).size())));
    if (check_translation_invariance(ctx, a, coeffs).failed()) o.fail(where + ": translation");
  }
  if (o.pass) o.detail = std::to_string(kInstances) + " instances, seed " + std::to_string(kSeed);
  return o;
}

// 7. m(theta(A)) = m(A) for every cylinder on Z3 <- Z9 <- Z27, theta = -x.
Outcome automorphism_tower() {
  Outcome o;
  auto s = io::build_system(io::parse_system_doc(load(fs::path(POLYADIC_CORPUS) / "systems/z3_deep.json")));
  if (s.level_count() != 3 || s.arity() != 3) o.fail("unexpected tower shape");
  if (s.level(0).presentation()->theta != std::vector<Element>{0, 2, 1}) o.fail("theta on Z3 is not 2x");
  HaarContext ctx(s, thread_from_top(s, 0));
  std::uint64_t count = 0;
  for (std::size_t level = 0; level < s.level_count(); ++level) {
    auto r = check_automorphism_invariance_exhaustive(ctx, level);
    count += r.instances;
    if (r.failed() || r.instances != (std::uint64_t{1} << s.level(level).size()))
      o.fail("level " + s.index().id(level));
  }
  // Through the retract system itself, at the level and one above.
  for (std::size_t level = 0; level < 2; ++level) {
    const std::size_t size = s.level(level).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask)
      if (check_automorphism_invariance(ctx, {level, mask_subset(mask, size)}).failed())
        o.fail("retract measure at " + s.index().id(level));
  }
  if (o.pass) o.detail = std::to_string(count) + " cylinder sets";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char* what, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s (%s)\n", n, o.pass ? "PASS" : "FAIL", what, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  auto systems = corpus_systems();
  const auto presentations = small(corpus_presentations());
  // The generated affine and S3 families widen the corpus for the cheap checks.
  auto wide = presentations;
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n)
      for (unsigned t = 1; t < m || (m == 1 && t == 1); ++t)
        for (unsigned b = 0; b < m; ++b) {
          auto p = fixtures::affine_presentation(m, n, t % m, b);
          if (!validate_presentation(*p).failed()) wide.push_back(p);
        }
  auto s3 = zoo::symmetric(3);
  for (int n = 2; n <= 5; ++n)
    for (Element by = 0; by < 6; ++by)
      for (Element b = 0; b < 6; ++b) {
        auto p = std::make_shared<const HGPresentation>(n, s3, zoo::inner_automorphism(s3, by), b);
        if (!validate_presentation(*p).failed()) wide.push_back(p);
      }

  report(1, "Haar identity on all top-level cylinders", [&] { return haar_identity(systems); });
  report(2, "m*(G) = m*(K) = 1/(n-1)", [&] { return cover_constant(systems); });
  report(3, "Post cover properties 1-5", [&] { return cover_contract(wide); });
  report(4, "derive/recover round trip", [&] { return round_trip(wide); });
  report(5, "axiom soundness and corrupted inputs", [&] { return axioms(presentations); });
  report(6, "measure algebra properties", [&] { return measure_algebra(systems); });
  report(7, "automorphism invariance on the Z3 tower", [] { return automorphism_tower(); });
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
