#include "polyadic/haar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <random>

#include "polyadic/presentation.hpp"

namespace polyadic {

namespace {

std::vector<Element> image_under(const std::vector<Element>& map, const std::vector<Element>& subset) {
  std::vector<Element> out;
  out.reserve(subset.size());
  for (Element x : subset) out.push_back(map[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Witness subset_witness(std::string label, const CylinderSet& a, std::vector<std::int64_t> head = {}) {
  Witness w{std::move(label), std::move(head)};
  w.values.push_back(static_cast<std::int64_t>(a.level));
  for (Element x : a.subset) w.values.push_back(x);
  return w;
}

template <class Op>
CylinderSet combine(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b, Op op) {
  const std::size_t lvl = s.index().upper_bound(a.level, b.level);
  CylinderSet ra = refine(s, a, lvl), rb = refine(s, b, lvl);
  CylinderSet out{lvl, {}};
  op(ra.subset.begin(), ra.subset.end(), rb.subset.begin(), rb.subset.end(),
     std::back_inserter(out.subset));
  return out;
}

// Minimal level strictly above `level`, if any.
std::optional<std::size_t> level_above(const InverseSystem& s, std::size_t level) {
  const auto& idx = s.index();
  std::vector<std::size_t> above;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (k != level && idx.leq(level, k)) above.push_back(k);
  for (std::size_t k : above)
    if (std::none_of(above.begin(), above.end(), [&](std::size_t o) { return o != k && idx.leq(o, k); }))
      return k;
  return std::nullopt;
}

std::vector<Element> mask_to_subset(std::uint64_t mask) {
  std::vector<Element> out;
  for (Element x = 0; mask; ++x, mask >>= 1)
    if (mask & 1) out.push_back(x);
  return out;
}

}  // namespace

std::string to_string(const Measure& m) {
  return std::to_string(m.numerator()) + "/" + std::to_string(m.denominator());
}

Measure parse_measure(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Measure(std::stoll(text));
    return Measure(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Schema, "malformed rational '" + text + "'");
  }
}

CylinderSet make_cylinder(const InverseSystem& s, std::size_t level, std::vector<Element> subset) {
  if (level >= s.level_count()) throw Error(ErrorKind::InvalidArgument, "level out of range");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!subset.empty() && subset.back() >= s.level(level).size())
    throw Error(ErrorKind::InvalidArgument, "subset element out of range at level " + s.index().id(level));
  return {level, std::move(subset)};
}

CylinderSet full_cylinder(const InverseSystem& s, std::size_t level) {
  std::vector<Element> all(s.level(level).size());
  for (Element x = 0; x < all.size(); ++x) all[x] = x;
  return {level, std::move(all)};
}

CylinderSet refine(const InverseSystem& s, const CylinderSet& a, std::size_t to) {
  if (to >= s.level_count() || !s.index().leq(a.level, to))
    throw Error(ErrorKind::InvalidArgument, "cannot refine: levels incomparable");
  if (to == a.level) return a;
  const auto& phi = s.map(to, a.level);
  std::vector<bool> in(s.level(a.level).size(), false);
  for (Element x : a.subset) in[x] = true;
  CylinderSet out{to, {}};
  for (Element x = 0; x < phi.size(); ++x)
    if (in[phi[x]]) out.subset.push_back(x);
  return out;
}

CylinderSet cyl_union(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b) {
  return combine(s, a, b, [](auto... args) { return std::set_union(args...); });
}

CylinderSet cyl_intersect(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b) {
  return combine(s, a, b, [](auto... args) { return std::set_intersection(args...); });
}

CylinderSet cyl_complement(const InverseSystem& s, const CylinderSet& a) {
  CylinderSet full = full_cylinder(s, a.level);
  CylinderSet out{a.level, {}};
  std::set_difference(full.subset.begin(), full.subset.end(), a.subset.begin(), a.subset.end(),
                      std::back_inserter(out.subset));
  return out;
}

bool cyl_subset(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b) {
  const std::size_t lvl = s.index().upper_bound(a.level, b.level);
  CylinderSet ra = refine(s, a, lvl), rb = refine(s, b, lvl);
  return std::includes(rb.subset.begin(), rb.subset.end(), ra.subset.begin(), ra.subset.end());
}

Measure measure_polyadic(const InverseSystem& s, const CylinderSet& a) {
  return Measure(static_cast<std::int64_t>(a.subset.size()),
                 static_cast<std::int64_t>(s.level(a.level).size()));
}

Measure measure_retract(const GroupSystem& retracts, const CylinderSet& a) {
  if (!retracts.ok()) throw Error(ErrorKind::IncompatibleSystem, "retract system failed verification");
  return Measure(static_cast<std::int64_t>(a.subset.size()),
                 static_cast<std::int64_t>(retracts.levels.at(a.level).size()));
}

Measure measure_cover(const CoverSystem& covers, const CylinderSet& a) {
  if (!covers.ok()) throw Error(ErrorKind::IncompatibleSystem, "cover system unavailable: presentations incompatible");
  const PostCoverGroup& c = covers.covers.at(a.level);
  auto embedded = cover_subset_of_G(c, a.subset);
  return Measure(static_cast<std::int64_t>(embedded.size()), static_cast<std::int64_t>(c.cover.size()));
}

HaarContext::HaarContext(const InverseSystem& s, Thread base_point)
    : system_(&s),
      base_point_(std::move(base_point)),
      retracts_(induced_retract_system(s, base_point_)),
      covers_(induced_cover_system(s)) {}

VerificationReport check_haar_identity(const HaarContext& ctx, const CylinderSet& a) {
  VerificationReport r;
  r.check = "haar-identity";
  r.instances = 1;
  const Measure mp = ctx.m_p(a), m = ctx.m(a), ms = ctx.m_star(a);
  const Measure scaled = ms * static_cast<std::int64_t>(ctx.system().arity() - 1);
  r.values["m_p"] = to_string(mp);
  r.values["m"] = to_string(m);
  r.values["m_star"] = to_string(ms);
  const bool holds = mp == m && mp == scaled;
  r.values["identity_holds"] = holds ? "true" : "false";
  r.status = CheckStatus::Pass;
  if (!holds) {
    r.fail(subset_witness("m_p, m, (n-1)m* differ (mp num/den, m num/den, scaled num/den; level, subset)", a,
                          {mp.numerator(), mp.denominator(), m.numerator(), m.denominator(),
                           scaled.numerator(), scaled.denominator()}));
    r.notes.push_back(std::string("internal error: theorem violation (") + to_string(ErrorKind::Internal) + ")");
  }
  return r;
}

VerificationReport check_translation_invariance(const HaarContext& ctx, const CylinderSet& a,
                                                const std::vector<Thread>& coefficients,
                                                std::vector<std::size_t> slots) {
  const InverseSystem& s = ctx.system();
  const auto n = static_cast<std::size_t>(s.arity());
  if (slots.empty())
    for (std::size_t i = 1; i <= n; ++i) slots.push_back(i);
  VerificationReport r;
  r.check = "translation-invariance";
  r.status = CheckStatus::Pass;
  const NaryGroup& g = s.level(a.level);
  const HGPresentation& p = *g.presentation();
  const Measure base = ctx.m_p(a);
  for (std::size_t slot : slots) {
    auto data = thread_translate_data(s, slot, coefficients);
    const auto& coeff = data[a.level];
    CylinderSet moved{a.level, translate(g, slot, coeff.prefix, coeff.suffix, a.subset)};
    CylinderSet twisted{a.level, image_under(p.theta_power(slot - 1), a.subset)};
    r.instances++;
    const Measure mt = ctx.m_p(moved);
    if (mt != base)
      r.fail(subset_witness("m_p(translate) != m_p(A) (slot, |translate|; level, subset)", a,
                            {static_cast<std::int64_t>(slot), static_cast<std::int64_t>(moved.subset.size())}));
    else if (mt != ctx.m(twisted))
      r.fail(subset_witness("m_p(translate) != m(theta^(i-1)(A)) (slot; level, subset)", a,
                            {static_cast<std::int64_t>(slot)}));
  }
  return r;
}

VerificationReport check_automorphism_invariance(const HaarContext& ctx, const CylinderSet& a) {
  const InverseSystem& s = ctx.system();
  VerificationReport r;
  r.check = "automorphism-invariance";
  r.status = CheckStatus::Pass;
  auto at_level = [&](const CylinderSet& c) {
    const auto& theta = s.level(c.level).presentation()->theta;
    CylinderSet img{c.level, image_under(theta, c.subset)};
    r.instances++;
    if (ctx.m(img) != ctx.m(c))
      r.fail(subset_witness("m(theta(A)) != m(A) (level, subset)", c));
    return img;
  };
  CylinderSet img = at_level(a);
  if (auto up = level_above(s, a.level)) {
    CylinderSet ra = refine(s, a, *up);
    CylinderSet img_up = at_level(ra);
    // theta commutes with the transition, so both routes give one set.
    if (refine(s, img, *up) != img_up)
      r.fail(subset_witness("theta does not commute with refinement (level, subset)", a));
  } else {
    r.notes.push_back("no level above " + s.index().id(a.level));
  }
  return r;
}

VerificationReport check_automorphism_invariance_exhaustive(const HaarContext& ctx,
                                                            std::size_t level) {
  const InverseSystem& s = ctx.system();
  const std::size_t size = s.level(level).size();
  if (size > 32) throw Error(ErrorKind::BudgetExceeded, "exhaustive subset enumeration needs size <= 32");
  if (!ctx.retracts().ok()) throw Error(ErrorKind::IncompatibleSystem, "retract system failed verification");
  const auto& theta = s.level(level).presentation()->theta;
  const std::size_t chunks = (size + 7) / 8;
  std::vector<std::array<std::uint32_t, 256>> lut(chunks);
  for (std::size_t c = 0; c < chunks; ++c)
    for (unsigned byte = 0; byte < 256; ++byte) {
      std::uint32_t img = 0;
      for (unsigned t = 0; t < 8; ++t) {
        const std::size_t x = c * 8 + t;
        if ((byte >> t & 1u) && x < size) img |= std::uint32_t{1} << theta[x];
      }
      lut[c][byte] = img;
    }
  VerificationReport r;
  r.check = "automorphism-invariance (all subsets of " + s.index().id(level) + ")";
  r.status = CheckStatus::Pass;
  const std::uint64_t end = std::uint64_t{1} << size;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    r.instances++;
    std::uint32_t img = 0;
    for (std::size_t c = 0; c < chunks; ++c) img |= lut[c][(mask >> (8 * c)) & 0xFF];
    // Both sets live at one level, so equal measure is equal cardinality.
    if (std::popcount(img) != std::popcount(mask)) {
      r.fail(subset_witness("m(theta(A)) != m(A) (level, subset)", {level, mask_to_subset(mask)}));
      break;
    }
  }
  return r;
}

VerificationReport run_haar_suite(const HaarContext& ctx, const HaarSuiteOptions& opts) {
  const InverseSystem& s = ctx.system();
  const auto n = static_cast<std::size_t>(s.arity());
  const std::size_t top = s.index().top();
  VerificationReport suite;
  suite.check = "haar-suite";
  suite.seed = opts.seed;
  if (!ctx.retracts().ok() || !ctx.covers().ok()) {
    if (!ctx.retracts().ok()) suite.add_item(ctx.retracts().report);
    if (!ctx.covers().ok()) suite.add_item(ctx.covers().groups.report);
    return suite;
  }
  VerificationReport identity, translation, automorphism;
  identity.check = "haar-identity";
  translation.check = "translation-invariance";
  automorphism.check = "automorphism-invariance";
  for (auto* r : {&identity, &translation, &automorphism}) r->status = CheckStatus::Pass;

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick_top(0, static_cast<Element>(s.level(top).size() - 1));
  auto absorb = [](VerificationReport& into, const VerificationReport& from) {
    into.instances += from.instances;
    if (from.failed())
      for (const auto& w : from.witnesses) into.fail(w);
  };
  auto run_one = [&](const CylinderSet& a) {
    absorb(identity, check_haar_identity(ctx, a));
    std::vector<Thread> coeffs;
    for (std::size_t k = 0; k + 1 < n; ++k) coeffs.push_back(thread_from_top(s, pick_top(rng)));
    absorb(translation, check_translation_invariance(ctx, a, coeffs));
    absorb(automorphism, check_automorphism_invariance(ctx, a));
  };

  bool sampled = false;
  for (std::size_t level = 0; level < s.level_count(); ++level) {
    const std::size_t size = s.level(level).size();
    if (size <= opts.exhaustive_bits) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask)
        run_one({level, mask_to_subset(mask)});
    } else {
      sampled = true;
      std::bernoulli_distribution coin(0.5);
      for (std::uint64_t k = 0; k < opts.samples; ++k) {
        CylinderSet a{level, {}};
        for (Element x = 0; x < size; ++x)
          if (coin(rng)) a.subset.push_back(x);
        run_one(a);
      }
    }
  }

  for (auto* r : {&identity, &translation, &automorphism}) {
    if (sampled && !r->failed()) {
      r->status = CheckStatus::ProbabilisticPass;
      r->seed = opts.seed;
      r->notes.push_back("levels larger than " + std::to_string(opts.exhaustive_bits) +
                         " elements sampled with " + std::to_string(opts.samples) + " subsets");
    }
    suite.add_item(std::move(*r));
  }
  return suite;
}

}  // namespace polyadic
