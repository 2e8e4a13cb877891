#include "polyadic/profinite.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polyadic/presentation.hpp"

namespace polyadic {

namespace {

std::string pair_name(const DirectedIndex& idx, std::size_t i, std::size_t j) {
  return idx.id(i) + ">" + idx.id(j);
}

bool next_tuple(std::vector<Element>& t, std::size_t radix) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < radix) return true;
    t[k] = 0;
  }
  return false;
}

VerificationReport check_transition(const InverseSystem& s, std::size_t i, std::size_t j,
                                    const CheckOptions& opts) {
  const auto& idx = s.index();
  const NaryGroup& gi = s.level(i);
  const NaryGroup& gj = s.level(j);
  const auto& phi = s.map(i, j);
  VerificationReport r;
  r.check = "transition " + pair_name(idx, i, j);
  r.status = CheckStatus::Pass;

  // Surjective with equal fibers.
  std::vector<std::size_t> fiber(gj.size(), 0);
  for (Element y : phi) fiber[y]++;
  r.values["fiber_size"] = std::to_string(gi.size() / gj.size());
  if (gi.size() % gj.size() != 0) {
    r.fail({"level sizes do not divide (|G_i|,|G_j|)",
            {static_cast<std::int64_t>(gi.size()), static_cast<std::int64_t>(gj.size())}});
  }
  for (Element y = 0; y < gj.size(); ++y)
    if (fiber[y] != gi.size() / gj.size()) {
      r.fail({"fiber size (element,size)", {y, static_cast<std::int64_t>(fiber[y])}});
      break;
    }

  // Polyadic homomorphism.
  const auto n = static_cast<std::size_t>(s.arity());
  std::vector<Element> xs(n, 0), ys(n);
  auto check = [&]() {
    r.instances++;
    for (std::size_t k = 0; k < n; ++k) ys[k] = phi[xs[k]];
    if (phi[gi.eval_unchecked(xs.data())] != gj.eval_unchecked(ys.data())) {
      Witness w{"not a homomorphism, tuple", {}};
      for (Element x : xs) w.values.push_back(x);
      r.fail(std::move(w));
      return false;
    }
    return true;
  };
  if (checked_pow(gi.size(), static_cast<unsigned>(n), opts.budget)) {
    while (check() && next_tuple(xs, gi.size())) {
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(gi.size() - 1));
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      for (auto& x : xs) x = pick(rng);
      if (!check()) break;
    }
    if (!r.failed()) r.status = CheckStatus::ProbabilisticPass;
    r.seed = opts.seed;
  }
  return r;
}

}  // namespace

DirectedIndex DirectedIndex::make(std::vector<std::string> ids,
                                  const std::vector<std::pair<std::string, std::string>>& relations,
                                  const std::string& top) {
  DirectedIndex d;
  d.ids_ = std::move(ids);
  const std::size_t m = d.ids_.size();
  if (m == 0) throw Error(ErrorKind::Schema, "system has no levels");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (d.ids_[a] == d.ids_[b]) throw Error(ErrorKind::Schema, "duplicate level id " + d.ids_[a]);
  d.le_.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) d.le_[a][a] = true;
  for (const auto& [hi, lo] : relations) {
    std::size_t i = d.find(hi), j = d.find(lo);
    if (i == j) continue;
    d.le_[j][i] = true;
    if (std::find(d.generators_.begin(), d.generators_.end(), std::pair{i, j}) == d.generators_.end())
      d.generators_.emplace_back(i, j);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (d.le_[a][k] && d.le_[k][b]) d.le_[a][b] = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (d.le_[a][b] && d.le_[b][a])
        throw Error(ErrorKind::Schema, "order has a cycle through " + d.ids_[a] + " and " + d.ids_[b]);
  d.top_ = d.find(top);
  for (std::size_t a = 0; a < m; ++a)
    if (!d.le_[a][d.top_])
      throw Error(ErrorKind::Schema, "top level " + top + " does not dominate " + d.ids_[a]);
  return d;
}

std::size_t DirectedIndex::find(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error(ErrorKind::Schema, "unknown level id " + id);
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t DirectedIndex::upper_bound(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> common;
  for (std::size_t k = 0; k < size(); ++k)
    if (leq(a, k) && leq(b, k)) common.push_back(k);
  for (std::size_t k : common) {
    bool minimal = std::none_of(common.begin(), common.end(),
                                [&](std::size_t o) { return o != k && leq(o, k); });
    if (minimal) return k;
  }
  return top_;
}

InverseSystem::InverseSystem(DirectedIndex index, std::vector<NaryGroup> levels,
                             std::map<TransitionKey, std::vector<Element>> maps)
    : index_(std::move(index)), levels_(std::move(levels)) {
  const std::size_t m = index_.size();
  if (levels_.size() != m) throw Error(ErrorKind::Schema, "one group per level is required");
  for (std::size_t i = 0; i < m; ++i) {
    if (levels_[i].arity() != levels_.front().arity())
      throw Error(ErrorKind::Schema, "levels have different arity");
    if (!levels_[i].presentation()) {
      auto p = std::make_shared<const HGPresentation>(recover(levels_[i], 0));
      levels_[i].attach_presentation(std::move(p));
    }
    identities_.push_back(std::vector<Element>(levels_[i].size()));
    std::iota(identities_.back().begin(), identities_.back().end(), 0);
  }
  for (auto& [key, map] : maps) {
    auto [i, j] = key;
    if (i >= m || j >= m || i == j || !index_.leq(j, i))
      throw Error(ErrorKind::Schema, "map " + std::to_string(i) + ">" + std::to_string(j) +
                                         " is not between comparable levels");
    if (map.size() != levels_[i].size())
      throw Error(ErrorKind::Schema, "map " + pair_name(index_, i, j) + " has the wrong length");
    for (Element y : map)
      if (y >= levels_[j].size())
        throw Error(ErrorKind::Schema, "map " + pair_name(index_, i, j) + " has an out-of-range image");
    given_.insert(key);
  }
  for (auto key : index_.generating_pairs())
    if (!maps.count(key))
      throw Error(ErrorKind::Schema, "missing map " + pair_name(index_, key.first, key.second));
  maps_ = std::move(maps);

  // Compose along the order until every comparable pair has a map.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (i == k || !index_.leq(k, i) || maps_.count({i, k})) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (j == i || j == k || !maps_.count({i, j}) || !maps_.count({j, k})) continue;
          const auto& a = maps_.at({i, j});
          const auto& b = maps_.at({j, k});
          std::vector<Element> c(a.size());
          for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
          maps_.emplace(TransitionKey{i, k}, std::move(c));
          changed = true;
          break;
        }
      }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (i != k && index_.leq(k, i) && !maps_.count({i, k}))
        throw Error(ErrorKind::Schema, "no map path for " + pair_name(index_, i, k));
}

const std::vector<Element>& InverseSystem::map(std::size_t i, std::size_t j) const {
  if (i == j) return identities_.at(i);
  auto it = maps_.find({i, j});
  if (it == maps_.end())
    throw Error(ErrorKind::InvalidArgument, "levels " + index_.id(i) + " and " + index_.id(j) +
                                                " are not comparable");
  return it->second;
}

VerificationReport validate_system(InverseSystem& s, const CheckOptions& opts) {
  VerificationReport report;
  report.check = "inverse-system";
  const auto& idx = s.index();
  const std::size_t m = s.level_count();
  for (std::size_t i = 0; i < m; ++i) {
    auto r = verify_polyadic(s.level(i), opts);
    r.subject = "level " + idx.id(i);
    auto p = validate_presentation(*s.level(i).presentation());
    p.subject = "level " + idx.id(i) + " presentation";
    report.add_item(std::move(r));
    report.add_item(std::move(p));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && idx.leq(j, i)) report.add_item(check_transition(s, i, j, opts));

  VerificationReport cocycle;
  cocycle.check = "cocycle";
  cocycle.status = CheckStatus::Pass;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (i == j || j == k || !idx.leq(j, i) || !idx.leq(k, j)) continue;
        const auto& ij = s.map(i, j);
        const auto& jk = s.map(j, k);
        const auto& ik = s.map(i, k);
        for (Element x = 0; x < ij.size(); ++x) {
          cocycle.instances++;
          if (jk[ij[x]] != ik[x]) {
            cocycle.fail({"phi_jk(phi_ij(x)) != phi_ik(x) at " + idx.id(i) + ">" + idx.id(j) +
                              ">" + idx.id(k) + " (x,lhs,rhs)",
                          {x, jk[ij[x]], ik[x]}});
            break;
          }
        }
      }
  report.add_item(std::move(cocycle));
  return report;
}

Thread thread_from_top(const InverseSystem& s, Element top_element) {
  const std::size_t top = s.index().top();
  if (top_element >= s.level(top).size())
    throw Error(ErrorKind::InvalidArgument, "top element out of range");
  Thread t;
  for (std::size_t i = 0; i < s.level_count(); ++i) t.at.push_back(s.map(top, i)[top_element]);
  return t;
}

void check_thread(const InverseSystem& s, const Thread& t) {
  const std::size_t m = s.level_count();
  if (t.at.size() != m)
    throw Error(ErrorKind::InvalidArgument, "thread needs one element per level");
  for (std::size_t i = 0; i < m; ++i)
    if (t.at[i] >= s.level(i).size())
      throw Error(ErrorKind::InvalidArgument, "thread element out of range at " + s.index().id(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && s.index().leq(j, i) && s.map(i, j)[t.at[i]] != t.at[j])
        throw Error(ErrorKind::InvalidArgument,
                    "thread is not compatible across " + pair_name(s.index(), i, j));
}

GroupSystem induced_retract_system(const InverseSystem& s, const Thread& a) {
  check_thread(s, a);
  GroupSystem out;
  out.report.check = "induced-retract-system";
  out.report.status = CheckStatus::Pass;
  for (std::size_t i = 0; i < s.level_count(); ++i) out.levels.push_back(retract(s.level(i), a.at[i]));
  out.maps = s.maps();
  for (const auto& [key, phi] : out.maps) {
    out.report.instances++;
    if (auto bad = homomorphism_violation(out.levels[key.first], out.levels[key.second], phi))
      out.report.fail({"retract transition " + pair_name(s.index(), key.first, key.second) +
                           " not a homomorphism (x,y)",
                       {bad->first, bad->second}});
  }
  return out;
}

CoverSystem induced_cover_system(const InverseSystem& s) {
  CoverSystem out;
  auto& rep = out.groups.report;
  rep.check = "induced-cover-system";
  rep.status = CheckStatus::Pass;
  const auto& idx = s.index();
  for (std::size_t i = 0; i < s.level_count(); ++i) {
    out.covers.push_back(build_post_cover(s.level(i).shared_presentation()));
    out.groups.levels.push_back(out.covers.back().cover);
  }
  for (const auto& [key, phi] : s.maps()) {
    auto [i, j] = key;
    const HGPresentation& pi = *s.level(i).presentation();
    const HGPresentation& pj = *s.level(j).presentation();
    const std::string name = pair_name(idx, i, j);
    rep.instances++;
    if (phi[pi.b] != pj.b) {
      rep.fail({"phi(b_i) != b_j at " + name + " (b_i,phi(b_i),b_j)", {pi.b, phi[pi.b], pj.b}});
      continue;
    }
    bool ok = true;
    for (Element x = 0; x < pi.base.size() && ok; ++x)
      if (phi[pi.theta[x]] != pj.theta[phi[x]]) {
        rep.fail({"phi theta_i != theta_j phi at " + name + " (x)", {x}});
        ok = false;
      }
    if (!ok) continue;
    if (auto bad = homomorphism_violation(pi.base, pj.base, phi)) {
      rep.fail({"phi not a base homomorphism at " + name + " (x,y)", {bad->first, bad->second}});
      continue;
    }
    auto cmap = induced_cover_map(out.covers[i], out.covers[j], phi);
    if (auto bad = homomorphism_violation(out.covers[i].cover, out.covers[j].cover, cmap)) {
      rep.fail({"cover transition not a homomorphism at " + name + " (u,v)", {bad->first, bad->second}});
      continue;
    }
    out.groups.maps.emplace(key, std::move(cmap));
  }
  return out;
}

std::vector<LevelCoefficients> thread_translate_data(const InverseSystem& s, std::size_t slot,
                                                     const std::vector<Thread>& coefficients) {
  const auto n = static_cast<std::size_t>(s.arity());
  if (slot < 1 || slot > n) throw Error(ErrorKind::InvalidArgument, "slot out of range");
  if (coefficients.size() != n - 1)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n - 1) +
                                                " coefficient threads, got " +
                                                std::to_string(coefficients.size()));
  for (const auto& t : coefficients) check_thread(s, t);
  std::vector<LevelCoefficients> out(s.level_count());
  for (std::size_t i = 0; i < s.level_count(); ++i)
    for (std::size_t k = 0; k < n - 1; ++k)
      (k + 1 < slot ? out[i].prefix : out[i].suffix).push_back(coefficients[k].at[i]);
  return out;
}

}  // namespace polyadic
