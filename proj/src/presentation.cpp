#include "polyadic/presentation.hpp"

#include <random>
#include <string>

namespace polyadic {

namespace {

bool next_tuple(std::vector<Element>& t, std::size_t radix) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < radix) return true;
    t[k] = 0;
  }
  return false;
}

// theta^(n-1)(x) == b x b^-1 and theta(b) == b, without the automorphism
// check (candidates from automorphisms() already satisfy it).
bool conditions_hold(const FiniteGroup& base, const std::vector<Element>& theta, Element b,
                     int arity) {
  if (theta[b] != b) return false;
  for (Element x = 0; x < base.size(); ++x) {
    Element y = x;
    for (int k = 0; k < arity - 1; ++k) y = theta[y];
    if (y != base.conjugate(b, x)) return false;
  }
  return true;
}

}  // namespace

HGPresentation::HGPresentation(int arity_, FiniteGroup base_, std::vector<Element> theta_,
                               Element b_)
    : arity(arity_), base(std::move(base_)), theta(std::move(theta_)), b(b_) {
  if (arity < 2) throw Error(ErrorKind::InvalidArgument, "arity must be at least 2");
  if (theta.size() != base.size())
    throw Error(ErrorKind::InvalidArgument, "theta must have one image per base element");
  for (Element y : theta)
    if (y >= base.size()) throw Error(ErrorKind::InvalidArgument, "theta image out of range");
  if (b >= base.size()) throw Error(ErrorKind::InvalidArgument, "b out of range");
  powers_.reserve(static_cast<std::size_t>(arity));
  std::vector<Element> p(base.size());
  for (Element x = 0; x < base.size(); ++x) p[x] = x;
  for (int k = 0; k < arity; ++k) {
    powers_.push_back(p);
    for (auto& y : p) y = theta[y];
  }
}

Element HGPresentation::evaluate(const Element* xs) const noexcept {
  Element r = xs[0];
  for (int k = 1; k < arity; ++k) r = base.mul(r, powers_[static_cast<std::size_t>(k)][xs[k]]);
  return base.mul(r, b);
}

VerificationReport validate_presentation(const HGPresentation& p) {
  const FiniteGroup& g = p.base;
  const std::size_t s = g.size();
  VerificationReport report;
  report.check = "hg-presentation";

  VerificationReport aut;
  aut.check = "theta-automorphism";
  aut.status = CheckStatus::Pass;
  std::vector<int> preimage(s, -1);
  for (Element x = 0; x < s; ++x) {
    if (preimage[p.theta[x]] >= 0) {
      aut.fail({"not injective (x,y,image)", {preimage[p.theta[x]], x, p.theta[x]}});
      break;
    }
    preimage[p.theta[x]] = static_cast<int>(x);
  }
  for (Element x = 0; x < s && !aut.failed(); ++x)
    for (Element y = 0; y < s; ++y) {
      aut.instances++;
      if (p.theta[g.mul(x, y)] != g.mul(p.theta[x], p.theta[y])) {
        aut.fail({"not multiplicative (x,y)", {x, y}});
        break;
      }
    }
  report.add_item(std::move(aut));

  VerificationReport fixes;
  fixes.check = "theta-fixes-b";
  fixes.status = CheckStatus::Pass;
  fixes.instances = 1;
  if (p.theta[p.b] != p.b) fixes.fail({"b,theta(b)", {p.b, p.theta[p.b]}});
  report.add_item(std::move(fixes));

  VerificationReport inner;
  inner.check = "theta-power-is-conjugation-by-b";
  inner.status = CheckStatus::Pass;
  const auto& top = p.theta_power(static_cast<std::size_t>(p.arity - 1));
  for (Element x = 0; x < s; ++x) {
    inner.instances++;
    Element want = g.conjugate(p.b, x);
    if (top[x] != want) {
      inner.fail({"x,theta^(n-1)(x),b x b^-1", {x, top[x], want}});
      break;
    }
  }
  report.add_item(std::move(inner));
  return report;
}

NaryGroup derive(std::shared_ptr<const HGPresentation> p) {
  return NaryGroup::from_presentation(std::move(p));
}

NaryGroup derive(const HGPresentation& p) {
  return derive(std::make_shared<const HGPresentation>(p));
}

HGPresentation recover(const NaryGroup& g, Element a, const RecoverOptions& opts) {
  if (g.size() > opts.max_size)
    throw Error(ErrorKind::BudgetExceeded, "carrier of size " + std::to_string(g.size()) +
                                               " exceeds the automorphism search limit " +
                                               std::to_string(opts.max_size));
  FiniteGroup base = retract(g, a);
  const int n = g.arity();
  const std::size_t s = g.size();
  const bool exhaustive = checked_pow(s, static_cast<unsigned>(n), opts.budget).has_value();

  // Fixed comparison tuples in sampled mode keep the search deterministic.
  std::vector<std::vector<Element>> samples;
  if (!exhaustive) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(s - 1));
    samples.resize(opts.budget, std::vector<Element>(static_cast<std::size_t>(n)));
    for (auto& t : samples)
      for (auto& x : t) x = pick(rng);
  }

  for (const auto& theta : automorphisms(base)) {
    for (Element b = 0; b < s; ++b) {
      if (!conditions_hold(base, theta, b, n)) continue;
      HGPresentation p(n, base, theta, b);
      bool fits = true;
      if (exhaustive) {
        std::vector<Element> xs(static_cast<std::size_t>(n), 0);
        do {
          fits = p.evaluate(xs.data()) == g.eval_unchecked(xs.data());
        } while (fits && next_tuple(xs, s));
      } else {
        for (const auto& t : samples)
          if (!(fits = p.evaluate(t.data()) == g.eval_unchecked(t.data()))) break;
      }
      if (fits) return p;
    }
  }
  throw Error(ErrorKind::NotPolyadic,
              "no Hosszu-Gloskin presentation reproduces the operation over base point " +
                  std::to_string(a));
}

}  // namespace polyadic
