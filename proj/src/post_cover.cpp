#include "polyadic/post_cover.hpp"

#include <algorithm>
#include <random>

namespace polyadic {

PostCoverGroup build_post_cover(std::shared_ptr<const HGPresentation> p) {
  if (!p) throw Error(ErrorKind::InvalidArgument, "null presentation");
  if (validate_presentation(*p).failed())
    throw Error(ErrorKind::InvalidPresentation, "presentation fails validation");
  const FiniteGroup& g = p->base;
  const std::size_t s = g.size();
  const auto grades = static_cast<std::size_t>(p->arity - 1);
  const std::size_t order = grades * s;

  std::vector<Element> b_pow(grades + 1);
  for (std::size_t q = 0; q <= grades; ++q) b_pow[q] = g.pow(p->b, static_cast<long long>(q));

  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t u = 0; u < order; ++u) {
    const Element x = static_cast<Element>(u % s);
    const std::size_t i = u / s;
    names[u] = "(" + g.carrier().name(x) + "," + std::to_string(i) + ")";
    for (std::size_t v = 0; v < order; ++v) {
      const Element y = static_cast<Element>(v % s);
      const std::size_t j = v / s;
      const std::size_t q = (i + j) / grades, r = (i + j) % grades;
      // A single grade: the cover is (G, f) itself.
      const Element z = grades == 1 ? g.mul(g.mul(x, p->theta[y]), p->b)
                                    : g.mul(g.mul(x, p->theta_power(i)[y]), b_pow[q]);
      table[u * order + v] = static_cast<Element>(r * s + z);
    }
  }

  PostCoverGroup c{p, FiniteGroup::from_table(Carrier(order, std::move(names)), std::move(table)),
                   {}, {}, {}};
  const std::size_t embed_grade = 1 % grades;
  for (Element x = 0; x < s; ++x) {
    c.embedding.push_back(c.pair_index(x, embed_grade));
    c.kernel.push_back(c.pair_index(x, 0));
  }
  for (std::size_t u = 0; u < order; ++u) c.grading.push_back(u / s);
  return c;
}

VerificationReport verify_cover_properties(const PostCoverGroup& c, const NaryGroup& g,
                                           std::uint64_t product_budget, std::uint64_t seed) {
  const FiniteGroup& cov = c.cover;
  const std::size_t order = cov.size();
  const std::size_t s = c.base_size();
  const std::size_t grades = c.grades();
  VerificationReport report;
  report.check = "post-cover";
  if (g.size() != s || g.arity() != c.source->arity)
    throw Error(ErrorKind::InvalidArgument, "cover and group shapes differ");

  std::vector<bool> in_k(order, false);
  for (Element k : c.kernel) in_k[k] = true;

  {
    VerificationReport it;
    it.check = "1: K normal subgroup isomorphic to the base";
    it.status = CheckStatus::Pass;
    auto subgroup_ok = [&]() {
      for (Element a : c.kernel)
        for (Element b : c.kernel) {
          it.instances++;
          if (!in_k[cov.mul(a, b)]) {
            it.fail({"K not closed (a,b)", {a, b}});
            return false;
          }
        }
      for (Element x = 0; x < order; ++x)
        for (Element k : c.kernel) {
          it.instances++;
          if (!in_k[cov.conjugate(x, k)]) {
            it.fail({"K not normal (g,k)", {x, k}});
            return false;
          }
        }
      return true;
    };
    if (subgroup_ok() && !groups_isomorphic(induced_subgroup(cov, c.kernel), c.source->base))
      it.fail({"K not isomorphic to the base (|K|)", {static_cast<std::int64_t>(c.kernel.size())}});
    report.add_item(std::move(it));
  }

  {
    VerificationReport it;
    it.check = "2: G is a coset of K";
    it.status = CheckStatus::Pass;
    std::vector<Element> image = c.embedding;
    std::sort(image.begin(), image.end());
    std::vector<Element> left, right;
    const Element g0 = c.embedding.front();
    for (Element k : c.kernel) {
      left.push_back(cov.mul(g0, k));
      right.push_back(cov.mul(k, g0));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    it.instances = 2 * c.kernel.size();
    if (image != left || image != right) {
      auto diff = std::mismatch(image.begin(), image.end(), image != left ? left.begin() : right.begin());
      it.fail({"embedded element outside g0 K", {diff.first == image.end() ? -1 : *diff.first}});
    }
    report.add_item(std::move(it));
  }

  {
    VerificationReport it;
    it.check = "3: G*/K cyclic of order n-1";
    it.status = CheckStatus::Pass;
    // Left cosets x K, labelled by first appearance.
    std::vector<int> label(order, -1);
    int cosets = 0;
    for (Element x = 0; x < order; ++x) {
      if (label[x] >= 0) continue;
      for (Element k : c.kernel) label[cov.mul(x, k)] = cosets;
      ++cosets;
    }
    // Quotient multiplication must be well defined.
    std::vector<int> qtable(static_cast<std::size_t>(cosets * cosets), -1);
    for (Element x = 0; x < order && !it.failed(); ++x)
      for (Element y = 0; y < order; ++y) {
        it.instances++;
        int& slot = qtable[static_cast<std::size_t>(label[x] * cosets + label[y])];
        int z = label[cov.mul(x, y)];
        if (slot < 0) slot = z;
        else if (slot != z) {
          it.fail({"quotient product not well defined (x,y)", {x, y}});
          break;
        }
      }
    if (static_cast<std::size_t>(cosets) != grades)
      it.fail({"number of cosets, expected", {cosets, static_cast<std::int64_t>(grades)}});
    // The coset of G generates the quotient: its order is n-1.
    std::size_t ord = 1;
    for (Element y = c.embedding.front(); !in_k[y]; y = cov.mul(y, c.embedding.front())) ++ord;
    if (!it.failed() && ord != grades)
      it.fail({"order of the coset of G, expected", {static_cast<std::int64_t>(ord),
                                                     static_cast<std::int64_t>(grades)}});
    it.values["quotient_order"] = std::to_string(cosets);
    report.add_item(std::move(it));
  }

  {
    VerificationReport it;
    it.check = "4: f is the n-fold product in G*";
    const auto n = static_cast<std::size_t>(g.arity());
    std::vector<Element> xs(n, 0);
    auto check = [&]() {
      it.instances++;
      Element prod = c.embedding[xs[0]];
      for (std::size_t k = 1; k < n; ++k) prod = cov.mul(prod, c.embedding[xs[k]]);
      Element want = c.embedding[g.eval_unchecked(xs.data())];
      if (prod != want) {
        Witness w{"tuple", {}};
        for (Element x : xs) w.values.push_back(x);
        it.fail(std::move(w));
        return false;
      }
      return true;
    };
    if (checked_pow(s, static_cast<unsigned>(n), product_budget)) {
      it.status = CheckStatus::Pass;
      it.notes.push_back("exhaustive");
      bool more = true;
      while (more && check()) {
        more = false;
        for (std::size_t k = n; k-- > 0;) {
          if (++xs[k] < s) {
            more = true;
            break;
          }
          xs[k] = 0;
        }
      }
    } else {
      it.status = CheckStatus::ProbabilisticPass;
      it.seed = seed;
      it.notes.push_back("sampled");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(s - 1));
      for (std::uint64_t k = 0; k < product_budget; ++k) {
        for (auto& x : xs) x = pick(rng);
        if (!check()) break;
      }
    }
    report.add_item(std::move(it));
  }

  {
    VerificationReport it;
    it.check = "5: G generates G*";
    it.status = CheckStatus::Pass;
    auto span_g = subgroup_closure(cov, c.embedding);
    it.instances = span_g.size();
    if (span_g.size() != order)
      it.fail({"generated subgroup order, cover order",
               {static_cast<std::int64_t>(span_g.size()), static_cast<std::int64_t>(order)}});
    if (grades == 1) it.notes.push_back("n = 2: the embedded copy is the whole cover");
    report.add_item(std::move(it));
  }
  return report;
}

std::vector<Element> cover_subset_of_G(const PostCoverGroup& c, std::span<const Element> subset) {
  std::vector<Element> out;
  out.reserve(subset.size());
  for (Element a : subset) {
    if (a >= c.base_size()) throw Error(ErrorKind::InvalidArgument, "subset element out of range");
    out.push_back(c.embedding[a]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> induced_cover_map(const PostCoverGroup& from, const PostCoverGroup& to,
                                       std::span<const Element> base_map) {
  if (from.grades() != to.grades())
    throw Error(ErrorKind::InvalidArgument, "covers have different arity");
  if (base_map.size() != from.base_size())
    throw Error(ErrorKind::InvalidArgument, "base map has the wrong length");
  std::vector<Element> map(from.cover.size());
  for (Element u = 0; u < map.size(); ++u) {
    auto [x, i] = from.split(u);
    map[u] = to.pair_index(base_map[x], i);
  }
  return map;
}

}  // namespace polyadic
