#include "polyadic/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace polyadic {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

std::string describe(const Witness& w) {
  std::string s = w.label + " (";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.values[i]);
  }
  return s + ")";
}

// Fills `map` on the subgroup generated by gens[0..k) via breadth-first
// right multiplication. Returns false on an inconsistent or non-injective
// assignment.
bool extend_partial(const FiniteGroup& from, std::span<const Element> gens,
                    const FiniteGroup& to, std::span<const Element> images,
                    std::vector<Element>& map, bool require_injective) {
  std::fill(map.begin(), map.end(), kUnset);
  std::vector<bool> used(to.size(), false);
  map[from.identity()] = to.identity();
  used[to.identity()] = true;
  std::deque<Element> queue{from.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = from.mul(x, gens[k]);
      Element img = to.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        if (require_injective && used[img]) return false;
        map[y] = img;
        used[img] = true;
        queue.push_back(y);
      } else if (map[y] != img) {
        return false;
      }
    }
  }
  return true;
}

void search_images(const FiniteGroup& a, const std::vector<Element>& gens,
                   const FiniteGroup& b, std::vector<Element>& images,
                   std::vector<Element>& scratch, bool stop_at_first,
                   std::vector<std::vector<Element>>& out) {
  std::size_t k = images.size();
  if (k == gens.size()) {
    if (!extend_partial(a, gens, b, images, scratch, true)) return;
    if (std::find(scratch.begin(), scratch.end(), kUnset) != scratch.end()) return;
    out.push_back(scratch);
    return;
  }
  std::size_t want = a.order(gens[k]);
  for (Element y = 0; y < b.size(); ++y) {
    if (b.order(y) != want) continue;
    images.push_back(y);
    std::span<const Element> g(gens.data(), k + 1);
    if (extend_partial(a, g, b, images, scratch, true))
      search_images(a, gens, b, images, scratch, stop_at_first, out);
    images.pop_back();
    if (stop_at_first && !out.empty()) return;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(Carrier carrier, std::vector<Element> table) {
  const std::size_t n = carrier.size();
  auto report = check_group_table(n, table);
  if (report.failed())
    throw Error(ErrorKind::NotAGroup, "table is not a group: " +
                                          (report.witnesses.empty()
                                               ? std::string("unknown")
                                               : describe(report.witnesses.front())));
  Element e = 0;
  for (Element c = 0; c < n; ++c) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = table[c * n + x] == x && table[x * n + c] == x;
    if (ok) {
      e = c;
      break;
    }
  }
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (table[x * n + y] == e) inv[x] = y;
  return FiniteGroup(std::move(carrier), std::move(table), e, std::move(inv));
}

Element FiniteGroup::pow(Element x, long long k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  Element r = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

VerificationReport check_group_table(std::size_t n, std::span<const Element> t) {
  VerificationReport r;
  r.check = "group-axioms";
  r.status = CheckStatus::Pass;
  if (n == 0 || t.size() != n * n) {
    r.fail({"table-size", {static_cast<std::int64_t>(t.size())}});
    return r;
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n) {
      r.fail({"out-of-range entry (x,y,value)",
              {static_cast<std::int64_t>(i / n), static_cast<std::int64_t>(i % n), t[i]}});
      return r;
    }
  // Latin square: every row and column is a permutation.
  std::vector<int> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t y = 0; y < n; ++y) {
      Element v = t[x * n + y];
      if (seen[v] >= 0) {
        r.fail({"latin-row repeat (row,col1,col2)",
                {static_cast<std::int64_t>(x), seen[v], static_cast<std::int64_t>(y)}});
        return r;
      }
      seen[v] = static_cast<int>(y);
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t x = 0; x < n; ++x) {
      Element v = t[x * n + y];
      if (seen[v] >= 0) {
        r.fail({"latin-column repeat (col,row1,row2)",
                {static_cast<std::int64_t>(y), seen[v], static_cast<std::int64_t>(x)}});
        return r;
      }
      seen[v] = static_cast<int>(x);
    }
  }
  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t[c * n + x] == x && t[x * n + c] == x;
    if (ok) e = c;
  }
  if (!e) {
    r.fail({"no identity", {}});
    return r;
  }
  // With a two-sided identity in a Latin square, right and left inverses
  // exist; they coincide once associativity holds.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        r.instances++;
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
          r.fail({"associativity (x,y,z)",
                  {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
                   static_cast<std::int64_t>(z)}});
          return r;
        }
      }
  return r;
}

std::vector<Element> subgroup_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.size(), false);
  std::deque<Element> queue{g.identity()};
  in[g.identity()] = true;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < g.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> by_order(g.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
    return g.order(a) > g.order(b);
  });
  std::vector<Element> gens;
  std::vector<Element> span_now{g.identity()};
  for (Element x : by_order) {
    if (span_now.size() == g.size()) break;
    if (std::binary_search(span_now.begin(), span_now.end(), x)) continue;
    gens.push_back(x);
    span_now = subgroup_closure(g, gens);
  }
  // Drop redundant generators (greedy choice can leave some).
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Element> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (subgroup_closure(g, rest).size() == g.size()) gens = std::move(rest);
  }
  return gens;
}

std::optional<std::pair<Element, Element>> homomorphism_violation(
    const FiniteGroup& from, const FiniteGroup& to, std::span<const Element> map) {
  for (Element x = 0; x < from.size(); ++x)
    for (Element y = 0; y < from.size(); ++y)
      if (map[from.mul(x, y)] != to.mul(map[x], map[y])) return std::pair{x, y};
  return std::nullopt;
}

std::optional<std::vector<Element>> extend_generator_map(const FiniteGroup& from,
                                                         std::span<const Element> gens,
                                                         const FiniteGroup& to,
                                                         std::span<const Element> images) {
  if (gens.size() != images.size())
    throw Error(ErrorKind::InvalidArgument, "generator and image counts differ");
  std::vector<Element> map(from.size());
  if (!extend_partial(from, gens, to, images, map, false)) return std::nullopt;
  if (std::find(map.begin(), map.end(), kUnset) != map.end()) return std::nullopt;
  return map;
}

std::optional<std::vector<Element>> groups_isomorphic(const FiniteGroup& a,
                                                      const FiniteGroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> oa(a.size() + 1, 0), ob(b.size() + 1, 0);
  for (Element x = 0; x < a.size(); ++x) oa[a.order(x)]++;
  for (Element x = 0; x < b.size(); ++x) ob[b.order(x)]++;
  if (oa != ob) return std::nullopt;
  auto gens = generating_set(a);
  std::vector<Element> images, scratch(a.size());
  std::vector<std::vector<Element>> found;
  search_images(a, gens, b, images, scratch, true, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<Element> images, scratch(g.size());
  std::vector<std::vector<Element>> found;
  search_images(g, gens, g, images, scratch, false, found);
  std::sort(found.begin(), found.end());
  return found;
}

FiniteGroup induced_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  std::vector<Element> index(g.size(), kUnset);
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<Element>(i);
  const std::size_t m = elements.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element v = index[g.mul(elements[i], elements[j])];
      if (v == kUnset) throw Error(ErrorKind::InvalidArgument, "elements are not closed under the operation");
      table[i * m + j] = v;
    }
  return FiniteGroup::from_table(m, std::move(table));
}

}  // namespace polyadic
