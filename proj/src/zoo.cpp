#include "polyadic/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polyadic::zoo {

FiniteGroup cyclic(std::size_t k) {
  std::vector<Element> t(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) t[x * k + y] = static_cast<Element>((x + y) % k);
  return FiniteGroup::from_table(k, std::move(t));
}

FiniteGroup klein() { return direct_product(cyclic(2), cyclic(2)); }

std::vector<std::vector<int>> permutations(std::size_t k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

Element perm_index(const std::vector<int>& perm) {
  // Lehmer code gives the lexicographic rank.
  const std::size_t k = perm.size();
  Element rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < k; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = static_cast<Element>(rank * (k - i) + smaller);
  }
  return rank;
}

FiniteGroup symmetric(std::size_t k) {
  auto perms = permutations(k);
  const std::size_t n = perms.size();
  std::vector<Element> t(n * n);
  std::vector<std::string> names;
  std::vector<int> r(k);
  for (std::size_t a = 0; a < n; ++a) {
    std::string name = "[";
    for (std::size_t i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(perms[a][i]);
    names.push_back(name + "]");
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) r[i] = perms[a][perms[b][i]];
      t[a * n + b] = perm_index(r);
    }
  }
  return FiniteGroup::from_table(Carrier(n, std::move(names)), std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element p = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      Element q = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * n + y] = static_cast<Element>(p * nb + q);
    }
  return FiniteGroup::from_table(n, std::move(t));
}

std::vector<Element> reduction_map(std::size_t m, std::size_t d) {
  if (d == 0 || m % d != 0) throw Error(ErrorKind::InvalidArgument, "reduction needs d | m");
  std::vector<Element> map(m);
  for (std::size_t x = 0; x < m; ++x) map[x] = static_cast<Element>(x % d);
  return map;
}

std::vector<Element> sign_map(std::size_t k) {
  auto perms = permutations(k);
  std::vector<Element> map;
  for (const auto& p : perms) {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inversions;
    map.push_back(static_cast<Element>(inversions % 2));
  }
  return map;
}

std::vector<Element> s4_to_s3_map() {
  // Pairings of {0,1,2,3} identified by the partner of 0.
  auto partner_of_zero = [](int a, int b, int c, int d) {
    // the pairing {a,b}|{c,d}; return index 0..2 = partner of 0 minus 1
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    if (c == 0) return d - 1;
    return c - 1;
  };
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<Element> map;
  for (const auto& p : permutations(4)) {
    std::vector<int> img(3);
    for (int s = 0; s < 3; ++s) {
      const int* q = pairings[s];
      img[s] = partner_of_zero(p[q[0]], p[q[1]], p[q[2]], p[q[3]]);
    }
    map.push_back(perm_index(img));
  }
  return map;
}

std::vector<Element> multiply_map(std::size_t k, std::size_t m) {
  std::vector<Element> map(k);
  for (std::size_t x = 0; x < k; ++x) map[x] = static_cast<Element>((m * x) % k);
  return map;
}

std::vector<Element> inner_automorphism(const FiniteGroup& g, Element by) {
  std::vector<Element> map(g.size());
  for (Element x = 0; x < g.size(); ++x) map[x] = g.conjugate(by, x);
  return map;
}

std::vector<Element> identity_map(std::size_t k) {
  std::vector<Element> map(k);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

}  // namespace polyadic::zoo
