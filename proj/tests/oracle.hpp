#pragma once

// Brute-force reference computations. Nothing here calls into the library;
// everything is direct arithmetic or exhaustive search over small sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Op2 = std::function<unsigned(unsigned, unsigned)>;
using OpN = std::function<unsigned(const std::vector<unsigned>&)>;

inline std::vector<unsigned> binary_table(unsigned s, const Op2& op) {
  std::vector<unsigned> t(s * s);
  for (unsigned x = 0; x < s; ++x)
    for (unsigned y = 0; y < s; ++y) t[x * s + y] = op(x, y);
  return t;
}

// Row-major n-ary table, first argument most significant.
inline std::vector<unsigned> nary_table(unsigned s, unsigned n, const OpN& op) {
  std::uint64_t total = 1;
  for (unsigned k = 0; k < n; ++k) total *= s;
  std::vector<unsigned> t(total);
  std::vector<unsigned> xs(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (unsigned k = n; k-- > 0;) {
      xs[k] = static_cast<unsigned>(r % s);
      r /= s;
    }
    t[idx] = op(xs);
  }
  return t;
}

inline unsigned lookup(const std::vector<unsigned>& t, unsigned s, const std::vector<unsigned>& xs) {
  std::uint64_t idx = 0;
  for (unsigned x : xs) idx = idx * s + x;
  return t[idx];
}

// f(x1..xn) = sum t^(k-1) x_k + b mod m: the derived form over Z_m with
// theta = multiplication by t.
inline unsigned affine(unsigned m, unsigned t, unsigned b, const std::vector<unsigned>& xs) {
  std::uint64_t acc = b, c = 1;
  for (unsigned x : xs) {
    acc += c * x;
    c = c * t % m;
  }
  return static_cast<unsigned>(acc % m);
}

// Every tuple of length len over {0..s-1}, visited in lexicographic order.
template <class F>
void each_tuple(unsigned s, unsigned len, F&& visit) {
  std::vector<unsigned> xs(len, 0);
  while (true) {
    visit(xs);
    unsigned k = len;
    while (k > 0 && ++xs[k - 1] == s) xs[--k] = 0;
    if (k == 0) return;
  }
}

// Associativity at every pair of positions (i, j) over all 2n-1 tuples.
inline bool associative(const std::vector<unsigned>& t, unsigned s, unsigned n) {
  bool ok = true;
  each_tuple(s, 2 * n - 1, [&](const std::vector<unsigned>& xs) {
    if (!ok) return;
    std::optional<unsigned> first;
    for (unsigned i = 0; i < n && ok; ++i) {
      std::vector<unsigned> inner(xs.begin() + i, xs.begin() + i + n);
      std::vector<unsigned> outer(xs.begin(), xs.begin() + i);
      outer.push_back(lookup(t, s, inner));
      outer.insert(outer.end(), xs.begin() + i + n, xs.end());
      const unsigned v = lookup(t, s, outer);
      if (!first) first = v;
      else if (*first != v) ok = false;
    }
  });
  return ok;
}

// True when the given (2n-1)-tuple exhibits a bracket disagreement.
inline bool associativity_counterexample(const std::vector<unsigned>& t, unsigned s, unsigned n,
                                         const std::vector<unsigned>& xs) {
  std::optional<unsigned> first;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<unsigned> inner(xs.begin() + i, xs.begin() + i + n);
    std::vector<unsigned> outer(xs.begin(), xs.begin() + i);
    outer.push_back(lookup(t, s, inner));
    outer.insert(outer.end(), xs.begin() + i + n, xs.end());
    const unsigned v = lookup(t, s, outer);
    if (!first) first = v;
    else if (*first != v) return true;
  }
  return false;
}

// Every slot, every coefficient choice and target has exactly one solution.
inline bool uniquely_solvable(const std::vector<unsigned>& t, unsigned s, unsigned n) {
  bool ok = true;
  for (unsigned slot = 0; slot < n && ok; ++slot)
    each_tuple(s, n - 1, [&](const std::vector<unsigned>& cs) {
      if (!ok) return;
      std::vector<unsigned> hits(s, 0);
      for (unsigned x = 0; x < s; ++x) {
        std::vector<unsigned> xs(cs.begin(), cs.begin() + slot);
        xs.push_back(x);
        xs.insert(xs.end(), cs.begin() + slot, cs.end());
        ++hits[lookup(t, s, xs)];
      }
      ok = std::all_of(hits.begin(), hits.end(), [](unsigned h) { return h == 1; });
    });
  return ok;
}

inline bool is_group(const std::vector<unsigned>& t, unsigned s) {
  return associative(t, s, 2) && uniquely_solvable(t, s, 2);
}

inline bool is_homomorphism(const std::vector<unsigned>& a, unsigned sa, const std::vector<unsigned>& b,
                            unsigned sb, const std::vector<unsigned>& map) {
  for (unsigned x = 0; x < sa; ++x)
    for (unsigned y = 0; y < sa; ++y)
      if (map[a[x * sa + y]] != b[map[x] * sb + map[y]]) return false;
  return true;
}

// All bijections s -> s that preserve the table, in lexicographic order.
inline std::vector<std::vector<unsigned>> automorphisms(const std::vector<unsigned>& t, unsigned s) {
  std::vector<unsigned> p(s);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do {
    if (is_homomorphism(t, s, t, s, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool isomorphic(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned s) {
  std::vector<unsigned> p(s);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (is_homomorphism(a, s, b, s, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::optional<unsigned> identity(const std::vector<unsigned>& t, unsigned s) {
  for (unsigned e = 0; e < s; ++e) {
    bool ok = true;
    for (unsigned x = 0; x < s && ok; ++x) ok = t[e * s + x] == x && t[x * s + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

// Post cover over Z_m with theta = multiplication by t and element b:
// (x, i) o (y, j) = (x + t^i y + q b, r), i + j = q (n-1) + r. Pair (x, i)
// sits at index i * m + x. For n = 2 the product is f itself, x + t y + b.
inline std::vector<unsigned> affine_cover(unsigned m, unsigned n, unsigned t, unsigned b) {
  if (n == 2) return binary_table(m, [&](unsigned x, unsigned y) { return (x + t * y + b) % m; });
  const unsigned g = n - 1, size = m * g;
  std::vector<unsigned> tp(g, 1);
  for (unsigned i = 1; i < g; ++i) tp[i] = tp[i - 1] * t % m;
  std::vector<unsigned> table(size * size);
  for (unsigned u = 0; u < size; ++u)
    for (unsigned v = 0; v < size; ++v) {
      const unsigned x = u % m, i = u / m, y = v % m, j = v / m;
      const unsigned q = (i + j) / g, r = (i + j) % g;
      table[u * size + v] = r * m + (x + tp[i] * y + q * b) % m;
    }
  return table;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Exact fraction p/q reduced, as a pair.
inline std::pair<std::int64_t, std::int64_t> fraction(std::int64_t p, std::int64_t q) {
  const std::int64_t g = p == 0 ? q : gcd64(p, q);
  return {p / g, q / g};
}

}  // namespace oracle
