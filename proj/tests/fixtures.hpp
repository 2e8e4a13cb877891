#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "polyadic/io.hpp"
#include "polyadic/nary_group.hpp"
#include "polyadic/presentation.hpp"
#include "polyadic/profinite.hpp"
#include "polyadic/zoo.hpp"

namespace fixtures {

using namespace polyadic;

inline std::vector<Element> elems(const std::vector<unsigned>& v) { return {v.begin(), v.end()}; }
inline std::vector<unsigned> plain(const std::vector<Element>& v) { return {v.begin(), v.end()}; }

// Table-backed affine n-ary group over Z_m: f = sum t^(k-1) x_k + b.
inline NaryGroup affine_group(unsigned m, unsigned n, unsigned t, unsigned b) {
  auto table = oracle::nary_table(m, n, [&](const std::vector<unsigned>& xs) { return oracle::affine(m, t, b, xs); });
  return NaryGroup::from_table(static_cast<int>(n), Carrier(m), elems(table));
}

inline NaryGroup e1() { return affine_group(2, 3, 1, 0); }
inline NaryGroup e2() { return affine_group(4, 3, 1, 2); }
inline NaryGroup e3() { return affine_group(3, 3, 2, 0); }

inline std::shared_ptr<const HGPresentation> affine_presentation(unsigned m, unsigned n, unsigned t, unsigned b) {
  return std::make_shared<const HGPresentation>(static_cast<int>(n), zoo::cyclic(m), zoo::multiply_map(m, t), b);
}

// Z_{m_0} <- Z_{m_1} <- ... by reduction, each level affine with the same
// multiplier t and per-level b.
inline InverseSystem cyclic_tower(unsigned n, const std::vector<unsigned>& moduli, unsigned t,
                                  const std::vector<unsigned>& bs) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<NaryGroup> levels;
  std::map<TransitionKey, std::vector<Element>> maps;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    ids.push_back("Z" + std::to_string(moduli[k]));
    levels.push_back(derive(affine_presentation(moduli[k], n, t % moduli[k], bs[k])));
    if (k > 0) {
      order.emplace_back(ids[k], ids[k - 1]);
      maps[{k, k - 1}] = zoo::reduction_map(moduli[k], moduli[k - 1]);
    }
  }
  auto index = DirectedIndex::make(ids, order, ids.back());
  return InverseSystem(std::move(index), std::move(levels), std::move(maps));
}

inline InverseSystem s1() { return cyclic_tower(3, {2, 4, 8}, 1, {0, 0, 0}); }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus(const std::string& rel) { return std::string(POLYADIC_CORPUS) + "/" + rel; }

inline io::Json corpus_json(const std::string& rel) { return io::parse_text(slurp(corpus(rel))); }

}  // namespace fixtures
