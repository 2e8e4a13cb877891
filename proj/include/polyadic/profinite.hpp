#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyadic/nary_group.hpp"
#include "polyadic/post_cover.hpp"

namespace polyadic {

// A finite directed poset with a top element. `leq(j, i)` reads j <= i.
class DirectedIndex {
 public:
  // `relations` holds pairs (i, j) meaning j <= i; the reflexive-transitive
  // closure is taken. Throws Schema for unknown ids, a cycle, or a top that
  // does not dominate every index.
  static DirectedIndex make(std::vector<std::string> ids,
                            const std::vector<std::pair<std::string, std::string>>& relations,
                            const std::string& top);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::size_t find(const std::string& id) const;
  std::size_t top() const noexcept { return top_; }
  bool leq(std::size_t j, std::size_t i) const { return le_[j][i]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  // Designated upper bound: the first minimal common upper bound in id order.
  std::size_t upper_bound(std::size_t a, std::size_t b) const;

  // The relation pairs (i, j), j < i, as given (not closed).
  const std::vector<std::pair<std::size_t, std::size_t>>& generating_pairs() const noexcept {
    return generators_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::pair<std::size_t, std::size_t>> generators_;
  std::size_t top_ = 0;
};

// Key (i, j) with j <= i: transition phi_ij : G_i -> G_j.
using TransitionKey = std::pair<std::size_t, std::size_t>;

// Finite truncation of an inverse system of finite n-ary groups.
class InverseSystem {
 public:
  // `maps` must contain every generating pair of the index; maps for the
  // remaining comparable pairs are composed along the order. Levels
  // without a presentation get one from recover() at base point 0.
  InverseSystem(DirectedIndex index, std::vector<NaryGroup> levels,
                std::map<TransitionKey, std::vector<Element>> maps);

  const DirectedIndex& index() const noexcept { return index_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  const NaryGroup& level(std::size_t i) const { return levels_.at(i); }
  NaryGroup& level(std::size_t i) { return levels_.at(i); }
  int arity() const noexcept { return levels_.front().arity(); }

  // phi_ij for j <= i (identity when i == j).
  const std::vector<Element>& map(std::size_t i, std::size_t j) const;
  bool map_is_given(std::size_t i, std::size_t j) const { return given_.count({i, j}) > 0; }
  const std::map<TransitionKey, std::vector<Element>>& maps() const noexcept { return maps_; }

 private:
  DirectedIndex index_;
  std::vector<NaryGroup> levels_;
  std::map<TransitionKey, std::vector<Element>> maps_;
  std::set<TransitionKey> given_;
  std::vector<std::vector<Element>> identities_;
};

// Verifies every level as an n-ary group, every transition as a surjective
// polyadic homomorphism with equal fibers, and the cocycle condition
// phi_jk phi_ij = phi_ik. Raises level verification status.
VerificationReport validate_system(InverseSystem& s, const CheckOptions& opts = {});

// One element per level, compatible with every transition.
struct Thread {
  std::vector<Element> at;
  friend bool operator==(const Thread&, const Thread&) = default;
};

// Projections of a top-level element.
Thread thread_from_top(const InverseSystem& s, Element top_element);
// Throws InvalidArgument naming the first incompatible pair.
void check_thread(const InverseSystem& s, const Thread& t);

// Ordinary groups over the same index, with transition maps.
struct GroupSystem {
  std::vector<FiniteGroup> levels;
  std::map<TransitionKey, std::vector<Element>> maps;
  VerificationReport report;
  bool ok() const noexcept { return !report.failed(); }
};

// Level i carries retract(G_i, a_i); transitions are re-verified as group
// homomorphisms and failures are reported, not assumed away.
GroupSystem induced_retract_system(const InverseSystem& s, const Thread& a);

struct CoverSystem {
  GroupSystem groups;
  std::vector<PostCoverGroup> covers;
  bool ok() const noexcept { return groups.ok(); }
};

// Requires phi theta_i = theta_j phi, phi(b_i) = b_j and phi a base
// homomorphism for every comparable pair; transitions act as phi x id on
// grades.
CoverSystem induced_cover_system(const InverseSystem& s);

struct LevelCoefficients {
  std::vector<Element> prefix;
  std::vector<Element> suffix;
};

// Per level, the projected coefficients for an f-translation in `slot`
// (1-based). Expects n-1 coefficient threads.
std::vector<LevelCoefficients> thread_translate_data(const InverseSystem& s, std::size_t slot,
                                                     const std::vector<Thread>& coefficients);

}  // namespace polyadic
