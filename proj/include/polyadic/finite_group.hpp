#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyadic/report.hpp"
#include "polyadic/types.hpp"

namespace polyadic {

// An ordinary finite group given by its Cayley table (row-major, size^2).
// Instances always satisfy the group axioms; construction validates them.
class FiniteGroup {
 public:
  // Throws Error(NotAGroup) carrying the first failing axiom.
  static FiniteGroup from_table(Carrier carrier, std::vector<Element> table);
  static FiniteGroup from_table(std::size_t size, std::vector<Element> table) {
    return from_table(Carrier(size), std::move(table));
  }

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<Element>& table() const noexcept { return table_; }

  Element mul(Element x, Element y) const noexcept { return table_[x * size() + y]; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  Element pow(Element x, long long k) const;
  std::size_t order(Element x) const;
  Element conjugate(Element by, Element x) const {  // by * x * by^-1
    return mul(mul(by, x), inverse(by));
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.size() == b.size() && a.table_ == b.table_;
  }

 private:
  FiniteGroup(Carrier carrier, std::vector<Element> table, Element identity,
              std::vector<Element> inverse)
      : carrier_(std::move(carrier)),
        table_(std::move(table)),
        identity_(identity),
        inverse_(std::move(inverse)) {}

  Carrier carrier_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
};

// Checks range, Latin square, identity, inverses and (exhaustive)
// associativity of a raw table. Fails with a witness on the first problem.
VerificationReport check_group_table(std::size_t size, std::span<const Element> table);

// Sorted elements of the subgroup generated by `gens`.
std::vector<Element> subgroup_closure(const FiniteGroup& g, std::span<const Element> gens);

// Irredundant generating set, built greedily from elements of largest order.
std::vector<Element> generating_set(const FiniteGroup& g);

// Returns the first (x, y) with map(xy) != map(x)map(y), if any.
std::optional<std::pair<Element, Element>> homomorphism_violation(
    const FiniteGroup& from, const FiniteGroup& to, std::span<const Element> map);

// Extends generator images to a homomorphism on all of `from`; nullopt when
// the assignment is inconsistent.
std::optional<std::vector<Element>> extend_generator_map(const FiniteGroup& from,
                                                         std::span<const Element> gens,
                                                         const FiniteGroup& to,
                                                         std::span<const Element> images);

// Backtracking over images of a generating set of `a`.
std::optional<std::vector<Element>> groups_isomorphic(const FiniteGroup& a,
                                                      const FiniteGroup& b);

// All automorphisms as image arrays, in lexicographic order.
std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g);

// Re-indexes a subgroup (given as sorted elements) as a group in its own right.
FiniteGroup induced_subgroup(const FiniteGroup& g, std::span<const Element> elements);

}  // namespace polyadic
