#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "polyadic/finite_group.hpp"
#include "polyadic/nary_group.hpp"
#include "polyadic/presentation.hpp"

namespace polyadic {

// The Post cover G* of a derived n-ary group, realized on pairs (x, i) with
// x in the base and i in Z_{n-1}:
//
//   (x, i) o (y, j) = (x theta^i(y) b^q, r),  i + j = q (n-1) + r.
//
// The pair (x, i) has index i * s + x. G sits in G* as grade 1 (mod n-1)
// and K is grade 0. For n = 2 there is one grade and the cover is (G, f).
struct PostCoverGroup {
  std::shared_ptr<const HGPresentation> source;
  FiniteGroup cover;
  std::vector<Element> embedding;   // base element -> cover element
  std::vector<Element> kernel;      // elements of K, sorted
  std::vector<std::size_t> grading;  // cover element -> grade

  std::size_t base_size() const noexcept { return source->base.size(); }
  std::size_t grades() const noexcept { return static_cast<std::size_t>(source->arity - 1); }
  Element pair_index(Element x, std::size_t grade) const noexcept {
    return static_cast<Element>(grade * base_size() + x);
  }
  std::pair<Element, std::size_t> split(Element c) const noexcept {
    return {static_cast<Element>(c % base_size()), c / base_size()};
  }
};

// Throws InvalidPresentation when the presentation fails validation.
PostCoverGroup build_post_cover(std::shared_ptr<const HGPresentation> p);

// Items, in order: K is a normal subgroup isomorphic to the base; G is a
// single coset of K; G*/K is cyclic of order n-1; n-fold products of
// embedded elements reproduce f; G generates G*.
VerificationReport verify_cover_properties(const PostCoverGroup& c, const NaryGroup& g,
                                           std::uint64_t product_budget = 1'000'000,
                                           std::uint64_t seed = kDefaultSeed);

// Embedded copy { (a, 1 mod (n-1)) : a in subset }, sorted.
std::vector<Element> cover_subset_of_G(const PostCoverGroup& c, std::span<const Element> subset);

// (x, i) -> (phi(x), i) between two covers of equal arity.
std::vector<Element> induced_cover_map(const PostCoverGroup& from, const PostCoverGroup& to,
                                       std::span<const Element> base_map);

}  // namespace polyadic
