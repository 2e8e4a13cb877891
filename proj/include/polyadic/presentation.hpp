#pragma once

#include <memory>
#include <vector>

#include "polyadic/finite_group.hpp"
#include "polyadic/nary_group.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

// Hosszu-Gloskin data: a group (G, .), a map theta on G and an element b,
// giving f(x_1..x_n) = x_1 theta(x_2) theta^2(x_3) ... theta^(n-1)(x_n) b.
// Construction only checks shapes; validate_presentation checks the rest.
struct HGPresentation {
  HGPresentation(int arity, FiniteGroup base, std::vector<Element> theta, Element b);

  int arity;
  FiniteGroup base;
  std::vector<Element> theta;
  Element b;

  // theta^k for k = 0..arity-1.
  const std::vector<Element>& theta_power(std::size_t k) const { return powers_.at(k); }
  Element evaluate(const Element* xs) const noexcept;

  friend bool operator==(const HGPresentation& x, const HGPresentation& y) {
    return x.arity == y.arity && x.base == y.base && x.theta == y.theta && x.b == y.b;
  }

 private:
  std::vector<std::vector<Element>> powers_;
};

// Automorphism (bijective and multiplicative), theta(b) = b, and
// theta^(n-1)(x) = b x b^-1 for all x; one item per condition.
VerificationReport validate_presentation(const HGPresentation& p);

// Presentation-backed n-ary group; throws InvalidPresentation.
NaryGroup derive(std::shared_ptr<const HGPresentation> p);
NaryGroup derive(const HGPresentation& p);

struct RecoverOptions {
  std::size_t max_size = 12;
  std::uint64_t budget = 1'000'000;  // pointwise comparison tuples
  std::uint64_t seed = kDefaultSeed;
};

// Searches Aut(retract(g, a)) x carrier for the lexicographically least
// (theta, b) whose derived operation equals f pointwise.
HGPresentation recover(const NaryGroup& g, Element a, const RecoverOptions& opts = {});

}  // namespace polyadic
