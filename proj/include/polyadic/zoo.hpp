#pragma once

// Small named groups and maps between them, used to build test corpora.

#include <vector>

#include "polyadic/finite_group.hpp"

namespace polyadic::zoo {

// Z_k with x.y = x + y mod k.
FiniteGroup cyclic(std::size_t k);

// Z_2 x Z_2.
FiniteGroup klein();

// S_k on permutations in lexicographic one-line order; element 0 is the
// identity and (p.q)(i) = p(q(i)).
FiniteGroup symmetric(std::size_t k);
std::vector<std::vector<int>> permutations(std::size_t k);
Element perm_index(const std::vector<int>& perm);

// Pairs (a, b) indexed as a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Reduction Z_m -> Z_d (d divides m).
std::vector<Element> reduction_map(std::size_t m, std::size_t d);

// Sign homomorphism S_k -> Z_2.
std::vector<Element> sign_map(std::size_t k);

// S_4 -> S_3 through the action on the three pairings of {0,1,2,3}.
std::vector<Element> s4_to_s3_map();

// Image array of x -> m*x on Z_k.
std::vector<Element> multiply_map(std::size_t k, std::size_t m);

// Image array of conjugation by `by`.
std::vector<Element> inner_automorphism(const FiniteGroup& g, Element by);

std::vector<Element> identity_map(std::size_t k);

}  // namespace polyadic::zoo
