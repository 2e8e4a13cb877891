#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyadic/post_cover.hpp"

using namespace polyadic;
using namespace fixtures;

namespace {

std::vector<std::pair<unsigned, unsigned>> affine_choices(unsigned m, unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    unsigned tp = 1;
    for (unsigned k = 0; k + 1 < n; ++k) tp = tp * t % m;
    if (tp != 1 % m) continue;
    for (unsigned b = 0; b < m; ++b)
      if (t * b % m == b) out.emplace_back(t, b);
  }
  return out;
}

}  // namespace

TEST(PostCover, E1IsKleinFour) {
  auto c = build_post_cover(affine_presentation(2, 3, 1, 0));
  EXPECT_EQ(c.cover.size(), 4u);
  EXPECT_TRUE(groups_isomorphic(c.cover, zoo::klein()));
  // (x,i) o (y,j) = (x+y, i+j mod 2)
  for (Element u = 0; u < 4; ++u)
    for (Element v = 0; v < 4; ++v) {
      const unsigned x = u % 2, i = u / 2, y = v % 2, j = v / 2;
      EXPECT_EQ(c.cover.mul(u, v), ((i + j) % 2) * 2 + (x + y) % 2);
    }
  EXPECT_EQ(c.grading, (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(c.cover.carrier().name(3), "(1,1)");
}

TEST(PostCover, E2Example) {
  auto c = build_post_cover(affine_presentation(4, 3, 1, 2));
  EXPECT_EQ(c.cover.size(), 8u);
  const Element g01 = c.pair_index(0, 1);
  EXPECT_EQ(c.cover.mul(g01, g01), c.pair_index(2, 0));
  EXPECT_EQ(c.cover.mul(c.cover.mul(g01, g01), g01), c.pair_index(2, 1));
}

TEST(PostCover, TableMatchesDirectFormula) {
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n)
      for (auto [t, b] : affine_choices(m, n)) {
        auto c = build_post_cover(affine_presentation(m, n, t, b));
        EXPECT_EQ(plain(c.cover.table()), oracle::affine_cover(m, n, t, b)) << m << " " << n << " " << t << " " << b;
        EXPECT_TRUE(oracle::is_group(oracle::affine_cover(m, n, t, b), m * (n - 1)));
      }
}

TEST(PostCover, AllItemsPassOnAffinePresentations) {
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n)
      for (auto [t, b] : affine_choices(m, n)) {
        auto p = affine_presentation(m, n, t, b);
        auto r = verify_cover_properties(build_post_cover(p), derive(p));
        ASSERT_EQ(r.items.size(), 5u);
        EXPECT_EQ(r.status, CheckStatus::Pass) << m << " " << n << " " << t << " " << b;
      }
}

TEST(PostCover, E1ItemFourCountsTriples) {
  auto p = affine_presentation(2, 3, 1, 0);
  auto r = verify_cover_properties(build_post_cover(p), derive(p));
  EXPECT_EQ(r.items[3].instances, 8u);
  EXPECT_EQ(r.items[2].values.at("quotient_order"), "2");
}

TEST(PostCover, S3Presentations) {
  auto s3 = zoo::symmetric(3);
  for (int n = 2; n <= 5; ++n)
    for (Element by = 0; by < 6; ++by)
      for (Element b = 0; b < 6; ++b) {
        auto p = std::make_shared<const HGPresentation>(n, s3, zoo::inner_automorphism(s3, by), b);
        if (validate_presentation(*p).failed()) continue;
        auto c = build_post_cover(p);
        EXPECT_EQ(c.cover.size(), 6u * static_cast<std::size_t>(n - 1));
        auto r = verify_cover_properties(c, derive(p));
        EXPECT_EQ(r.status, CheckStatus::Pass) << n << " " << by << " " << b;
        EXPECT_EQ(r.items[2].values.at("quotient_order"), std::to_string(n - 1));
      }
}

TEST(PostCover, BinaryCoverIsTheGroupItself) {
  // n = 2 over S_3 with b a transposition and theta conjugation by b.
  auto s3 = zoo::symmetric(3);
  const Element t = zoo::perm_index({1, 0, 2});
  auto p = std::make_shared<const HGPresentation>(2, s3, zoo::inner_automorphism(s3, t), t);
  auto g = derive(p);
  auto c = build_post_cover(p);
  ASSERT_EQ(c.cover.size(), 6u);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      const std::vector<Element> xy{x, y};
      EXPECT_EQ(c.cover.mul(x, y), g.eval(xy));
    }
  EXPECT_EQ(verify_cover_properties(c, g).status, CheckStatus::Pass);
}

TEST(PostCover, WrongGroupFailsItemFour) {
  auto p = affine_presentation(4, 3, 1, 2);
  auto c = build_post_cover(p);
  auto r = verify_cover_properties(c, affine_group(4, 3, 1, 0));
  ASSERT_TRUE(r.failed());
  EXPECT_TRUE(r.items[3].failed());
  EXPECT_EQ(r.items[3].witnesses[0].label, "tuple");
  EXPECT_FALSE(r.items[0].failed());
}

TEST(PostCover, SampledItemFourRecordsSeed) {
  auto p = affine_presentation(8, 5, 7, 4);
  auto r = verify_cover_properties(build_post_cover(p), derive(p), 100, 5);
  EXPECT_EQ(r.items[3].status, CheckStatus::ProbabilisticPass);
  EXPECT_EQ(r.items[3].seed.value(), 5u);
  EXPECT_EQ(r.status, CheckStatus::ProbabilisticPass);
}

TEST(PostCover, InvalidPresentationThrows) {
  auto p = std::make_shared<const HGPresentation>(3, zoo::cyclic(4), zoo::multiply_map(4, 3), 1);
  try {
    build_post_cover(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPresentation);
  }
}

TEST(PostCover, CoverSubsetOfG) {
  auto c1 = build_post_cover(affine_presentation(2, 3, 1, 0));
  const std::vector<Element> one{1};
  EXPECT_EQ(cover_subset_of_G(c1, one), (std::vector<Element>{c1.pair_index(1, 1)}));
  auto c2 = build_post_cover(affine_presentation(4, 3, 1, 2));
  const std::vector<Element> all{0, 1, 2, 3};
  auto img = cover_subset_of_G(c2, all);
  ASSERT_EQ(img.size(), 4u);
  for (Element u : img) EXPECT_EQ(c2.grading[u], 1u);
}

TEST(PostCover, InducedMapIsHomomorphism) {
  auto from = build_post_cover(affine_presentation(8, 3, 1, 0));
  auto to = build_post_cover(affine_presentation(4, 3, 1, 0));
  auto map = induced_cover_map(from, to, zoo::reduction_map(8, 4));
  EXPECT_FALSE(homomorphism_violation(from.cover, to.cover, map));
  auto other = build_post_cover(affine_presentation(4, 4, 1, 0));
  EXPECT_THROW(induced_cover_map(from, other, zoo::reduction_map(8, 4)), Error);
}
