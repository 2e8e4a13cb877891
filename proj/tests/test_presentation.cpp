#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace polyadic;
using namespace fixtures;

namespace {

// Every (t, b) over Z_m making x -> t x a valid presentation for arity n,
// decided by direct modular arithmetic.
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

std::vector<unsigned> table_of(const NaryGroup& g) { return plain(g.materialized().table()); }

const VerificationReport& item(const VerificationReport& r, const std::string& check) {
  for (const auto& it : r.items)
    if (it.check == check) return it;
  throw std::runtime_error("no item " + check);
}

}  // namespace

TEST(Presentation, DeriveExamples) {
  EXPECT_EQ(table_of(derive(affine_presentation(2, 3, 1, 0))), plain(e1().table()));
  EXPECT_EQ(table_of(derive(affine_presentation(4, 3, 1, 2))), plain(e2().table()));
  EXPECT_EQ(table_of(derive(affine_presentation(3, 3, 2, 0))), plain(e3().table()));
}

TEST(Presentation, DeriveMatchesAffineFormula) {
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n)
      for (auto [t, b] : affine_choices(m, n)) {
        auto ref = oracle::nary_table(m, n, [&](const std::vector<unsigned>& xs) { return oracle::affine(m, t, b, xs); });
        EXPECT_EQ(table_of(derive(affine_presentation(m, n, t, b))), ref) << m << " " << n << " " << t << " " << b;
      }
}

TEST(Presentation, ValidConditionsMatchArithmetic) {
  for (unsigned m = 2; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n) {
      const auto good = affine_choices(m, n);
      for (unsigned t = 0; t < m; ++t)
        for (unsigned b = 0; b < m; ++b) {
          HGPresentation p(static_cast<int>(n), zoo::cyclic(m), zoo::multiply_map(m, t), b);
          const bool expect = std::find(good.begin(), good.end(), std::pair{t, b}) != good.end();
          EXPECT_EQ(!validate_presentation(p).failed(), expect) << m << " " << n << " " << t << " " << b;
        }
    }
}

TEST(Presentation, ThetaMovingBIsRejected) {
  HGPresentation p(3, zoo::cyclic(4), zoo::multiply_map(4, 3), 1);
  auto r = validate_presentation(p);
  ASSERT_TRUE(r.failed());
  const auto& fixes = item(r, "theta-fixes-b");
  ASSERT_TRUE(fixes.failed());
  EXPECT_EQ(fixes.witnesses[0].label, "b,theta(b)");
  EXPECT_EQ(fixes.witnesses[0].values, (std::vector<std::int64_t>{1, 3}));
  EXPECT_FALSE(item(r, "theta-power-is-conjugation-by-b").failed());
  EXPECT_THROW(derive(p), Error);
}

TEST(Presentation, ThetaPowerNotConjugationIsRejected) {
  auto s3 = zoo::symmetric(3);
  const Element cycle = zoo::perm_index({1, 2, 0});
  HGPresentation p(3, s3, zoo::identity_map(6), cycle);
  auto r = validate_presentation(p);
  EXPECT_FALSE(item(r, "theta-fixes-b").failed());
  const auto& inner = item(r, "theta-power-is-conjugation-by-b");
  ASSERT_TRUE(inner.failed());
  const auto& w = inner.witnesses[0].values;
  ASSERT_EQ(w.size(), 3u);
  const auto x = static_cast<Element>(w[0]);
  EXPECT_EQ(w[1], x);  // theta = id
  EXPECT_EQ(static_cast<Element>(w[2]), s3.conjugate(cycle, x));
  EXPECT_NE(w[1], w[2]);
}

TEST(Presentation, NonAutomorphismIsRejected) {
  HGPresentation p(3, zoo::cyclic(4), {0, 1, 1, 3}, 0);
  auto r = validate_presentation(p);
  EXPECT_TRUE(item(r, "theta-automorphism").failed());
}

TEST(Presentation, ConstructorChecksShape) {
  EXPECT_THROW(HGPresentation(3, zoo::cyclic(4), {0, 1, 2}, 0), Error);
  EXPECT_THROW(HGPresentation(3, zoo::cyclic(4), {0, 1, 2, 3}, 4), Error);
  EXPECT_THROW(HGPresentation(1, zoo::cyclic(4), {0, 1, 2, 3}, 0), Error);
}

TEST(Presentation, RecoverExamples) {
  auto p1 = recover(e1(), 0);
  EXPECT_EQ(p1.theta, (std::vector<Element>{0, 1}));
  EXPECT_EQ(p1.b, 0u);

  auto p2 = recover(e2(), 0);
  EXPECT_EQ(p2.base.identity(), 2u);
  EXPECT_EQ(table_of(derive(p2)), plain(e2().table()));

  auto p3 = recover(e3(), 0);
  EXPECT_EQ(p3.theta, (std::vector<Element>{0, 2, 1}));
  EXPECT_EQ(p3.b, 0u);
  EXPECT_EQ(plain(p3.base.table()), oracle::binary_table(3, [](unsigned x, unsigned y) { return (x + y) % 3; }));
}

TEST(Presentation, RecoverRejectsNonPolyadic) {
  auto bad = oracle::nary_table(3, 3, [](const std::vector<unsigned>& xs) { return (xs[0] + xs[1] * xs[2]) % 3; });
  auto g = NaryGroup::from_table(3, Carrier(3), elems(bad));
  try {
    recover(g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPolyadic);
  }
}

TEST(Presentation, RecoverRespectsSizeCap) {
  auto g = affine_group(13, 2, 1, 0);
  try {
    recover(g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  EXPECT_NO_THROW(recover(g, 0, {.max_size = 13}));
}

// Property: derive then recover at every base point reproduces f pointwise.
TEST(PresentationProperty, AffineRoundTrip) {
  int cases = 0;
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 2; n <= 5; ++n)
      for (auto [t, b] : affine_choices(m, n)) {
        auto g = derive(affine_presentation(m, n, t, b)).materialized();
        const auto ref = plain(g.table());
        for (Element a = 0; a < m; ++a) {
          auto p = recover(g, a);
          EXPECT_FALSE(validate_presentation(p).failed());
          EXPECT_EQ(table_of(derive(p)), ref);
          EXPECT_EQ(p.base, retract(g, a));
        }
        ++cases;
      }
  EXPECT_GT(cases, 40);
}

TEST(PresentationProperty, S3RoundTrip) {
  auto s3 = zoo::symmetric(3);
  int cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (Element by = 0; by < 6; ++by) {
      auto theta = zoo::inner_automorphism(s3, by);
      for (Element b = 0; b < 6; ++b) {
        auto p = std::make_shared<const HGPresentation>(n, s3, theta, b);
        if (validate_presentation(*p).failed()) continue;
        auto g = derive(p).materialized();
        for (Element a = 0; a < 6; ++a) EXPECT_EQ(table_of(derive(recover(g, a))), plain(g.table()));
        ++cases;
      }
    }
  EXPECT_GT(cases, 5);
}

TEST(Presentation, ThetaPowersAreCached) {
  auto p = affine_presentation(8, 4, 3, 0);
  EXPECT_EQ(p->theta_power(0), zoo::identity_map(8));
  EXPECT_EQ(p->theta_power(1), zoo::multiply_map(8, 3));
  EXPECT_EQ(p->theta_power(2), zoo::multiply_map(8, 9));
  EXPECT_EQ(p->theta_power(3), zoo::multiply_map(8, 27));
}
