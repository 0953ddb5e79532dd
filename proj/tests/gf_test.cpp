#include <gtest/gtest.h>

#include <stdexcept>

#include "masseyx/gf.hpp"

namespace masseyx {
namespace {

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto [p, e] = GetParam();
  const Field f = make_field(p, e);
  const Elem q = f->q();
  for (Elem a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, 0), a);
    EXPECT_EQ(f->mul(a, 1), a);
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    EXPECT_EQ(f->sub(a, a), 0u);
    if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    EXPECT_EQ(f->pow(a, q), a);
    for (Elem b = 0; b < q; ++b) {
      EXPECT_EQ(f->add(a, b), f->add(b, a));
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->sub(f->add(a, b), b), a);
      if (a != 0 && b != 0) EXPECT_NE(f->mul(a, b), 0u);
      for (Elem c = 0; c < q; c += (q > 9 ? 3 : 1)) {
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u},
                                           std::pair{7u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{3u, 3u}));

TEST(Field, OrderAndHeader) {
  const Field f = make_field(3, 2);
  EXPECT_EQ(f->q(), 9u);
  EXPECT_EQ(f->header(), "field 3 2 2 2 1");
  EXPECT_EQ(make_field(7)->header(), "field 7 1");
}

TEST(Field, GF4MultiplicationTable) {
  // x^2 = x + 1: elements 0, 1, x = 2, x + 1 = 3.
  const Field f = make_field(2, 2);
  EXPECT_EQ(f->mul(2, 2), 3u);
  EXPECT_EQ(f->mul(2, 3), 1u);
  EXPECT_EQ(f->mul(3, 3), 2u);
  EXPECT_EQ(f->add(2, 3), 1u);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(make_field(4), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 2, std::vector<Elem>{1, 0, 1}), std::invalid_argument);  // (x + 1)^2
  EXPECT_THROW(make_field(2, 2, std::vector<Elem>{1, 1, 0}), std::invalid_argument);  // not monic
  EXPECT_THROW(make_field(2, 17), std::invalid_argument);                             // q > 2^16
  EXPECT_THROW(make_field(2, 2)->inv(0), std::domain_error);
}

TEST(Field, ExplicitModulusMatchesDefault) {
  const Field a = make_field(2, 3);
  const Field b = make_field(2, 3, std::vector<Elem>{1, 1, 0, 1});
  EXPECT_TRUE(same_field(a, b));
  EXPECT_FALSE(same_field(a, make_field(2, 3, std::vector<Elem>{1, 0, 1, 1})));
}

TEST(FieldElement, ArithmeticAndMixing) {
  const Field f = make_field(5);
  const FieldElement x(f, 3), y(f, 4);
  EXPECT_EQ((x + y).value(), 2u);
  EXPECT_EQ((x * y).value(), 2u);
  EXPECT_EQ((-x).value(), 2u);
  EXPECT_EQ((x - y).value(), 4u);
  EXPECT_EQ(inv(x).value(), 2u);
  EXPECT_EQ(mul(x, inv(x)), FieldElement(f, 1));
  EXPECT_THROW(FieldElement(f, 5), std::out_of_range);
  const FieldElement z(make_field(7), 3);
  EXPECT_THROW(x + z, std::invalid_argument);
  EXPECT_THROW(x * z, std::invalid_argument);
}

}  // namespace
}  // namespace masseyx
