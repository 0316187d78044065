#include <gtest/gtest.h>

#include "difflab/category_kernel.hpp"

using namespace difflab;

namespace {

Arrow arrow(const FiniteCategory& c, const std::string& name) { return *c.find_arrow(name); }

const std::vector<std::string> kSmall{"1", "2", "II", "3"};

}  // namespace

TEST(FiniteCategory, FromMatrixMagmas) {
  const auto three = library_category("3");
  EXPECT_EQ(three.object_count(), 3u);
  EXPECT_EQ(three.arrow_count(), 6u);
  EXPECT_EQ(three.object_name(0), "I1");
  EXPECT_EQ(three.compose(arrow(three, "A32"), arrow(three, "A21")), arrow(three, "A31"));
  EXPECT_FALSE(three.compose(arrow(three, "A21"), arrow(three, "A32")).has_value());
  const auto one = library_category("1");
  EXPECT_EQ(one.object_count(), 1u);
  EXPECT_EQ(one.arrow_count(), 1u);
  EXPECT_THROW(cat_from_rpm(truncated_subtraction(3)), std::invalid_argument);
}

TEST(FiniteCategory, RejectsBrokenData) {
  // One object, two arrows, composition not associative-compatible with identity.
  EXPECT_THROW(FiniteCategory(1, {0, 0}, {0, 0}, {0}, {0, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(FiniteCategory(1, {0}, {0}, {1}, {0}), std::invalid_argument);
  EXPECT_THROW(FiniteCategory(2, {0, 1}, {0, 1}, {0, 1}, {0, 1, -1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(FiniteCategory(2, {0, 1}, {0, 1}, {0, 1}, {0, -1, -1, 1}));
}

TEST(FiniteCategory, RoundTripsOnLibrary) {
  for (const auto& [name, pm] : example_library()) {
    if (!is_regular(pm)) continue;
    const auto c = cat_from_rpm(pm);
    EXPECT_EQ(rpm_from_cat(c), pm) << name;
    EXPECT_EQ(cat_from_rpm(rpm_from_cat(c)), c) << name;
  }
}

TEST(FiniteCategory, RoundTripsOnRegularTablesUpToTwo) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for_each_pm(n, [](const PartialMagma& pm) {
      if (!is_regular(pm)) return;
      const auto c = cat_from_rpm(pm);
      EXPECT_EQ(rpm_from_cat(c), pm);
      EXPECT_EQ(cat_from_rpm(rpm_from_cat(c)), c);
    });
  }
}

TEST(HomSets, LibraryExamples) {
  const auto two = library_category("2");
  EXPECT_EQ(hom_set(two, 0, 1), std::vector<Arrow>{arrow(two, "A21")});
  EXPECT_TRUE(hom_set(two, 1, 0).empty());
  const auto three = library_category("3");
  EXPECT_EQ(hom_set(three, 0, 2), std::vector<Arrow>{arrow(three, "A31")});
  const auto ii = library_category("II");
  EXPECT_TRUE(hom_set(ii, 0, 1).empty());
  EXPECT_TRUE(hom_set(ii, 1, 0).empty());
  for (const auto& name : kSmall) {
    const auto c = library_category(name);
    std::size_t total = 0;
    for (Object u = 0; u < c.object_count(); ++u) {
      const auto own = hom_set(c, u, u);
      EXPECT_NE(std::find(own.begin(), own.end(), c.identity(u)), own.end());
      for (Object v = 0; v < c.object_count(); ++v) total += hom_set(c, u, v).size();
    }
    EXPECT_EQ(total, c.arrow_count());
  }
}

TEST(Library, SquareCategory) {
  const auto sq = library_category("SQ");
  EXPECT_EQ(sq.object_count(), 4u);
  std::size_t non_identity = 0;
  for (Arrow a = 0; a < sq.arrow_count(); ++a) non_identity += !sq.is_identity(a);
  EXPECT_EQ(non_identity, 5u);
  const auto a31 = arrow(sq, "A31");
  EXPECT_EQ(sq.compose(arrow(sq, "A32"), arrow(sq, "A21")), a31);
  EXPECT_EQ(sq.compose(arrow(sq, "A34"), arrow(sq, "A41")), a31);
}

TEST(Library, OneIsTerminal) {
  const auto one = library_category("1");
  for (const auto& name : {"1", "2", "II", "3", "SQ"}) {
    EXPECT_EQ(enumerate_functors(library_category(name), one).size(), 1u) << name;
  }
}

TEST(TwinArrows, Cases) {
  const auto three = library_category("3");
  const auto i1 = arrow(three, "I1");
  EXPECT_EQ(twin_hom_cases(three, i1, i1), (std::vector<TwinArrow>{{i1, i1, i1, i1}}));
  const auto a32 = arrow(three, "A32");
  EXPECT_EQ(twin_hom_cases(three, i1, a32), (std::vector<TwinArrow>{{i1, a32, arrow(three, "A21"), arrow(three, "A31")}}));
  EXPECT_TRUE(twin_hom_cases(three, a32, i1).empty());
  const auto ii = library_category("II");
  EXPECT_TRUE(twin_hom_cases(ii, arrow(ii, "I1"), arrow(ii, "I2")).empty());
  for (Arrow x = 0; x < three.arrow_count(); ++x) {
    for (Arrow y = 0; y < three.arrow_count(); ++y) {
      for (const auto& z : twin_hom_cases(three, x, y)) EXPECT_TRUE(is_twin_arrow(three, z));
    }
  }
}

TEST(TwinCategory, SmallCases) {
  const auto t1 = twin_category(library_category("1"));
  EXPECT_EQ(t1.cat.object_count(), 1u);
  EXPECT_EQ(t1.cat.arrow_count(), 1u);
  const auto t2 = twin_category(library_category("2"));
  EXPECT_EQ(t2.cat.object_count(), 3u);
  for (const auto& name : kSmall) EXPECT_TRUE(is_regular(rpm_from_cat(twin_category(library_category(name)).cat)));
}

TEST(TwinCategory, RecapturesHomSets) {
  const auto c = library_category("3");
  for (Object u = 0; u < c.object_count(); ++u) {
    for (Object v = 0; v < c.object_count(); ++v) {
      std::vector<TwinArrow> expected;
      for (Arrow x : hom_set(c, u, v)) expected.push_back({c.identity(u), c.identity(v), x, x});
      EXPECT_EQ(twin_hom_cases(c, c.identity(u), c.identity(v)), expected);
    }
    for (Arrow y = 0; y < c.arrow_count(); ++y) {
      EXPECT_EQ(twin_homs_from_object(c, u, y), twin_hom_cases(c, c.identity(u), y));
      EXPECT_EQ(twin_homs_to_object(c, y, u), twin_hom_cases(c, y, c.identity(u)));
    }
  }
}

TEST(Functors, LawsHoldForEveryEnumeratedFunctor) {
  for (const auto& a : kSmall) {
    for (const auto& b : kSmall) {
      const auto c = library_category(a), d = library_category(b);
      for (const auto& f : enumerate_functors(c, d)) {
        EXPECT_TRUE(is_functor(c, d, f).holds);
        EXPECT_TRUE(preserves_dom_cod(c, d, f));
        for (Arrow x = 0; x < c.arrow_count(); ++x) {
          for (Arrow y = 0; y < c.arrow_count(); ++y) {
            if (const auto xy = c.compose(x, y)) {
              EXPECT_EQ(d.compose(f.map[x], f.map[y]), f.map[*xy]);
            }
          }
        }
      }
    }
  }
  const auto c = library_category("3");
  EXPECT_TRUE(is_functor(c, c, identity_functor(c)).holds);
}

TEST(NaturalTransformations, FactorizationExample) {
  const auto c = library_category("2"), d = library_category("3");
  const Functor t{{arrow(d, "I1"), arrow(d, "I3"), arrow(d, "A31")}};
  const Functor s{{arrow(d, "I2"), arrow(d, "I3"), arrow(d, "A32")}};
  ASSERT_TRUE(is_functor(c, d, t).holds);
  ASSERT_TRUE(is_functor(c, d, s).holds);
  const auto homs = enumerate_nat_homs(c, d, t, s);
  const auto trans = enumerate_nat_trans(c, d, t, s);
  ASSERT_EQ(homs.size(), 1u);
  ASSERT_EQ(trans.size(), 1u);
  const auto tau = nat_from_hom(c, d, t, s, homs[0]);
  EXPECT_EQ(tau, trans[0]);
  EXPECT_EQ(tau.components[0], arrow(d, "A21"));
  EXPECT_EQ(tau.components[1], arrow(d, "I3"));
}

TEST(NaturalTransformations, IdentityComponents) {
  for (const auto& name : kSmall) {
    const auto c = library_category(name);
    const auto id = identity_functor(c);
    const auto alpha = identity_nat(c, c, id);
    EXPECT_TRUE(is_nat_hom(c, c, id, id, alpha).holds);
    const auto tau = nat_from_hom(c, c, id, id, alpha);
    for (Object u = 0; u < c.object_count(); ++u) EXPECT_EQ(tau.components[u], c.identity(u));
    EXPECT_EQ(hom_from_nat(c, c, id, id, tau), alpha);
    for (Arrow x = 0; x < c.arrow_count(); ++x) {
      EXPECT_EQ(alpha.components[x], (Twin{c.identity(c.dom(x)), c.identity(c.cod(x))}));
    }
  }
}

TEST(NaturalTransformations, ConvertersAreInverseBijections) {
  for (const auto& a : {"1", "2", "3"}) {
    for (const auto& b : {"1", "2", "3"}) {
      const auto c = library_category(a), d = library_category(b);
      const auto functors = enumerate_functors(c, d);
      for (const auto& t : functors) {
        for (const auto& s : functors) {
          const auto homs = enumerate_nat_homs(c, d, t, s);
          const auto trans = enumerate_nat_trans(c, d, t, s);
          EXPECT_EQ(homs.size(), trans.size());
          for (const auto& alpha : homs) {
            const auto tau = nat_from_hom(c, d, t, s, alpha);
            EXPECT_TRUE(is_natural(c, d, t, s, tau).holds);
            EXPECT_EQ(hom_from_nat(c, d, t, s, tau), alpha);
          }
          for (const auto& tau : trans) {
            const auto alpha = hom_from_nat(c, d, t, s, tau);
            EXPECT_TRUE(is_nat_hom(c, d, t, s, alpha).holds);
            EXPECT_EQ(nat_from_hom(c, d, t, s, alpha), tau);
          }
        }
      }
    }
  }
}

TEST(NaturalTransformations, InvalidInputsAreRejected) {
  const auto c = library_category("2"), d = library_category("3");
  const auto functors = enumerate_functors(c, d);
  const auto& t = functors.front();
  NatHom bad = identity_nat(c, d, t);
  bad.components[0] = Twin{arrow(d, "A32"), arrow(d, "A32")};
  EXPECT_FALSE(is_nat_hom(c, d, t, t, bad).holds);
  EXPECT_THROW(nat_from_hom(c, d, t, t, bad), std::invalid_argument);
  NatTrans wrong{std::vector<Arrow>(c.object_count(), arrow(d, "A21"))};
  EXPECT_FALSE(is_natural(c, d, t, t, wrong).holds);
  EXPECT_THROW(hom_from_nat(c, d, t, t, wrong), std::invalid_argument);
}

TEST(NaturalTransformations, VerticalCompositionIsAssociativeAndUnital) {
  const auto c = library_category("2"), d = library_category("3");
  const auto functors = enumerate_functors(c, d);
  const auto k = functors.size();
  std::vector<std::vector<std::vector<NatHom>>> homs(k, std::vector<std::vector<NatHom>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) homs[i][j] = enumerate_nat_homs(c, d, functors[i], functors[j]);
  }
  std::size_t triples = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto id_i = identity_nat(c, d, functors[i]);
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& alpha : homs[i][j]) {
        EXPECT_EQ(compose_nat(d, alpha, id_i), alpha);
        EXPECT_EQ(compose_nat(d, identity_nat(c, d, functors[j]), alpha), alpha);
        for (std::size_t l = 0; l < k; ++l) {
          for (const auto& beta : homs[j][l]) {
            const auto ba = compose_nat(d, beta, alpha);
            EXPECT_TRUE(is_nat_hom(c, d, functors[i], functors[l], ba).holds);
            for (std::size_t m = 0; m < k; ++m) {
              for (const auto& gamma : homs[l][m]) {
                EXPECT_EQ(compose_nat(d, gamma, ba), compose_nat(d, compose_nat(d, gamma, beta), alpha));
                ++triples;
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(triples, 0u);
}

TEST(FunctorCategories, SmallIndexCategories) {
  const auto one = library_category("1"), two = library_category("2");
  for (const auto& name : {"2", "3", "II"}) {
    const auto c = library_category(name);
    EXPECT_TRUE(functors_from_one_iso(one, c)) << name;
    EXPECT_TRUE(functors_from_two_iso(two, c)) << name;
    EXPECT_TRUE(is_regular(rpm_from_cat(functor_category(two, c).cat)));
  }
}
