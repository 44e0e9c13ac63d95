#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "satake/error.hpp"
#include "satake/weyl.hpp"
#include "support.hpp"

using namespace satake;

TEST_CASE("simple reflections are involutions satisfying the braid relations") {
  for (const auto& a : testing::finite_catalogue(6)) {
    int n = a->size();
    IMat id = IMat::identity(n);
    for (int i = 0; i < n; ++i) {
      IMat si = reflection_matrix(*a, i);
      CHECK(si * si == id);
      for (int j = i + 1; j < n; ++j) {
        Int p = (*a)(i, j) * (*a)(j, i);
        int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
        CHECK(element_order(si * reflection_matrix(*a, j), 12) == m);
      }
    }
  }
}

TEST_CASE("longest elements") {
  for (const auto& a : testing::finite_catalogue(7)) {
    INFO(a->catalogue_name());
    NodeSet all = all_nodes(*a);
    WeylElement w0 = longest_element(*a, all);
    auto pos = positive_roots_finite(*a, all);
    CHECK(length(*a, w0) == static_cast<int>(pos.size()));
    CHECK(w0.matrix * w0.matrix == IMat::identity(a->size()));
    Perm oi = opposition_involution(*a, all);
    for (int i = 0; i < a->size(); ++i) {
      IVec img = satake::apply(w0, unit(a->size(), i));
      CHECK(img == neg(unit(a->size(), oi[i])));
    }
  }
  auto a4 = cartan_from_name("A4");
  CHECK(opposition_involution(a4, all_nodes(a4)) == Perm{3, 2, 1, 0});
  auto d5 = cartan_from_name("D5");
  CHECK(opposition_involution(d5, all_nodes(d5)) == Perm{0, 1, 2, 4, 3});
  auto d4 = cartan_from_name("D4");
  CHECK(opposition_involution(d4, all_nodes(d4)) == identity_perm(4));
  auto e6 = cartan_from_name("E6");
  CHECK(opposition_involution(e6, all_nodes(e6)) != identity_perm(6));
}

TEST_CASE("positive root counts") {
  auto count = [](const char* nm) {
    auto a = cartan_from_name(nm);
    return positive_roots_finite(a, all_nodes(a)).size();
  };
  CHECK(count("A4") == 10);
  CHECK(count("B3") == 9);
  CHECK(count("C4") == 16);
  CHECK(count("D5") == 20);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
}

TEST_CASE("Weyl group orders match the degree formula") {
  for (const auto& a : testing::finite_catalogue(5)) {
    INFO(a->catalogue_name());
    auto w = enumerate_weyl_group(*a, 100000);
    CHECK(w.size() == weyl_order_formula(classify_type(*a, all_nodes(*a))));
  }
  auto e6 = cartan_from_name("E6");
  CHECK(weyl_order_formula(classify_type(e6, all_nodes(e6))) == 51840);
  CHECK_THROWS_AS(enumerate_weyl_group(cartan_from_name("A~2")), Error);
}

TEST_CASE("descent recovers lengths and words") {
  auto a = cartan_from_name("B3");
  Word w{0, 1, 2, 1, 0, 2, 1};
  WeylElement x = from_word(a, w);
  Word r = reduced_word(a, x.matrix);
  CHECK(from_word(a, r).matrix == x.matrix);
  CHECK(static_cast<int>(r.size()) == length(a, x));
  CHECK(length(a, reflect(a, 1)) == 1);
  CHECK(length(a, from_word(a, {0, 0})) == 0);
  auto at = cartan_from_name("A~2");
  WeylElement y = from_word(at, {0, 1, 2, 0, 1, 2});
  CHECK(length(at, y) == 6);
}

TEST_CASE("zeta_X on simple roots") {
  auto a2 = cartan_from_name("A2");
  // X = {1}: zeta(alpha_2) = (-1)^{alpha_2(h_1)} = -1
  CHECK(zeta_X(a2, {0}, unit(2, 1)) == -1);
  CHECK(zeta_X(a2, {0}, unit(2, 0)) == 1);
  auto g2 = cartan_from_name("G2");
  CHECK(zeta_X(g2, {0}, unit(2, 1)) == -1);
  CHECK(zeta_X(g2, {1}, unit(2, 0)) == -1);
  auto b2 = cartan_from_name("B2");
  CHECK(zeta_X(b2, {}, unit(2, 0)) == 1);
  // zeta_X is the zeta character of w_X
  for (const auto& a : testing::finite_catalogue(4))
    for (int i = 0; i < a->size(); ++i) {
      NodeSet all = all_nodes(*a);
      CHECK(zeta_X(*a, all, unit(a->size(), i)) == zeta_w(*a, longest_element(*a, all), unit(a->size(), i)));
    }
}

TEST_CASE("real and imaginary roots of affine diagrams") {
  auto a = cartan_from_name("A~1");
  RootSet r = roots(a, 6);
  CHECK(!r.complete);
  CHECK(r.contains({1, 1}));
  CHECK(r.contains({2, 1}));
  CHECK(!r.contains({2, 0}));
  CHECK(r.imaginary.size() == 3);  // delta, 2 delta, 3 delta
  auto a3 = cartan_from_name("A3");
  CHECK(real_roots(a3, 10).complete);
  CHECK(real_roots(a3, 10).real.size() == 6);
}

TEST_CASE("parabolic helpers") {
  auto a = cartan_from_name("A3");
  WeylElement s1 = reflect(a, 0);
  CHECK(in_parabolic(a, s1.matrix, {0}));
  CHECK(!in_parabolic(a, s1.matrix, {1}));
  CHECK(is_minimal_coset_rep(a, reflect(a, 1), {0}));
  CHECK(is_minimal_coset_rep(a, from_word(a, {1, 0}), {0}));
  CHECK(!is_minimal_coset_rep(a, from_word(a, {0, 1}), {0}));
  CHECK(normalizes_parabolic(a, longest_element(a, all_nodes(a)), {0, 2}));
  auto inv = inversion_set(a, {0, 1});
  CHECK(inv.size() == 2);
}
