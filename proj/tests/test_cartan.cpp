#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <numeric>

#include "doctest.h"
#include "satake/cartan.hpp"
#include "satake/error.hpp"
#include "support.hpp"

using namespace satake;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

IMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  int n = static_cast<int>(rows.size());
  IMat m(n, n);
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (Int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("validation rejects malformed matrices") {
  CHECK(code_of([] { validate_gcm(mat({{2, -1}, {0, 2}})); }) == Errc::NotGCM);
  CHECK(code_of([] { validate_gcm(mat({{2, 1}, {1, 2}})); }) == Errc::NotGCM);
  CHECK(code_of([] { validate_gcm(mat({{1, -1}, {-1, 2}})); }) == Errc::NotGCM);
  CHECK(code_of([] { validate_gcm(mat({{2, 0}, {0, 2}})); }) == Errc::Decomposable);
  // a 3-cycle whose products around the cycle differ is not symmetrizable
  CHECK(code_of([] { validate_gcm(mat({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})); }) == Errc::NotSymmetrizable);
  CHECK_NOTHROW(validate_gcm_relaxed(mat({{2, 0}, {0, 2}})));
}

TEST_CASE("symmetrizers are coprime and symmetrize") {
  for (const auto& a : testing::finite_catalogue(8)) {
    const auto& eps = a->epsilon();
    Int g = 0;
    for (Int e : eps) g = std::gcd(g, e);
    CHECK(g == 1);
    for (int i = 0; i < a->size(); ++i)
      for (int j = 0; j < a->size(); ++j) CHECK(eps[i] * (*a)(i, j) == eps[j] * (*a)(j, i));
  }
  auto g2 = cartan_from_name("G2");
  CHECK(g2(0, 1) == -1);
  CHECK(g2(1, 0) == -3);
  // node 1 is long
  CHECK(g2.epsilon() == std::vector<Int>{3, 1});
}

TEST_CASE("bilinear form is symmetric with the expected diagonal") {
  auto b2 = cartan_from_name("B2");
  IMat f = bilinear_form(b2);
  CHECK(f(0, 1) == f(1, 0));
  for (const auto& a : testing::affine_catalogue(4)) {
    IMat m = bilinear_form(*a);
    for (int i = 0; i < a->size(); ++i) {
      CHECK(m(i, i) > 0);
      for (int j = 0; j < a->size(); ++j) CHECK(m(i, j) == m(j, i));
    }
  }
}

TEST_CASE("type recognition of subdiagrams") {
  auto e8 = share(cartan_from_name("E8"));
  CHECK(classify_type(*e8, all_nodes(*e8)).name() == "E8");
  CHECK(classify_type(*e8, {}).name() == "Z0");
  auto a5 = share(cartan_from_name("A5"));
  CHECK(classify_type(*a5, {0, 2, 4}).name() == "A1xA1xA1");
  CHECK(classify_type(*a5, {1, 2}).name() == "A2");
  auto d4 = share(cartan_from_name("D4"));
  CHECK(classify_type(*d4, {0, 1, 2}).name() == "A3");
  auto at = share(cartan_from_name("A~3"));
  CHECK(classify_type(*at, all_nodes(*at)).kind == TypeKind::Affine);
  CHECK(classify_type(*at, all_nodes(*at)).name() == "A~3");
  CHECK(classify_type(*at, {0, 1, 2}).name() == "A3");
  auto gv = share(cartan_from_name("D4^(3)"));
  CHECK(gv->catalogue_name() == "G~v2");
  CHECK(classify_type(*gv, all_nodes(*gv)).kac() == "D4^(3)");
  auto hyp = validate_gcm(mat({{2, -3}, {-3, 2}}));
  CHECK(kind_of(hyp, all_nodes(hyp)) == TypeKind::Indefinite);
}

TEST_CASE("every catalogued matrix classifies back to its own name") {
  auto cats = testing::finite_catalogue(8);
  for (auto& a : testing::affine_catalogue(8)) cats.push_back(a);
  for (const auto& a : cats) {
    INFO(a->catalogue_name());
    CHECK(classify_type(*a, all_nodes(*a)).name() == a->catalogue_name());
    CHECK(classify_matrix(a->entries()).name() == a->catalogue_name());
  }
}

TEST_CASE("diagram automorphism groups") {
  CHECK(diagram_automorphisms(cartan_from_name("A1")).size() == 1);
  CHECK(diagram_automorphisms(cartan_from_name("A4")).size() == 2);
  CHECK(diagram_automorphisms(cartan_from_name("D4")).size() == 6);
  CHECK(diagram_automorphisms(cartan_from_name("D5")).size() == 2);
  CHECK(diagram_automorphisms(cartan_from_name("E6")).size() == 2);
  CHECK(diagram_automorphisms(cartan_from_name("E7")).size() == 1);
  CHECK(diagram_automorphisms(cartan_from_name("G2")).size() == 1);
  CHECK(diagram_automorphisms(cartan_from_name("A~1")).size() == 2);
  CHECK(diagram_automorphisms(cartan_from_name("A~4")).size() == 10);
  CHECK(diagram_automorphisms(cartan_from_name("D~4")).size() == 24);
  CHECK(diagram_automorphisms(cartan_from_name("C~'1")).size() == 1);
}

TEST_CASE("components and perp") {
  auto a5 = cartan_from_name("A5");
  auto cs = components(a5, {0, 1, 3, 4});
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == NodeSet{0, 1});
  CHECK(cs[1] == NodeSet{3, 4});
  CHECK(perp(a5, {0}) == NodeSet{2, 3, 4});
  CHECK(perp(a5, {}) == all_nodes(a5));
}

TEST_CASE("labels follow the family conventions") {
  auto a3 = cartan_from_name("A3");
  CHECK(a3.label(0) == "1");
  CHECK(a3.node("3") == 2);
  auto at = cartan_from_name("A~2");
  CHECK(at.label(0) == "0");
  CHECK(at.node("2") == 2);
  CHECK(!at.node("3"));
}
