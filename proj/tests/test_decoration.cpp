#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "satake/error.hpp"
#include "satake/decoration.hpp"
#include "satake/io.hpp"
#include "support.hpp"

using namespace satake;

TEST_CASE("compatibility clauses") {
  auto a3 = share(cartan_from_name("A3"));
  CHECK(is_compatible(make_decoration(a3, {})));
  CHECK(is_compatible(make_decoration(a3, {1}, {{0, 2}})));
  // tau must restrict to the opposition involution on X
  CHECK(!is_compatible(make_decoration(a3, {0, 1, 2})));
  CHECK(is_compatible(make_decoration(a3, {0, 1, 2}, {{0, 2}})));
  CHECK(!is_compatible(make_decoration(a3, {0}, {{0, 2}})));
  auto at = share(cartan_from_name("A~2"));
  CHECK(!is_compatible(make_decoration(at, {0, 1, 2})));  // X of affine type
  auto d = make_decoration(a3, {});
  d.tau = {1, 0, 2};
  CHECK(is_compatible(d).reason == "tau is not a diagram automorphism");
}

TEST_CASE("generalized Satake and odd nodes on the standard examples") {
  auto a2 = parse_decoration("A2[X=1]");
  CHECK(is_compatible(a2));
  CHECK(!is_generalized_satake(a2));
  CHECK(odd_nodes(a2) == NodeSet{1});
  auto triv = parse_decoration("A2[]");
  CHECK(is_generalized_satake(triv));
  CHECK(is_satake(triv));
  auto g2 = parse_decoration("G2[X=1]");
  CHECK(is_generalized_satake(g2));
  CHECK(!is_satake(g2));
  CHECK(odd_nodes(g2) == NodeSet{1});
  auto a3 = parse_decoration("A3[X=2; tau=1:3]");
  CHECK(is_generalized_satake(a3));
  CHECK(is_satake(a3));
  auto b2 = parse_decoration("B2[X=1]");
  CHECK(is_generalized_satake(b2));
}

TEST_CASE("Satake diagrams are generalized Satake; Aut(A) preserves the property") {
  for (const auto& a : testing::finite_catalogue(6)) {
    auto auts = diagram_automorphisms(*a);
    for (const auto& d : enumerate(a, Filter::Compatible, 12, false)) {
      bool g = is_generalized_satake(d);
      if (is_satake(d)) CHECK(g);
      for (const auto& psi : auts) CHECK(is_generalized_satake(act(psi, d)) == g);
    }
  }
}

TEST_CASE("structural lemma checks over all compatible decorations") {
  for (const auto& d : testing::compatible_pool(6, false)) {
    INFO(render(d));
    CHECK(check_components_lemma(d));
    CHECK(check_theta_tau_identity(d));
    CHECK(check_wX_formula(d));
  }
  for (const auto& a : testing::affine_catalogue(4))
    for (const auto& d : enumerate(a, Filter::Compatible, 12, false)) {
      INFO(render(d));
      CHECK(check_components_lemma(d));
      CHECK(check_theta_tau_identity(d));
      CHECK(check_wX_formula(d));
    }
}

TEST_CASE("enumeration filters nest") {
  for (const auto& a : testing::finite_catalogue(5)) {
    auto c = enumerate(a, Filter::Compatible, 12, false);
    auto g = enumerate(a, Filter::GSat, 12, false);
    auto s = enumerate(a, Filter::Satake, 12, false);
    CHECK(g.size() <= c.size());
    CHECK(s.size() <= g.size());
    for (const auto& d : s) CHECK(std::find(g.begin(), g.end(), d) != g.end());
    // serial and parallel enumeration agree
    CHECK(enumerate(a, Filter::GSat, 12, true) == g);
  }
  CHECK_THROWS_AS(enumerate(share(cartan_from_name("A8")), Filter::Compatible, 6), Error);
}

TEST_CASE("canonical representatives are orbit invariants") {
  auto a = share(cartan_from_name("D4"));
  auto auts = diagram_automorphisms(*a);
  for (const auto& d : enumerate(a, Filter::Compatible, 12, false))
    for (const auto& psi : auts) CHECK(canonical(act(psi, d), auts) == canonical(d, auts));
  // X = {1}, {3}, {4} are triality-equivalent; tau is either trivial or a swap
  auto reps = orbit_classes(enumerate(a, Filter::Compatible, 12, false));
  int singles = 0, fixed = 0;
  for (const auto& d : reps)
    if (d.x.size() == 1 && d.x[0] != 1) {
      ++singles;
      fixed += d.tau == identity_perm(4);
    }
  CHECK(singles == 2);
  CHECK(fixed == 1);
}

TEST_CASE("special orbits") {
  auto d = parse_decoration("A3[X=2; tau=1:3]");
  auto r = special_orbits(d);
  CHECK(r.I_star == NodeSet{0});
  CHECK(r.I_diff == NodeSet{0});
  CHECK(r.I_ns.empty());
  auto p = parse_decoration("A3[tau=1:3]");
  r = special_orbits(p);
  CHECK(r.I_ns == NodeSet{1});
  CHECK(r.I_nsf == NodeSet{1});
  auto s = parse_decoration("A2[]");
  r = special_orbits(s);
  CHECK(r.I_ns == NodeSet{0, 1});
  CHECK(r.I_nsf.empty());
}

TEST_CASE("chi and the enriched conditions") {
  auto a2 = share(cartan_from_name("A2"));
  auto d = make_decoration(a2, {}, {{0, 1}});
  CHECK(in_tilde_H_theta(enrich(d, {GaussQ(2), GaussQ(Rational(1, 2))})));
  CHECK(!in_tilde_H_theta(enrich(d, {GaussQ(2), GaussQ(2)})));
  CHECK(is_enriched_gsat(enrich(d, {GaussQ(2), GaussQ(Rational(1, 2))})));
  CHECK(chi_of(enrich(d, {GaussQ(2), GaussQ(3)}), {2, -1}) == GaussQ(Rational(4, 3)));
  // A1 x A1 style swap with a_{i tau i} = 0 needs chi(alpha_i) = chi(alpha_tau i)
  auto a3 = share(cartan_from_name("A3"));
  auto e = make_decoration(a3, {1}, {{0, 2}});
  CHECK(is_enriched_gsat(enrich(e)));
}

TEST_CASE("type A table rows") {
  for (int n = 1; n <= 6; ++n) {
    auto rows = table_typeA(n);
    int N = n + 1;
    std::size_t expect = (n > 1 ? 1 : 0) + (n > 1 && n % 2 == 1 ? 1 : 0) + static_cast<std::size_t>(N / 2 + 1);
    CHECK(rows.size() == expect);
    for (const auto& r : rows) {
      INFO(r.label);
      CHECK(is_generalized_satake(r.dec));
    }
  }
  auto r1 = table_typeA(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].restricted == "A1");
  CHECK(r1[1].restricted == "Z0");
}
