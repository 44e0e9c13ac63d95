#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "satake/error.hpp"
#include "satake/io.hpp"
#include "satake/restricted.hpp"
#include "satake/theta.hpp"
#include "support.hpp"

// Randomized invariants. Every case loop runs at least kCases times with a
// fixed seed, so failures replay exactly.

using namespace satake;
using testing::Gen;

namespace {

constexpr int kCases = 1000;

const std::vector<CartanPtr>& diagrams() {
  static const std::vector<CartanPtr> all = [] {
    auto v = testing::finite_catalogue(4);
    for (auto& a : testing::affine_catalogue(3)) v.push_back(a);
    return v;
  }();
  return all;
}

const std::vector<Decoration>& pool() { return testing::compatible_pool(5, true); }

const std::vector<Decoration>& gsat_pool() {
  static const std::vector<Decoration> out = [] {
    std::vector<Decoration> v;
    for (const auto& d : pool())
      if (is_generalized_satake(d)) v.push_back(d);
    return v;
  }();
  return out;
}

QVec apply_q(const IMat& m, const QVec& v) { return satake::apply(m, v); }

bool supported_on(const IVec& v, const NodeSet& x) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0 && !contains(x, i)) return false;
  return true;
}

// Enriched decorations of small diagrams with their theta maps.
const std::vector<std::unique_ptr<ThetaMap>>& theta_pool() {
  static const std::vector<std::unique_ptr<ThetaMap>> out = [] {
    std::vector<std::unique_ptr<ThetaMap>> v;
    Gen g(71);
    std::vector<CartanPtr> cats = testing::finite_catalogue(3);
    cats.push_back(share(cartan_from_name("A~1")));
    cats.push_back(share(cartan_from_name("C~'1")));
    for (const auto& a : cats) {
      bool affine = classify_type(*a, all_nodes(*a)).kind == TypeKind::Affine;
      int h = affine ? 8 : 12;
      AlgebraPtr alg = testing::algebra_for(a, h);
      for (const auto& d : enumerate(a, Filter::Compatible, 12, false))
        for (int k = 0; k < 3; ++k) v.push_back(std::make_unique<ThetaMap>(enrich(d, g.chi(d)), alg));
    }
    return v;
  }();
  return out;
}

// Basis index whose weight has height at most lim in absolute value.
int small_basis(Gen& g, const TruncatedAlgebra& alg, int lim) {
  for (;;) {
    int k = g.uniform(0, alg.dim() - 1);
    Int ht = height(alg.weight(k));
    if (ht <= lim && ht >= -lim) return k;
  }
}

}  // namespace

TEST_CASE("simple reflections are involutive isometries") {
  Gen g(1);
  for (int c = 0; c < kCases; ++c) {
    const auto& a = *g.pick(diagrams());
    int n = a.size();
    int i = g.uniform(0, n - 1);
    IVec x = g.ivec(n, -4, 4), y = g.ivec(n, -4, 4);
    IMat s = reflection_matrix(a, i);
    CHECK(form(a, satake::apply(s, x), satake::apply(s, y)) == form(a, x, y));
    CHECK(satake::apply(s, satake::apply(s, x)) == x);
    CHECK(satake::apply(s, unit(n, i)) == neg(unit(n, i)));
  }
}

TEST_CASE("reduced words reproduce the element") {
  Gen g(2);
  for (int c = 0; c < kCases; ++c) {
    const auto& a = g.pick(diagrams());
    Word w(g.uniform(0, 8));
    for (auto& k : w) k = g.uniform(0, a->size() - 1);
    WeylElement e = from_word(*a, w);
    Word r = reduced_word(*a, e.matrix);
    CHECK(r.size() <= w.size());
    CHECK((r.size() - w.size()) % 2 == 0);
    CHECK(from_word(*a, r).matrix == e.matrix);
    CHECK(inversion_set(*a, r).size() == r.size());
  }
}

TEST_CASE("sigma is an involutive isometry negating the roots of X") {
  Gen g(3);
  for (int c = 0; c < kCases; ++c) {
    const Decoration& d = g.pick(pool());
    int n = d.size();
    IMat s = sigma_matrix(d);
    CHECK(s * s == IMat::identity(n));
    IVec x = g.ivec(n, -3, 3), y = g.ivec(n, -3, 3);
    CHECK(form(*d.a, satake::apply(s, x), satake::apply(s, y)) == form(*d.a, x, y));
    for (int j : d.x) {
      IVec img = satake::apply(s, unit(n, j));
      CHECK(is_nonpos(img));
      CHECK(supported_on(img, d.x));
    }
  }
}

TEST_CASE("bar is the orthogonal projection onto V^sigma") {
  Gen g(4);
  for (int c = 0; c < kCases; ++c) {
    const Decoration& d = g.pick(pool());
    Sigma s = sigma(d);
    int n = d.size();
    QVec x = g.qvec(n), y = g.qvec(n);
    QVec bx = bar(s, x);
    CHECK(bar(s, bx) == bx);
    CHECK(apply_q(s.matrix, bx) == bx);
    CHECK(form(*d.a, bx, y) == form(*d.a, bx, bar(s, y)));
    CHECK(form(*d.a, bx, y) == form(*d.a, x, bar(s, y)));
  }
}

TEST_CASE("structural lemmas hold on compatible decorations") {
  Gen g(5);
  const auto& p = pool();
  REQUIRE(!p.empty());
  int n = std::max<int>(kCases, static_cast<int>(p.size()));
  for (int c = 0; c < n; ++c) {
    const Decoration& d = c < static_cast<int>(p.size()) ? p[c] : g.pick(p);
    INFO(render(d));
    CHECK(check_components_lemma(d));
    CHECK(check_theta_tau_identity(d));
    CHECK(check_wX_formula(d));
  }
}

TEST_CASE("signs of restricted inner products") {
  Gen g(6);
  int cases = 0;
  while (cases < kCases) {
    const Decoration& d = g.pick(pool());
    Sigma s = sigma(d);
    NodeSet istar = default_I_star(d);
    if (istar.empty()) continue;
    int i = g.pick(istar), j = g.pick(istar);
    NodeSet xi = set_union(d.x, {i, d.tau[i]});
    bool finite_i = is_finite_type(*d.a, xi);
    Rational ip = form(*d.a, bar(s, unit(d.size(), i)), bar(s, unit(d.size(), j)));
    INFO(render(d) << " i=" << i << " j=" << j);
    CHECK((ip > 0) == (i == j && finite_i));
    ++cases;
  }
}

TEST_CASE("roots in V^-sigma are exactly the roots of X") {
  Gen g(7);
  int cases = 0;
  while (cases < kCases) {
    const Decoration& d = g.pick(pool());
    Sigma s = sigma(d);
    RootSet rs = roots(*d.a, 6);
    for (const auto& r : rs.real) {
      bool killed = true;
      for (const auto& x : bar(s, r)) killed = killed && x == 0;
      CHECK(killed == supported_on(r, d.x));
      ++cases;
    }
    for (const auto& r : rs.imaginary) {
      for (const auto& x : bar(s, r)) CHECK(x >= 0);
      ++cases;
    }
  }
}

TEST_CASE("restricted Gram matrices are symmetric and tilde s preserves V^sigma") {
  Gen g(8);
  int cases = 0;
  while (cases < kCases) {
    const Decoration& d = g.pick(gsat_pool());
    RestrictedRootSystem r = restricted_system(d, 6);
    for (int a = 0; a < r.gram.rows(); ++a)
      for (int b = 0; b < r.gram.cols(); ++b) CHECK(r.gram(a, b) == r.gram(b, a));
    IMat sg = sigma_matrix(d);
    if (!r.tilde_I.empty()) {
      int i = g.pick(r.tilde_I);
      WeylElement t = tilde_s(d, i);
      CHECK(t.matrix * sg == sg * t.matrix);
      Sigma s = sigma(d);
      QVec ai = bar(s, unit(d.size(), i));
      QVec img = apply_q(t.matrix, ai);
      for (std::size_t k = 0; k < img.size(); ++k) CHECK(img[k] == -ai[k]);
    }
    ++cases;
  }
}

TEST_CASE("theta is a homomorphism") {
  Gen g(9);
  const auto& tp = theta_pool();
  int cases = 0;
  while (cases < kCases) {
    const ThetaMap& th = *g.pick(tp);
    const auto& alg = th.algebra();
    int lim = alg.complete() ? alg.height() : alg.height() / 4;
    int x = small_basis(g, alg, lim), y = small_basis(g, alg, lim);
    try {
      Element xy = alg.bracket(alg.basis(x), alg.basis(y));
      if (xy.truncated) continue;
      CHECK(th(xy) == alg.bracket(th(alg.basis(x)), th(alg.basis(y))));
      ++cases;
    } catch (const TruncationOverflow&) {
    }
  }
}

TEST_CASE("theta squares to chi^2 zeta_X") {
  Gen g(10);
  const auto& tp = theta_pool();
  int cases = 0;
  while (cases < kCases) {
    const ThetaMap& th = *g.pick(tp);
    const auto& alg = th.algebra();
    int lim = alg.complete() ? alg.height() : alg.height() / 4;
    int k = small_basis(g, alg, lim);
    try {
      Element sq = th(th(alg.basis(k)));
      Element expect = alg.basis(k);
      expect *= th.chi(alg.weight(k)).pow(2) * GaussQ(zeta_X(alg.cartan(), th.dec().x, alg.weight(k)));
      CHECK(sq == expect);
      ++cases;
    } catch (const TruncationOverflow&) {
    }
  }
}

TEST_CASE("b_w - f_w lies strictly above -alpha_w") {
  Gen g(11);
  const auto& tp = theta_pool();
  int cases = 0;
  while (cases < kCases) {
    const ThetaMap& th = *g.pick(tp);
    const auto& alg = th.algebra();
    int n = alg.rank();
    Word w(g.uniform(1, 3));
    for (auto& k : w) k = g.uniform(0, n - 1);
    try {
      Element b = b_word(th, w);
      Element f = alg.word(w);
      Element diff = b - f;
      IVec aw(n, 0);
      for (int k : w) aw[k] += 1;
      for (int k = 0; k < alg.dim(); ++k) {
        if (diff.c[k].is_zero()) continue;
        IVec shifted = add(alg.weight(k), aw);
        CHECK(is_nonneg(shifted));
        CHECK(!is_zero_vec(shifted));
      }
      ++cases;
    } catch (const TruncationOverflow&) {
    }
  }
}

TEST_CASE("contravariant Gram matrices are symmetric") {
  Gen g(12);
  std::vector<AlgebraPtr> algs;
  for (const auto& a : diagrams()) algs.push_back(testing::algebra_for(a, 5));
  for (int c = 0; c < kCases; ++c) {
    const auto& alg = *g.pick(algs);
    int d = g.uniform(0, static_cast<int>(alg.degrees().size()) - 1);
    const QMat& m = alg.gram(d);
    int r = g.uniform(0, m.rows() - 1), s = g.uniform(0, m.cols() - 1);
    CHECK(m(r, s) == m(s, r));
    CHECK(m.rows() == alg.degrees()[d].dim());
  }
}

TEST_CASE("render and parse are inverse on random enriched decorations") {
  Gen g(13);
  for (int c = 0; c < kCases; ++c) {
    const Decoration& d = g.pick(pool());
    EnrichedDecoration e = enrich(d, g.chi(d));
    EnrichedDecoration back = parse_spec(render(e));
    CHECK(back.base == e.base);
    CHECK(back.chi == e.chi);
  }
}
