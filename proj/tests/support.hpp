#pragma once
// Shared helpers for the test binaries: catalogue sweeps and random generators.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/decoration.hpp"
#include "satake/lie.hpp"
#include "satake/theta.hpp"

namespace satake::testing {

struct Family {
  const char* family;
  int lo, hi;
};

// Finite families with rank in [1, max_rank].
inline std::vector<CartanPtr> finite_catalogue(int max_rank) {
  static const Family fams[] = {{"A", 1, 8}, {"B", 2, 8}, {"C", 3, 8}, {"D", 4, 8},
                                {"E", 6, 8}, {"F", 4, 4}, {"G", 2, 2}};
  std::vector<CartanPtr> out;
  for (const auto& f : fams)
    for (int r = f.lo; r <= std::min(f.hi, max_rank); ++r) out.push_back(share(catalogue(f.family, r)));
  return out;
}

// Affine families with Carter index in [1, max_rank].
inline std::vector<CartanPtr> affine_catalogue(int max_rank) {
  static const Family fams[] = {{"A~", 1, 8},  {"B~", 3, 8}, {"B~v", 3, 8}, {"C~", 2, 8},
                                {"C~v", 2, 8}, {"C~'", 1, 8}, {"D~", 4, 8}, {"F~", 4, 4},
                                {"F~v", 4, 4}, {"G~", 2, 2}, {"G~v", 2, 2}};
  std::vector<CartanPtr> out;
  for (const auto& f : fams)
    for (int r = f.lo; r <= std::min(f.hi, max_rank); ++r) out.push_back(share(catalogue(f.family, r)));
  return out;
}

// Deterministic generator; every property binary seeds it explicitly.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  IVec ivec(int n, int lo, int hi) {
    IVec v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }
  QVec qvec(int n) {
    QVec v(n);
    for (auto& x : v) {
      x = Rational(uniform(-6, 6), uniform(1, 4));
      x.canonicalize();
    }
    return v;
  }
  Rational rational() {
    Rational q(uniform(-5, 5), uniform(1, 3));
    q.canonicalize();
    return q;
  }
  GaussQ gauss() { return GaussQ(rational(), coin() ? rational() : Rational(0)); }
  NodeSet subset(int n) {
    NodeSet s;
    for (int i = 0; i < n; ++i)
      if (coin()) s.push_back(i);
    return s;
  }

  // Random element of H~^theta: chi(sigma alpha_i) = chi(alpha_i)^{-1}; falls back to 1.
  std::vector<GaussQ> chi(const Decoration& d, int tries = 8) {
    static const std::vector<GaussQ> vals = {GaussQ(1), GaussQ(-1), GaussQ::i(), -GaussQ::i(),
                                             GaussQ(2), GaussQ(Rational(1, 2)), GaussQ(-2), GaussQ(Rational(-1, 2))};
    for (int t = 0; t < tries; ++t) {
      std::vector<GaussQ> c(d.size());
      for (auto& z : c) z = pick(vals);
      for (int j : d.x) c[j] = GaussQ(1);
      if (in_tilde_H_theta(enrich(d, c))) return c;
    }
    return std::vector<GaussQ>(d.size(), GaussQ(1));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Compatible decorations of all catalogued diagrams up to the given rank.
inline const std::vector<Decoration>& compatible_pool(int max_rank, bool affine) {
  static std::map<std::pair<int, bool>, std::vector<Decoration>> cache;
  auto& out = cache[{max_rank, affine}];
  if (out.empty()) {
    auto cats = finite_catalogue(max_rank);
    if (affine)
      for (auto& a : affine_catalogue(max_rank - 1)) cats.push_back(a);
    for (auto& a : cats)
      for (auto& d : enumerate(a, Filter::Compatible, 12, false)) out.push_back(d);
  }
  return out;
}

// One algebra per diagram and height, shared across cases.
inline AlgebraPtr algebra_for(const CartanPtr& a, int h) {
  static std::map<std::pair<std::string, int>, AlgebraPtr> cache;
  auto key = std::make_pair(a->catalogue_name(), h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache[key] = TruncatedAlgebra::build(a, h);
}

inline bool same_span(const std::vector<Element>& x, const std::vector<Element>& y) {
  for (const auto& v : x)
    if (!coordinates(y, v)) return false;
  for (const auto& v : y)
    if (!coordinates(x, v)) return false;
  return true;
}

}  // namespace satake::testing
