#include "satake/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "satake/error.hpp"
#include "satake/parallel.hpp"

namespace satake {

IMat reflection_matrix(const CartanMatrix& a, int i) {
  int n = a.size();
  IMat m = IMat::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1 : 0) - a(i, j);
  return m;
}

WeylElement reflect(const CartanMatrix& a, int i) { return {reflection_matrix(a, i), {i}}; }

WeylElement identity_element(const CartanMatrix& a) { return {IMat::identity(a.size()), {}}; }

WeylElement from_word(const CartanMatrix& a, const Word& w) {
  WeylElement e = identity_element(a);
  for (int i : w) e = e * reflect(a, i);
  return e;
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  Word w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return {x.matrix * y.matrix, std::move(w)};
}

IVec apply(const WeylElement& w, const IVec& v) { return w.matrix.apply(v); }
IVec apply(const IMat& w, const IVec& v) { return w.apply(v); }
QVec apply(const IMat& w, const QVec& v) { return to_q(w).apply(v); }

Int pairing(const CartanMatrix& a, const IVec& lambda, int i) {
  Int s = 0;
  for (int k = 0; k < a.size(); ++k) s += a(i, k) * lambda[k];
  return s;
}

Rational pairing(const CartanMatrix& a, const QVec& lambda, int i) {
  Rational s = 0;
  for (int k = 0; k < a.size(); ++k) s += Rational(static_cast<long>(a(i, k))) * lambda[k];
  return s;
}

Rational form(const CartanMatrix& a, const QVec& x, const QVec& y) {
  Rational s = 0;
  for (int k = 0; k < a.size(); ++k) {
    if (is_zero(x[k])) continue;
    for (int l = 0; l < a.size(); ++l)
      if (!is_zero(y[l])) s += x[k] * y[l] * Rational(static_cast<long>(a.epsilon()[k] * a(k, l)));
  }
  return s;
}

Int form(const CartanMatrix& a, const IVec& x, const IVec& y) {
  Int s = 0;
  for (int k = 0; k < a.size(); ++k)
    for (int l = 0; l < a.size(); ++l) s += x[k] * y[l] * a.epsilon()[k] * a(k, l);
  return s;
}

Int coroot_pairing(const CartanMatrix& a, const IVec& lambda, const IVec& alpha) {
  Int num = 2 * form(a, lambda, alpha);
  Int den = form(a, alpha, alpha);
  if (den <= 0 || num % den != 0) throw Error(Errc::NotInWeylGroup, "coroot pairing with a non-real root");
  return num / den;
}

namespace {

// w <- w * s_i as a column operation.
void right_multiply(const CartanMatrix& a, IMat& w, int i) {
  for (int j = 0; j < a.size(); ++j) {
    Int c = a(i, j);
    if (j == i || c == 0) continue;
    for (int r = 0; r < w.rows(); ++r) w(r, j) -= c * w(r, i);
  }
  for (int r = 0; r < w.rows(); ++r) w(r, i) = -w(r, i);
}

bool column_negative(const IMat& w, int i) {
  for (int r = 0; r < w.rows(); ++r)
    if (w(r, i) < 0) return true;
  return false;
}

bool column_positive(const IMat& w, int i) { return !column_negative(w, i); }

}  // namespace

Descent descend(const CartanMatrix& a, const IMat& w0, int step_cap) {
  IMat w = w0;
  Word rec;
  for (;;) {
    int d = -1;
    for (int i = 0; i < a.size() && d < 0; ++i)
      if (column_negative(w, i)) d = i;
    if (d < 0) break;
    if (static_cast<int>(rec.size()) >= step_cap) throw Error(Errc::NotInWeylGroup, "descent did not terminate");
    right_multiply(a, w, d);
    rec.push_back(d);
  }
  if (w != IMat::identity(a.size())) throw Error(Errc::NotInWeylGroup, "matrix is not a product of reflections");
  std::reverse(rec.begin(), rec.end());
  return {static_cast<int>(rec.size()), rec};
}

int length(const CartanMatrix& a, const WeylElement& w) { return descend(a, w.matrix).length; }

Word reduced_word(const CartanMatrix& a, const IMat& w) { return descend(a, w).reduced_word; }

WeylElement longest_element(const CartanMatrix& a, const NodeSet& x) {
  if (!is_finite_type(a, x)) throw Error(Errc::NotFiniteType, "w_X needs X of finite type: " + to_string(x, a));
  WeylElement w = identity_element(a);
  for (;;) {
    int pick = -1;
    for (int j : x)
      if (column_positive(w.matrix, j)) {
        pick = j;
        break;
      }
    if (pick < 0) return w;
    right_multiply(a, w.matrix, pick);
    w.word.push_back(pick);
  }
}

Perm opposition_involution(const CartanMatrix& a, const NodeSet& x) {
  WeylElement w = longest_element(a, x);
  Perm p(a.size());
  for (int i = 0; i < a.size(); ++i) p[i] = i;
  for (int i : x) {
    IVec c = neg(w.matrix.col(i));
    for (int j : x)
      if (c == unit(a.size(), j)) p[i] = j;
  }
  return p;
}

std::vector<IVec> positive_roots_finite(const CartanMatrix& a, const NodeSet& x) {
  if (!is_finite_type(a, x)) throw Error(Errc::NotFiniteType, "positive roots of an infinite subsystem");
  std::set<IVec> seen;
  std::vector<IVec> out;
  std::queue<IVec> q;
  for (int j : x) {
    IVec v = unit(a.size(), j);
    seen.insert(v);
    q.push(v);
  }
  while (!q.empty()) {
    IVec b = q.front();
    q.pop();
    out.push_back(b);
    for (int i : x) {
      Int c = pairing(a, b, i);
      if (c >= 0) continue;  // only go up
      IVec r = b;
      r[i] -= c;
      if (seen.insert(r).second) q.push(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const IVec& u, const IVec& v) {
    Int hu = height(u), hv = height(v);
    return hu != hv ? hu < hv : u < v;
  });
  return out;
}

std::vector<IVec> inversion_set(const CartanMatrix& a, const Word& reduced) {
  std::vector<IVec> out;
  WeylElement p = identity_element(a);
  for (int i : reduced) {
    out.push_back(p.matrix.col(i));
    p = p * reflect(a, i);
  }
  return out;
}

int zeta_X(const CartanMatrix& a, const NodeSet& x, const IVec& lambda) {
  Int s = 0;
  for (const IVec& r : positive_roots_finite(a, x)) s += coroot_pairing(a, lambda, r);
  return (s % 2 == 0) ? 1 : -1;
}

int zeta_w(const CartanMatrix& a, const WeylElement& w, const IVec& lambda) {
  Int s = 0;
  for (const IVec& r : inversion_set(a, reduced_word(a, w.matrix))) s += coroot_pairing(a, lambda, r);
  return (s % 2 == 0) ? 1 : -1;
}

namespace {

std::vector<IVec> sorted_by_height(std::set<IVec> s) {
  std::vector<IVec> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), [](const IVec& u, const IVec& w) {
    Int hu = height(u), hw = height(w);
    return hu != hw ? hu < hw : u < w;
  });
  return v;
}

void close_upward(const CartanMatrix& a, std::set<IVec>& seen, int h) {
  std::queue<IVec> q;
  for (const IVec& v : seen) q.push(v);
  while (!q.empty()) {
    IVec b = q.front();
    q.pop();
    for (int i = 0; i < a.size(); ++i) {
      Int c = pairing(a, b, i);
      if (c >= 0) continue;
      IVec r = b;
      r[i] -= c;
      if (height(r) > h) continue;
      if (seen.insert(r).second) q.push(r);
    }
  }
}

bool connected_support(const CartanMatrix& a, const IVec& v) {
  NodeSet s;
  for (int i = 0; i < a.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return components(a, s).size() == 1;
}

void for_each_qplus(int n, int h, const std::function<void(const IVec&)>& f) {
  IVec v(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      if (left < h) f(v);  // skip the zero vector
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v[k] = c;
      rec(k + 1, left - c);
    }
    v[k] = 0;
  };
  rec(0, h);
}

}  // namespace

std::vector<IVec> positive_real_roots(const CartanMatrix& a, int h) {
  std::set<IVec> seen;
  if (h >= 1)
    for (int i = 0; i < a.size(); ++i) seen.insert(unit(a.size(), i));
  close_upward(a, seen, h);
  return sorted_by_height(std::move(seen));
}

std::vector<IVec> positive_imaginary_roots(const CartanMatrix& a, int h) {
  if (is_finite_type(a, all_nodes(a))) return {};
  std::set<IVec> seen;
  for_each_qplus(a.size(), h, [&](const IVec& v) {
    for (int i = 0; i < a.size(); ++i)
      if (pairing(a, v, i) > 0) return;
    if (connected_support(a, v)) seen.insert(v);
  });
  close_upward(a, seen, h);
  return sorted_by_height(std::move(seen));
}

bool RootSet::contains(const IVec& v) const {
  IVec p = is_nonpos(v) ? neg(v) : v;
  return std::binary_search(real.begin(), real.end(), p,
                            [](const IVec& u, const IVec& w) {
                              Int hu = height(u), hw = height(w);
                              return hu != hw ? hu < hw : u < w;
                            }) ||
         std::binary_search(imaginary.begin(), imaginary.end(), p, [](const IVec& u, const IVec& w) {
           Int hu = height(u), hw = height(w);
           return hu != hw ? hu < hw : u < w;
         });
}

std::vector<IVec> RootSet::all() const {
  std::vector<IVec> out;
  for (const auto* s : {&real, &imaginary})
    for (const IVec& v : *s) {
      out.push_back(v);
      out.push_back(neg(v));
    }
  return out;
}

RootSet real_roots(const CartanMatrix& a, int h) {
  RootSet r;
  r.complete = is_finite_type(a, all_nodes(a));
  r.real = r.complete ? positive_roots_finite(a, all_nodes(a)) : positive_real_roots(a, h);
  r.height_bound = h;
  return r;
}

RootSet roots(const CartanMatrix& a, int h) {
  RootSet r = real_roots(a, h);
  if (!r.complete) r.imaginary = positive_imaginary_roots(a, h);
  return r;
}

bool in_parabolic(const CartanMatrix& a, const IMat& w, const NodeSet& x) {
  for (int i : reduced_word(a, w))
    if (!contains(x, i)) return false;
  return true;
}

bool is_minimal_coset_rep(const CartanMatrix& a, const WeylElement& w, const NodeSet& x) {
  if (!is_finite_type(a, x)) throw Error(Errc::NotFiniteType, "coset test needs X of finite type");
  Word r = reduced_word(a, w.matrix);
  std::reverse(r.begin(), r.end());
  IMat inv = from_word(a, r).matrix;
  for (int j : x)
    if (!is_nonneg(inv.col(j))) return false;
  return true;
}

bool normalizes_parabolic(const CartanMatrix& a, const WeylElement& w, const NodeSet& x) {
  auto phi = positive_roots_finite(a, x);
  std::set<IVec> px(phi.begin(), phi.end());
  for (int j : x) {
    IVec c = w.matrix.col(j);
    if (!px.count(c) && !px.count(neg(c))) return false;
  }
  return true;
}

namespace {

std::string pack(const IMat& m) {
  std::string s;
  s.reserve(m.data().size());
  for (Int v : m.data()) {
    if (v < -127 || v > 127) {
      // Rare wide entries: fall back to a decimal encoding with a marker byte.
      std::string t = "\x80";
      for (Int u : m.data()) t += std::to_string(u) + ",";
      return t;
    }
    s.push_back(static_cast<char>(v));
  }
  return s;
}

std::string pack(const QMat& m) {
  std::string s;
  for (const auto& v : m.data()) s += v.get_str() + ",";
  return s;
}

}  // namespace

std::vector<IMat> group_elements(const std::vector<IMat>& gens, std::size_t cap, bool parallel) {
  if (gens.empty()) return {IMat::identity(0)};
  int n = gens[0].rows();
  return closure_bfs(IMat::identity(n), gens, cap, [](const IMat& m) { return pack(m); }, parallel,
                     Errc::BeyondBruteForce);
}

std::vector<QMat> group_elements(const std::vector<QMat>& gens, std::size_t cap, bool parallel) {
  if (gens.empty()) return {QMat::identity(0)};
  int n = gens[0].rows();
  return closure_bfs(QMat::identity(n), gens, cap, [](const QMat& m) { return pack(m); }, parallel,
                     Errc::BeyondBruteForce);
}

std::size_t group_order(const std::vector<IMat>& gens, std::size_t cap, bool parallel) {
  return gens.empty() ? 1 : group_elements(gens, cap, parallel).size();
}

std::size_t group_order(const std::vector<QMat>& gens, std::size_t cap, bool parallel) {
  return gens.empty() ? 1 : group_elements(gens, cap, parallel).size();
}

std::vector<IMat> enumerate_weyl_group(const CartanMatrix& a, std::size_t budget, bool parallel) {
  if (!is_finite_type(a, all_nodes(a))) throw Error(Errc::BeyondBruteForce, "W is infinite");
  std::vector<IMat> gens;
  for (int i = 0; i < a.size(); ++i) gens.push_back(reflection_matrix(a, i));
  return group_elements(gens, budget, parallel);
}

template <class M>
static int order_of(const M& m, int cap) {
  M id = M::identity(m.rows());
  M p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

int element_order(const IMat& m, int cap) { return order_of(m, cap); }
int element_order(const QMat& m, int cap) { return order_of(m, cap); }

std::size_t weyl_order_formula(const LieTypeLabel& t) {
  std::size_t total = 1;
  auto fact = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (const auto& c : t.components) {
    int n = c.rank;
    const std::string& f = c.family;
    if (f == "A") total *= fact(n + 1);
    else if (f == "B" || f == "C") total *= (std::size_t{1} << n) * fact(n);
    else if (f == "D") total *= (std::size_t{1} << (n - 1)) * fact(n);
    else if (f == "E") total *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    else if (f == "F") total *= 1152;
    else if (f == "G") total *= 12;
    else return 0;
  }
  return total;
}

}  // namespace satake
