#include "satake/decoration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "satake/error.hpp"
#include "satake/parallel.hpp"

namespace satake {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Decoration make_decoration(CartanPtr a, NodeSet x, const std::vector<std::pair<int, int>>& swaps) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  Perm tau = identity_perm(a->size());
  for (auto [p, q] : swaps) {
    tau[p] = q;
    tau[q] = p;
  }
  return {std::move(a), std::move(x), std::move(tau)};
}

EnrichedDecoration enrich(const Decoration& d, std::vector<GaussQ> chi) {
  if (chi.empty()) chi.assign(d.size(), GaussQ(1));
  return {d, std::move(chi)};
}

std::vector<std::pair<int, int>> tau_pairs(const Perm& tau) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(tau.size()); ++i)
    if (tau[i] > i) out.emplace_back(i, tau[i]);
  return out;
}

Verdict is_compatible(const Decoration& d) {
  const CartanMatrix& a = *d.a;
  int n = a.size();
  if (static_cast<int>(d.tau.size()) != n) return {false, "tau has the wrong size"};
  std::vector<char> hit(n, 0);
  for (int v : d.tau) {
    if (v < 0 || v >= n || hit[v]) return {false, "tau is not a permutation"};
    hit[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(d.tau[i], d.tau[j]) != a(i, j)) return {false, "tau is not a diagram automorphism"};
  for (int i = 0; i < n; ++i)
    if (d.tau[d.tau[i]] != i) return {false, "tau is not an involution"};
  for (int v : d.x)
    if (v < 0 || v >= n) return {false, "X contains an unknown node"};
  if (!is_finite_type(a, d.x)) return {false, "X is not of finite type"};
  if (image(d.tau, d.x) != d.x) return {false, "tau does not stabilize X"};
  Perm oi = opposition_involution(a, d.x);
  for (int j : d.x)
    if (d.tau[j] != oi[j]) return {false, "tau restricted to X differs from the opposition involution"};
  return {};
}

void require_compatible(const Decoration& d) {
  if (auto v = is_compatible(d); !v) throw Error(Errc::NotCompatible, v.reason);
}

IMat sigma_matrix(const Decoration& d) {
  int n = d.size();
  IMat t(n, n);
  for (int i = 0; i < n; ++i) t(d.tau[i], i) = 1;
  return longest_element(*d.a, d.x).matrix * t;
}

bool is_generalized_satake(const Decoration& d) {
  require_compatible(d);
  const CartanMatrix& a = *d.a;
  for (int i = 0; i < a.size(); ++i) {
    if (contains(d.x, i) || d.tau[i] != i) continue;
    for (const NodeSet& c : components(a, set_union(d.x, {i})))
      if (contains(c, i) && c.size() == 2 && a(c[0], c[1]) * a(c[1], c[0]) == 1) return false;
  }
  return true;
}

NodeSet odd_nodes(const Decoration& d) {
  require_compatible(d);
  NodeSet out;
  for (int i = 0; i < d.size(); ++i)
    if (!contains(d.x, i) && d.tau[i] == i && zeta_X(*d.a, d.x, unit(d.size(), i)) == -1) out.push_back(i);
  return out;
}

bool is_satake(const Decoration& d) { return odd_nodes(d).empty(); }

GaussQ chi_of(const EnrichedDecoration& e, const IVec& lambda) {
  GaussQ r(1);
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] != 0) r *= e.chi[k].pow(lambda[k]);
  return r;
}

Verdict in_tilde_H_theta(const EnrichedDecoration& e) {
  int n = e.base.size();
  if (static_cast<int>(e.chi.size()) != n) return {false, "chi has the wrong size"};
  for (const auto& c : e.chi)
    if (c.is_zero()) return {false, "chi vanishes on a simple root"};
  IMat s = sigma_matrix(e.base);
  for (int i = 0; i < n; ++i)
    if (chi_of(e, s.col(i)) != e.chi[i].inverse())
      return {false, "chi(sigma(alpha_" + e.base.a->label(i) + ")) != chi(alpha_" + e.base.a->label(i) + ")^-1"};
  return {};
}

bool is_enriched_gsat(const EnrichedDecoration& e) {
  if (auto v = in_tilde_H_theta(e); !v) throw Error(Errc::InvalidCharacter, v.reason);
  const Decoration& d = e.base;
  if (!is_generalized_satake(d)) return false;
  const CartanMatrix& a = *d.a;
  NodeSet xp = perp(a, d.x);
  for (int i : xp) {
    int t = d.tau[i];
    if (a(i, t) == 0 && e.chi[t] != e.chi[i]) return false;
  }
  return true;
}

NodeSet default_I_star(const Decoration& d) {
  NodeSet out;
  for (int i = 0; i < d.size(); ++i)
    if (!contains(d.x, i) && d.tau[i] >= i) out.push_back(i);
  return out;
}

OrbitReport special_orbits(const Decoration& d, const NodeSet& I_star) {
  require_compatible(d);
  const CartanMatrix& a = *d.a;
  OrbitReport r;
  r.I_star = I_star;
  NodeSet xp = perp(a, d.x);
  for (int i : I_star) {
    int t = d.tau[i];
    if (t != i && !contains(perp(a, set_union(d.x, {t})), i)) r.I_diff.push_back(i);
    if (t == i && contains(xp, i)) r.I_ns.push_back(i);
  }
  for (int j : r.I_ns) {
    bool even = true;
    for (int i : r.I_ns)
      if (a(i, j) % 2 != 0) even = false;
    if (even) r.I_nsf.push_back(j);
  }
  r.odd = odd_nodes(d);
  return r;
}

OrbitReport special_orbits(const Decoration& d) { return special_orbits(d, default_I_star(d)); }

std::vector<Decoration> enumerate(const CartanPtr& a, Filter f, int rank_guard, bool parallel) {
  int n = a->size();
  if (n > rank_guard || n > 20)
    throw Error(Errc::RankGuardExceeded, "rank " + std::to_string(n) + " exceeds guard " + std::to_string(rank_guard));
  std::vector<NodeSet> subsets;
  for (unsigned m = 0; m < (1u << n); ++m) {
    NodeSet s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const NodeSet& p, const NodeSet& q) {
    return p.size() != q.size() ? p.size() < q.size() : p < q;
  });
  std::vector<Perm> invols;
  for (const Perm& p : diagram_automorphisms(*a)) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (p[p[i]] != i) ok = false;
    if (ok) invols.push_back(p);
  }
  auto per_subset = [&](const NodeSet& x) {
    std::vector<Decoration> out;
    if (!is_finite_type(*a, x)) return out;
    Perm oi = opposition_involution(*a, x);
    for (const Perm& t : invols) {
      if (image(t, x) != x) continue;
      bool ok = true;
      for (int j : x)
        if (t[j] != oi[j]) ok = false;
      if (!ok) continue;
      Decoration d{a, x, t};
      if (f == Filter::GSat && !is_generalized_satake(d)) continue;
      if (f == Filter::Satake && !is_satake(d)) continue;
      out.push_back(std::move(d));
    }
    return out;
  };
  auto chunks = parallel_map(subsets, per_subset, parallel);
  std::vector<Decoration> all;
  for (auto& c : chunks)
    for (auto& d : c) all.push_back(std::move(d));
  return all;
}

Decoration act(const Perm& psi, const Decoration& d) {
  Decoration r{d.a, image(psi, d.x), Perm(d.size())};
  for (int i = 0; i < d.size(); ++i) r.tau[psi[i]] = psi[d.tau[i]];
  return r;
}

std::pair<NodeSet, std::vector<std::pair<int, int>>> decoration_key(const Decoration& d) {
  return {d.x, tau_pairs(d.tau)};
}

Decoration canonical(const Decoration& d, const std::vector<Perm>& auts) {
  Decoration best = d;
  auto bk = decoration_key(d);
  for (const Perm& psi : auts) {
    Decoration c = act(psi, d);
    auto k = decoration_key(c);
    if (k < bk) {
      bk = std::move(k);
      best = std::move(c);
    }
  }
  return best;
}

std::vector<Decoration> orbit_classes(const std::vector<Decoration>& ds) {
  if (ds.empty()) return {};
  std::vector<Perm> auts = diagram_automorphisms(*ds[0].a);
  std::map<std::pair<NodeSet, std::vector<std::pair<int, int>>>, Decoration> reps;
  for (const Decoration& d : ds) {
    Decoration c = canonical(d, auts);
    reps.emplace(decoration_key(c), c);
  }
  std::vector<Decoration> out;
  for (auto& [k, d] : reps) out.push_back(d);
  return out;
}

bool check_components_lemma(const Decoration& d) {
  const CartanMatrix& a = *d.a;
  for (int i = 0; i < a.size(); ++i) {
    if (contains(d.x, i)) continue;
    int t = d.tau[i];
    NodeSet z;
    for (const NodeSet& c : components(a, set_union(d.x, set_union({i}, {t}))))
      if (contains(c, i) || contains(c, t)) z = set_union(z, c);
    if (image(d.tau, z) != z) return false;
    NodeSet xz;
    std::set_intersection(d.x.begin(), d.x.end(), z.begin(), z.end(), std::back_inserter(xz));
    Perm oi = opposition_involution(a, xz);
    for (int j : xz)
      if (d.tau[j] != oi[j]) return false;
    bool connected = components(a, z).size() == 1;
    bool a1a1 = z.size() == 2 && t != i && a(i, t) == 0;
    if (!connected && !a1a1) return false;
  }
  return true;
}

bool check_theta_tau_identity(const Decoration& d) {
  int n = d.size();
  IMat t(n, n);
  for (int i = 0; i < n; ++i) t(d.tau[i], i) = 1;
  IMat id = IMat::identity(n);
  IMat s = sigma_matrix(d);
  IMat theta(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) theta(i, j) = -s(i, j);
  IMat lhs = (theta - id) * (t - id);
  IMat wx = longest_element(*d.a, d.x).matrix;
  return lhs == IMat(n, n) && (wx - id) * (t - id) == IMat(n, n);
}

bool check_wX_formula(const Decoration& d) {
  const CartanMatrix& a = *d.a;
  int n = a.size();
  int m = static_cast<int>(d.x.size());
  IMat wx = longest_element(a, d.x).matrix;
  QMat ax(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) ax(k, l) = Rational(static_cast<long>(a(d.x[k], d.x[l])));
  auto inv = m ? inverse(ax.transpose()) : std::optional<QMat>(QMat());
  if (!inv) return false;
  for (int i = 0; i < n; ++i) {
    if (contains(d.x, i)) continue;
    IVec lam = add(unit(n, i), unit(n, d.tau[i]));
    IVec col = wx.col(i);
    for (int r = 0; r < n; ++r)
      if (!contains(d.x, r) && col[r] != (r == i ? 1 : 0)) return false;
    for (int l = 0; l < m; ++l) {
      // kappa_j = sum_k c_k h_{x_k} with c = (A_X^T)^{-1} e_l.
      Rational v = 0;
      for (int k = 0; k < m; ++k) v -= (*inv)(k, l) * Rational(static_cast<long>(pairing(a, lam, d.x[k])));
      if (v < 0 || v != Rational(static_cast<long>(col[d.x[l]]))) return false;
    }
  }
  return true;
}

namespace {

std::string restricted_C(int k) {
  if (k == 1) return "A1";
  if (k == 2) return "B2";
  return "C" + std::to_string(k);
}

}  // namespace

std::vector<TableRow> table_typeA(int n) {
  CartanPtr a = share(catalogue("A", n));
  int N = n + 1;
  std::vector<TableRow> rows;
  std::string an = "(A" + std::to_string(n) + ")^";
  if (n > 1) rows.push_back({an + "pl", make_decoration(a, {}), "A" + std::to_string(n), "n>1", {}});
  if (n > 1 && n % 2 == 1) {
    NodeSet x;
    for (int i = 0; i < n; i += 2) x.push_back(i);
    rows.push_back({an + "alt", make_decoration(a, x), "A" + std::to_string((n - 1) / 2), "n odd", {}});
  }
  for (int p = 0; p <= N; ++p) {
    if ((N - p) % 2 != 0) continue;
    std::vector<std::pair<int, int>> swaps;
    for (int i = 1; i < N - i; ++i) swaps.emplace_back(i - 1, N - i - 1);
    NodeSet x;
    for (int lab = (N - p) / 2 + 1; lab <= (N + p) / 2 - 1; ++lab) x.push_back(lab - 1);
    TableRow r;
    r.label = an + "rfl_" + std::to_string(p);
    r.dec = make_decoration(a, x, swaps);
    r.constraints = n == 1 ? "n=1, p in {0,2}" : "0<=p<=N, N-p even";
    if (p == N) {
      r.restricted = "Z0";
    } else if (p == 0) {
      r.restricted = restricted_C(N / 2);
      r.special = {N / 2 - 1};
    } else {
      r.restricted = "(B,C)" + std::to_string((N - p) / 2);
      r.special = {(N - p) / 2 - 1};
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace satake
