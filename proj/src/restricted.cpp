#include "satake/restricted.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "satake/error.hpp"

namespace satake {

Sigma sigma(const Decoration& d) {
  require_compatible(d);
  return {d, sigma_matrix(d)};
}

QVec bar(const Sigma& s, const QVec& lambda) {
  QVec out = to_q(s.matrix).apply(lambda);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (out[k] + lambda[k]) / 2;
  return out;
}

QVec bar(const Sigma& s, const IVec& lambda) { return bar(s, to_q(lambda)); }

namespace {

NodeSet x_of(const Decoration& d, int i) { return set_union(d.x, set_union({i}, {d.tau[i]})); }

bool is_zero_q(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

QVec scale(QVec v, const Rational& c) {
  for (auto& x : v) x *= c;
  return v;
}

}  // namespace

std::optional<QVec> pibar_coords(const RestrictedRootSystem& r, const QVec& v) {
  int n = r.dec.size();
  int m = static_cast<int>(r.simple.size());
  QMat p(n, m);
  for (int k = 0; k < m; ++k) p.set_col(k, r.simple[k]);
  auto c = solve(p, v);
  if (!c) return std::nullopt;
  if (p.apply(*c) != v) return std::nullopt;
  return c;
}

RestrictedRootSystem restricted_system(const Decoration& d, int h) {
  Sigma s = sigma(d);
  const CartanMatrix& a = *d.a;
  RestrictedRootSystem r;
  r.dec = d;
  r.sigma = s.matrix;
  r.I_star = default_I_star(d);
  for (int i : r.I_star) {
    r.simple.push_back(bar(s, unit(a.size(), i)));
    if (is_finite_type(a, x_of(d, i))) r.tilde_I.push_back(i);
  }
  int m = static_cast<int>(r.I_star.size());
  r.gram = QMat(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) r.gram(k, l) = form(a, r.simple[k], r.simple[l]);

  // Enough height to see 3 alpha_bar_i: a positive preimage lambda outside
  // Phi_X has sigma(lambda) > 0, so ht(lambda) <= k ht(alpha_i + sigma alpha_i).
  int hr = h;
  for (int i : r.I_star) hr = std::max<int>(hr, 3 * height(add(unit(a.size(), i), s.matrix.col(i))));
  RootSet phi = roots(a, hr);
  r.complete = phi.complete;
  r.height_bound = phi.complete ? 0 : hr;
  std::set<QVec> seen;
  for (const IVec& v : phi.all()) {
    QVec b = bar(s, v);
    if (is_zero_q(b)) continue;
    if (seen.insert(b).second) r.roots.push_back(b);
  }
  std::sort(r.roots.begin(), r.roots.end());
  for (const QVec& b : r.roots) {
    auto c = pibar_coords(r, b);
    if (!c) throw Error(Errc::NotCompatible, "restricted root outside the span of Pi_bar");
    r.coords.push_back(*c);
  }
  for (int k = 0; k < m; ++k) {
    std::vector<int> ks;
    for (int mult = 1; mult <= 3; ++mult)
      if (seen.count(scale(r.simple[k], Rational(mult)))) ks.push_back(mult);
    r.multiples.push_back(ks);
  }
  return r;
}

WeylElement tilde_s(const Decoration& d, int i) {
  NodeSet xi = x_of(d, i);
  if (!is_finite_type(*d.a, xi)) throw Error(Errc::NotFiniteType, "X[i] is not of finite type");
  return longest_element(*d.a, d.x) * longest_element(*d.a, xi);
}

bool Battery::all_equal() const {
  for (bool f : flags)
    if (f != flags[0]) return false;
  return true;
}

Battery gsat_battery(const Decoration& d) {
  Sigma sg = sigma(d);
  const CartanMatrix& a = *d.a;
  int n = a.size();
  IMat id = IMat::identity(n);
  RestrictedRootSystem r;
  r.dec = d;
  r.I_star = default_I_star(d);
  for (int i : r.I_star) r.simple.push_back(bar(sg, unit(n, i)));
  auto phix = positive_roots_finite(a, d.x);
  std::set<IVec> phix_set(phix.begin(), phix.end());
  std::vector<IMat> sx;
  for (int j : d.x) sx.push_back(reflection_matrix(a, j));

  Battery b;
  b.flags.fill(true);
  b.flags[4] = is_generalized_satake(d);
  QMat sq = to_q(sg.matrix);
  for (std::size_t k = 0; k < r.I_star.size(); ++k) {
    int i = r.I_star[k];
    if (!is_finite_type(a, x_of(d, i))) continue;
    WeylElement t = tilde_s(d, i);
    const IMat& s = t.matrix;
    Word rev = t.word;
    std::reverse(rev.begin(), rev.end());
    IMat sinv = from_word(a, rev).matrix;

    if (s * sg.matrix != sg.matrix * s) b.flags[0] = false;
    if (s * s != id) b.flags[1] = false;
    for (const IMat& m : sx) {
      IMat c = s * m * sinv;
      if (std::find(sx.begin(), sx.end(), c) == sx.end()) b.flags[2] = false;
      if (!in_parabolic(a, c, d.x)) b.flags[7] = false;
    }
    for (const IVec& v : phix)
      if (!phix_set.count(s.apply(v))) b.flags[3] = false;
    QMat sqm = to_q(s);
    for (const QVec& v : r.simple) {
      QVec w = sqm.apply(v);
      if (sq.apply(w) != w) b.flags[5] = false;
    }
    if (sqm.apply(r.simple[k]) != scale(r.simple[k], Rational(-1))) b.flags[6] = false;
  }
  return b;
}

namespace {

int angle_order(const QMat& g, int k, int l) {
  if (k == l) return 1;
  Rational disc = g(k, k) * g(l, l) - g(k, l) * g(k, l);
  if (sgn(g(k, k)) <= 0 || sgn(g(l, l)) <= 0 || sgn(disc) <= 0) return 0;
  Rational c = g(k, l) * g(k, l) / (g(k, k) * g(l, l));
  if (c == 0) return 2;
  if (c == Rational(1, 4)) return 3;
  if (c == Rational(1, 2)) return 4;
  if (c == Rational(3, 4)) return 6;
  return -1;
}

// Matrix of an endomorphism of V^sigma in the Pi_bar basis.
std::optional<QMat> restrict_to(const RestrictedRootSystem& r, const QMat& w) {
  int m = static_cast<int>(r.simple.size());
  QMat out(m, m);
  for (int k = 0; k < m; ++k) {
    auto c = pibar_coords(r, w.apply(r.simple[k]));
    if (!c) return std::nullopt;
    out.set_col(k, *c);
  }
  return out;
}

QMat pibar_reflection(const RestrictedRootSystem& r, const QVec& beta_coords) {
  int m = static_cast<int>(r.simple.size());
  QVec gb = r.gram.apply(beta_coords);  // (alpha_bar_k, beta)
  Rational bb = 0;
  for (int k = 0; k < m; ++k) bb += beta_coords[k] * gb[k];
  QMat s = QMat::identity(m);
  for (int k = 0; k < m; ++k) {
    Rational c = 2 * gb[k] / bb;
    for (int l = 0; l < m; ++l) s(l, k) -= c * beta_coords[l];
  }
  return s;
}

// Order of x*y; 0 past the cap, which is an error unless the angle says infinite.
template <class M>
int pair_order(const M& x, const M& y, int angle, int cap) {
  int o = element_order(x * y, cap);
  if (o == 0 && angle != 0) throw Error(Errc::OrderCapExceeded, "order cap exceeded for a finite-angle pair");
  return o;
}

}  // namespace

bool CoxeterReport::consistent() const { return on_V == restricted && restricted == reflections && reflections == angles; }

CoxeterReport coxeter_report(const Decoration& d, int order_cap) {
  RestrictedRootSystem r = restricted_system(d, 1);
  CoxeterReport rep;
  rep.tilde_I = r.tilde_I;
  std::vector<int> pos;
  for (int i : r.tilde_I) pos.push_back(static_cast<int>(std::find(r.I_star.begin(), r.I_star.end(), i) - r.I_star.begin()));
  int t = static_cast<int>(pos.size());
  std::vector<IMat> sv;
  std::vector<std::optional<QMat>> sr;
  std::vector<QMat> sb;
  for (int k = 0; k < t; ++k) {
    sv.push_back(tilde_s(d, r.tilde_I[k]).matrix);
    sr.push_back(restrict_to(r, to_q(sv.back())));
    QVec e(r.simple.size(), Rational(0));
    e[pos[k]] = 1;
    sb.push_back(pibar_reflection(r, e));
  }
  auto make = [&] { return CoxeterMatrix(t, std::vector<int>(t, 1)); };
  rep.on_V = make();
  rep.restricted = make();
  rep.reflections = make();
  rep.angles = make();
  for (int k = 0; k < t; ++k)
    for (int l = 0; l < t; ++l) {
      if (k == l) continue;
      int ang = angle_order(r.gram, pos[k], pos[l]);
      rep.angles[k][l] = ang;
      rep.on_V[k][l] = pair_order(sv[k], sv[l], ang, order_cap);
      rep.restricted[k][l] = (sr[k] && sr[l]) ? pair_order(*sr[k], *sr[l], ang, order_cap) : -1;
      rep.reflections[k][l] = pair_order(sb[k], sb[l], ang, order_cap);
    }
  return rep;
}

CoxeterMatrix restricted_coxeter_matrix(const Decoration& d, int order_cap) {
  if (!is_generalized_satake(d)) throw Error(Errc::NotGeneralizedSatake, "Coxeter matrix needs a generalized Satake diagram");
  return coxeter_report(d, order_cap).on_V;
}

ThreeGroups three_groups(const Decoration& d, std::size_t budget, bool parallel) {
  const CartanMatrix& a = *d.a;
  if (!is_finite_type(a, all_nodes(a))) throw Error(Errc::BeyondBruteForce, "W-bar needs a finite Weyl group");
  RestrictedRootSystem r = restricted_system(d, 1);
  ThreeGroups g;

  std::vector<IMat> w = enumerate_weyl_group(a, budget, parallel);
  std::set<std::vector<Rational>> images;
  std::size_t kernel = 0;
  bool kernel_in_wx = true;
  int m = static_cast<int>(r.simple.size());
  QMat idm = QMat::identity(m);
  for (const IMat& x : w) {
    if (x * r.sigma != r.sigma * x) continue;
    auto res = restrict_to(r, to_q(x));
    if (!res) continue;
    images.insert(res->data());
    if (*res == idm) {
      ++kernel;
      if (!in_parabolic(a, x, d.x)) kernel_in_wx = false;
    }
  }
  g.w_bar = images.size();
  g.kernel_is_W_X = kernel_in_wx && kernel == group_order(
      [&] {
        std::vector<IMat> gx;
        for (int j : d.x) gx.push_back(reflection_matrix(a, j));
        return gx;
      }(),
      budget, parallel);

  std::vector<QMat> refl;
  std::set<std::vector<Rational>> seen;
  for (std::size_t k = 0; k < r.roots.size(); ++k) {
    if (sgn(form(a, r.roots[k], r.roots[k])) <= 0) continue;
    QMat s = pibar_reflection(r, r.coords[k]);
    if (seen.insert(s.data()).second) refl.push_back(s);
  }
  bool integral = true;
  for (const QMat& s : refl)
    for (const auto& v : s.data())
      if (v.get_den() != 1) integral = false;
  if (integral) {
    std::vector<IMat> ir;
    for (const QMat& s : refl) {
      IMat t(s.rows(), s.cols());
      for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) t(i, j) = s(i, j).get_num().get_si();
      ir.push_back(t);
    }
    g.w_phi = group_order(ir, budget, parallel);
  } else {
    g.w_phi = group_order(refl, budget, parallel);
  }

  std::vector<IMat> st;
  std::vector<QMat> sr;
  bool restrictable = true;
  for (int i : r.tilde_I) {
    st.push_back(tilde_s(d, i).matrix);
    auto res = restrict_to(r, to_q(st.back()));
    if (res) sr.push_back(*res);
    else restrictable = false;
  }
  g.w_tilde = group_order(st, budget, parallel);
  g.w_tilde_res = restrictable ? group_order(sr, budget, parallel) : 0;
  return g;
}

namespace {

std::string join_names(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "x" : "") + parts[k];
  return s;
}

bool has(const std::vector<int>& v, int k) { return std::find(v.begin(), v.end(), k) != v.end(); }

// Returns the empty string when the component is not recognized.
std::string classify_component(const QMat& g, const std::vector<std::vector<int>>& mult) {
  int m = g.rows();
  for (int k = 0; k < m; ++k)
    if (sgn(g(k, k)) <= 0) return m == 1 ? "Z~0" : "";
  IMat c(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      Rational v = 2 * g(k, l) / g(k, k);
      if (v.get_den() != 1) return "";
      c(k, l) = v.get_num().get_si();
    }
  bool three = false;
  for (const auto& ks : mult)
    if (has(ks, 3)) three = true;
  if (three) {
    if (m == 1 && mult[0] == std::vector<int>{1, 2, 3}) return "(B,C)1+";
    if (m == 2) {
      IMat cat = catalogue_matrix("C~'", 1);
      if (auto p = find_isomorphism(c, cat)) {
        int shortn = (*p)[0] == 0 ? 0 : 1;
        int longn = 1 - shortn;
        if (mult[shortn] == std::vector<int>{1, 2, 3} && mult[longn] == std::vector<int>{1}) return "(C~',C~)1+";
      }
    }
    return "";
  }
  ComponentType t;
  try {
    validate_gcm(c);
    t = classify_matrix(c);
  } catch (const Error&) {
    return "";
  }
  if (t.family.empty()) return "";
  // x-marked catalogue positions
  NodeSet xs;
  for (int k = 0; k < static_cast<int>(t.nodes.size()); ++k)
    if (has(mult[t.nodes[k]], 2)) xs.push_back(k);
  if (xs.empty()) return t.name();
  const std::string& f = t.family;
  int n = t.rank;
  auto rk = std::to_string(n);
  if (f == "A" && n == 1) return "(B,C)1";
  if (f == "B" && xs == NodeSet{n - 1}) return "(B,C)" + rk;
  if (f == "B~" && xs == NodeSet{n}) return "(B~,B~v)" + rk;
  if (f == "C~" && n == 2 && xs == NodeSet{1}) return "(B~,B~v)2";
  if (f == "C~'" && xs == NodeSet{0}) return "(C~',C~)" + rk;
  if (f == "C~v" && xs == NodeSet{0, n}) return "(C~v,C~)" + rk;
  if (f == "C~v" && (xs == NodeSet{0} || xs == NodeSet{n})) return "(C~v,C~')" + rk;
  if (f == "A~" && n == 1 && xs.size() == 2) return "(C~v,C~)1";
  if (f == "A~" && n == 1 && xs.size() == 1) return "(C~v,C~')1";
  return "";
}

}  // namespace

RestrictedTypeLabel classify_restricted(const QMat& gram, const std::vector<std::vector<int>>& multiples) {
  RestrictedTypeLabel lab;
  lab.gram = gram;
  lab.multiples = multiples;
  int r = gram.rows();
  if (r == 0) {
    lab.name = "Z0";
    return lab;
  }
  IMat adj(r, r);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) adj(k, l) = (k == l) ? 2 : (is_zero(gram(k, l)) ? 0 : -1);
  std::vector<std::string> parts;
  NodeSet all(r);
  for (int k = 0; k < r; ++k) all[k] = k;
  CartanMatrix shape = validate_gcm_relaxed(adj);
  for (const NodeSet& comp : components(shape, all)) {
    int m = static_cast<int>(comp.size());
    QMat g(m, m);
    std::vector<std::vector<int>> mult;
    for (int k = 0; k < m; ++k) {
      mult.push_back(multiples[comp[k]]);
      for (int l = 0; l < m; ++l) g(k, l) = gram(comp[k], comp[l]);
    }
    std::string s = classify_component(g, mult);
    if (s.empty()) {
      lab.recognized = false;
      lab.name = "unrecognized";
      return lab;
    }
    parts.push_back(s);
  }
  lab.name = join_names(parts);
  return lab;
}

RestrictedTypeLabel restricted_type(const Decoration& d, int h) {
  if (!is_generalized_satake(d)) throw Error(Errc::NotGeneralizedSatake, "restricted type needs a generalized Satake diagram");
  RestrictedRootSystem r = restricted_system(d, h);
  return classify_restricted(r.gram, r.multiples);
}

}  // namespace satake
