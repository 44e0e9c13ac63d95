#include "satake/theta.hpp"

#include <algorithm>

#include "satake/error.hpp"

namespace satake {

namespace {

void no_overflow(const Element& x, const TruncatedAlgebra& g, const char* what) {
  if (x.truncated) throw TruncationOverflow(2 * g.height(), what);
}

bool supported_in(const IVec& beta, const NodeSet& x) {
  for (int k = 0; k < static_cast<int>(beta.size()); ++k)
    if (beta[k] != 0 && !contains(x, k)) return false;
  return true;
}

// v in -Phi+ or zero.
bool neg_root_or_zero(const CartanMatrix& a, const IVec& v) {
  if (is_zero_vec(v)) return true;
  if (!is_nonpos(v)) return false;
  IVec p = neg(v);
  return roots(a, static_cast<int>(height(p))).contains(p);
}

}  // namespace

ThetaMap::ThetaMap(EnrichedDecoration e, AlgebraPtr g) : e_(std::move(e)), g_(std::move(g)) {
  const Decoration& d = e_.base;
  if (!(*d.a == g_->cartan())) throw Error(Errc::NotCompatible, "decoration and algebra use different Cartan matrices");
  require_compatible(d);
  if (e_.chi.empty()) e_.chi.assign(d.size(), GaussQ(1));
  if (static_cast<int>(e_.chi.size()) != d.size()) throw Error(Errc::InvalidCharacter, "chi has the wrong size");
  for (const auto& c : e_.chi)
    if (c.is_zero()) throw Error(Errc::InvalidCharacter, "chi vanishes on a simple root");
  word_ = longest_element(*d.a, d.x).word;
  sigma_ = sigma_matrix(d);
  cols_.resize(g_->dim());
}

GaussQ ThetaMap::chi(const IVec& sd) const { return chi_of(e_, sd); }

Element ThetaMap::tau(const Element& x) const {
  const TruncatedAlgebra& g = *g_;
  const Perm& t = e_.base.tau;
  Element out = g.zero();
  out.truncated = x.truncated;
  for (int k = 0; k < g.dim(); ++k) {
    if (x.c[k].is_zero()) continue;
    int d = g.degree_of_index(k);
    if (d < 0) {
      out.c[g.h_offset() + t[k - g.h_offset()]] += x.c[k];
      continue;
    }
    bool positive = k >= g.h_offset();
    const Degree& dg = g.degrees()[d];
    Word w = dg.words[k - (positive ? dg.pos : dg.neg)];
    for (int& i : w) i = t[i];
    Element y = g.word(w, positive);
    y *= x.c[k];
    out += y;
  }
  return out;
}

Element ThetaMap::omega(const Element& x) const {
  const TruncatedAlgebra& g = *g_;
  Element out = g.zero();
  out.truncated = x.truncated;
  for (int k = 0; k < g.dim(); ++k) {
    if (x.c[k].is_zero()) continue;
    int d = g.degree_of_index(k);
    if (d < 0) {
      out.c[k] = -x.c[k];
      continue;
    }
    const Degree& dg = g.degrees()[d];
    GaussQ s = (dg.height % 2 == 0) ? x.c[k] : -x.c[k];
    if (k < g.h_offset()) out.c[dg.pos + (k - dg.neg)] += s;
    else out.c[dg.neg + (k - dg.pos)] += s;
  }
  return out;
}

Element ThetaMap::exp_ad(const SparseOp& op, const IVec& w, const Element& x, bool negate) const {
  const TruncatedAlgebra& g = *g_;
  Element out = x;
  Element term = x;
  int cap = 4 * g.height() + 8;
  for (int k = 1; k <= cap; ++k) {
    term = g.apply(op, w, term);
    no_overflow(term, g, "triple exponential leaves the window");
    if (term.is_zero()) return out;
    GaussQ c(Rational(negate ? -1 : 1, k));
    term *= c;
    out += term;
  }
  throw TruncationOverflow(2 * g.height(), "exponential series did not terminate");
}

Element ThetaMap::ad_n(int j, const Element& x) const {
  const TruncatedAlgebra& g = *g_;
  IVec u = unit(g.rank(), j);
  Element y = exp_ad(g.ad_e(j), u, x, false);
  y = exp_ad(g.ad_f(j), neg(u), y, true);
  return exp_ad(g.ad_e(j), u, y, false);
}

Element ThetaMap::ad_nX(const Element& x) const {
  Element y = x;
  for (int t = static_cast<int>(word_.size()) - 1; t >= 0; --t) y = ad_n(word_[t], y);
  return y;
}

const std::optional<std::vector<GaussQ>>& ThetaMap::column(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (cols_[k]) return *cols_[k];
  }
  const TruncatedAlgebra& g = *g_;
  std::optional<std::vector<GaussQ>> col;
  try {
    Element y = ad_nX(omega(tau(g.basis(k))));
    for (int r = 0; r < g.dim(); ++r)
      if (!y.c[r].is_zero()) y.c[r] *= chi(g.weight(r));
    col = std::move(y.c);
  } catch (const TruncationOverflow&) {
    col = std::nullopt;
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!cols_[k]) cols_[k] = std::make_unique<std::optional<std::vector<GaussQ>>>(std::move(col));
  return *cols_[k];
}

Element ThetaMap::operator()(const Element& x) const {
  const TruncatedAlgebra& g = *g_;
  Element out = g.zero();
  out.truncated = x.truncated;
  for (int k = 0; k < g.dim(); ++k) {
    if (x.c[k].is_zero()) continue;
    const auto& col = column(k);
    if (!col) throw TruncationOverflow(2 * g.height(), "theta image leaves the window");
    for (int r = 0; r < g.dim(); ++r)
      if (!(*col)[r].is_zero()) out.c[r] += x.c[k] * (*col)[r];
  }
  return out;
}

Element b_generator(const ThetaMap& th, int i) {
  const TruncatedAlgebra& g = th.algebra();
  if (contains(th.dec().x, i)) return g.f(i);
  return g.f(i) + th(g.f(i));
}

Element b_word(const ThetaMap& th, const Word& w) {
  const TruncatedAlgebra& g = th.algebra();
  Element x = b_generator(th, w.back());
  for (int t = static_cast<int>(w.size()) - 2; t >= 0; --t) {
    x = g.bracket(b_generator(th, w[t]), x);
    no_overflow(x, g, "b-word leaves the window");
  }
  return x;
}

std::vector<std::vector<Int>> onsager_coeffs(int M) {
  if (M < 1) throw std::invalid_argument("onsager_coeffs needs M >= 1");
  std::vector<std::vector<Int>> p(M / 2 + 1, std::vector<Int>(M + 1, 0));
  for (int m = 0; m <= M; ++m) p[0][m] = -1;
  for (int r = 1; 2 * r <= M; ++r)
    for (int m = 2 * r; m <= M; ++m) p[r][m] = p[r][m - 1] + static_cast<Int>(m - 1) * (M + 1 - m) * p[r - 1][m - 2];
  return p;
}

const char* to_string(SerreCase c) {
  switch (c) {
    case SerreCase::I: return "i";
    case SerreCase::II: return "ii";
    case SerreCase::III: return "iii";
    case SerreCase::IV: return "iv";
  }
  return "?";
}

SerreReport serre_deviation(const ThetaMap& th, int i, int j, bool throw_on_mismatch) {
  const TruncatedAlgebra& g = th.algebra();
  const CartanMatrix& a = g.cartan();
  const Decoration& d = th.dec();
  int n = a.size();
  if (i == j) throw std::invalid_argument("serre_deviation needs i != j");
  SerreReport rep;
  rep.i = i;
  rep.j = j;
  rep.M = static_cast<int>(1 - a(i, j));
  Element bi = b_generator(th, i), bj = b_generator(th, j);
  auto ad_bi = [&](Element x, int times) {
    for (int t = 0; t < times; ++t) {
      x = g.bracket(bi, x);
      no_overflow(x, g, "Serre deviation leaves the window");
    }
    return x;
  };
  rep.computed = ad_bi(bj, rep.M);

  IVec ai = unit(n, i), aj = unit(n, j);
  IVec sai = th.sigma().col(i);
  IVec c1 = add(sub(ai, sai), aj);
  IVec c2 = sub(aj, sai);
  GaussQ chi_i = th.chi(ai), chi_j = th.chi(aj);
  Int aij = a(i, j);
  Element pred = g.zero();
  if (neg_root_or_zero(a, c1)) {
    rep.which = SerreCase::I;
    bool zero = is_zero_vec(c1);
    if (!zero && aij == -1) {
      rep.subcase = "c<0,a=-1";
      Element t = g.bracket(th(g.f(i)), g.bracket(g.f(i), g.f(j)));
      t *= GaussQ(1 + zeta_X(a, d.x, ai));
      pred = t;
    } else if (zero && aij == -3) {
      rep.subcase = "c=0,a=-3";
      pred = g.e(j);
      pred *= GaussQ(-18) * chi_i.pow(-2);
    } else if (zero && aij == -1) {
      rep.subcase = "c=0,a=-1";
      pred = g.h(i) + g.h(i) + g.h(j);
      pred *= -chi_i.inverse();
    } else {
      rep.subcase = "other";
    }
  } else if (neg_root_or_zero(a, c2) && !contains(d.x, j)) {
    rep.which = SerreCase::II;
    bool zero = is_zero_vec(c2);
    if (!zero && aij == 0) {
      rep.subcase = "c<0,a=0";
      Element t = g.bracket(th(g.f(i)), g.f(j));
      t *= GaussQ(1) + GaussQ(zeta_X(a, d.x, ai)) * th.chi(sub(ai, aj));
      pred = t;
    } else if (zero && aij == 0) {
      rep.subcase = "c=0,a=0";
      Element hi = g.h(i), hj = g.h(j);
      hi *= chi_j.inverse();
      hj *= chi_i.inverse();
      pred = hi - hj;
    } else if (zero && aij == -1) {
      rep.subcase = "c=0,a=-1";
      pred = bi;
      pred *= GaussQ(2) * (chi_i.inverse() + chi_j.inverse());
    } else {
      rep.subcase = "other";
    }
  } else if (sai == ai && !contains(d.x, j)) {
    rep.which = SerreCase::III;
    rep.subcase = "M=" + std::to_string(rep.M);
    auto p = onsager_coeffs(rep.M);
    for (int r = 1; 2 * r <= rep.M; ++r) {
      Element t = ad_bi(bj, rep.M - 2 * r);
      t *= GaussQ(Rational(static_cast<long>(p[r][rep.M]))) * chi_i.pow(-r);
      pred += t;
    }
  } else {
    rep.which = SerreCase::IV;
  }
  no_overflow(pred, g, "closed form leaves the window");
  rep.predicted = pred;
  rep.match = rep.computed == rep.predicted;
  if (!rep.match && throw_on_mismatch)
    throw Error(Errc::CaseMismatch, "ad(b_" + a.label(i) + ")^" + std::to_string(rep.M) + "(b_" + a.label(j) +
                                        ") disagrees with case " + to_string(rep.which) + " " + rep.subcase);
  return rep;
}

std::vector<Element> h_theta(const ThetaMap& th, int sign) {
  const TruncatedAlgebra& g = th.algebra();
  int n = g.rank();
  Mat<GaussQ> m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& col = th.column(g.h_offset() + i);
    if (!col) throw TruncationOverflow(2 * g.height(), "theta on h leaves the window");
    for (int r = 0; r < n; ++r) m(r, i) = (*col)[g.h_offset() + r];
    m(i, i) -= GaussQ(sign);
  }
  std::vector<Element> out;
  for (const auto& v : nullspace(m)) {
    Element x = g.zero();
    for (int i = 0; i < n; ++i) x.c[g.h_offset() + i] = v[i];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Element> n_plus_X(const ThetaMap& th) {
  const TruncatedAlgebra& g = th.algebra();
  std::vector<Element> out;
  for (const auto& dg : g.degrees())
    if (supported_in(dg.beta, th.dec().x))
      for (int k = 0; k < dg.dim(); ++k) out.push_back(g.basis(dg.pos + k));
  return out;
}

std::vector<Element> n_plus_theta(const ThetaMap& th, int max_height) {
  const TruncatedAlgebra& g = th.algebra();
  std::vector<Element> out;
  for (const auto& dg : g.degrees())
    if (dg.height <= max_height && !supported_in(dg.beta, th.dec().x))
      for (int k = 0; k < dg.dim(); ++k) out.push_back(g.basis(dg.pos + k));
  return out;
}

namespace {

int rank_of(const std::vector<const std::vector<Element>*>& parts, int dim) {
  Subspace<GaussQ> s(dim);
  for (const auto* p : parts)
    for (const auto& x : *p) s.add(x.c);
  return s.dim();
}

// Subspace closed under ad(e_j), j in X, and ad(h^theta).
class Closure {
 public:
  Closure(const ThetaMap& th, std::vector<Element> htheta) : th_(th), g_(th.algebra()), s_(g_.dim()), ht_(std::move(htheta)) {}

  void add(const Element& x) {
    no_overflow(x, g_, "filtration leaves the window");
    if (s_.add(x.c)) {
      list_.push_back(x);
      work_.push_back(x);
    }
  }
  void close() {
    while (!work_.empty()) {
      Element w = std::move(work_.back());
      work_.pop_back();
      for (int j : th_.dec().x) add(g_.apply(g_.ad_e(j), unit(g_.rank(), j), w));
      for (const Element& h : ht_) add(g_.bracket(h, w));
    }
  }
  const std::vector<Element>& list() const { return list_; }
  const Subspace<GaussQ>& space() const { return s_; }
  int dim() const { return s_.dim(); }

 private:
  const ThetaMap& th_;
  const TruncatedAlgebra& g_;
  Subspace<GaussQ> s_;
  std::vector<Element> ht_, list_, work_;
};

int max_positive_height(const TruncatedAlgebra& g, const std::vector<Element>& xs) {
  int m = 0;
  for (const auto& x : xs)
    for (int k = g.h_offset() + g.rank(); k < g.dim(); ++k)
      if (!x.c[k].is_zero()) m = std::max(m, g.degrees()[g.degree_of_index(k)].height);
  return m;
}

// b_w for every chosen basis word, memoized along the word tails.
std::vector<std::vector<Element>> all_b_words(const ThetaMap& th, int max_len) {
  const TruncatedAlgebra& g = th.algebra();
  std::vector<std::vector<Element>> out(g.degrees().size());
  std::vector<Element> b;
  for (int i = 0; i < g.rank(); ++i) b.push_back(b_generator(th, i));
  for (int d = 0; d < static_cast<int>(g.degrees().size()); ++d) {
    const Degree& dg = g.degrees()[d];
    if (dg.height > max_len) continue;
    for (int s = 0; s < dg.dim(); ++s) {
      if (dg.height == 1) {
        out[d].push_back(b[dg.head[s]]);
        continue;
      }
      IVec down = dg.beta;
      --down[dg.head[s]];
      int t = *g.degree_index(down);
      Element x = g.bracket(b[dg.head[s]], out[t][dg.tail[s]]);
      no_overflow(x, g, "b-word leaves the window");
      out[d].push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

KReport k_check(const ThetaMap& th, int d_max) {
  const TruncatedAlgebra& g = th.algebra();
  const CartanMatrix& a = g.cartan();
  const Decoration& dec = th.dec();
  int n = a.size();
  int max_ht = 0;
  for (const auto& dg : g.degrees()) max_ht = std::max(max_ht, dg.height);
  int max_m = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) max_m = std::max<int>(max_m, static_cast<int>(1 - a(i, j)));
  if (d_max <= 0) d_max = g.complete() ? std::max(max_ht, max_m + 1) : std::max(2, g.height() / 2);

  KReport rep;
  auto hp = h_theta(th, 1), hm = h_theta(th, -1);
  auto nx = n_plus_X(th);
  auto bw = all_b_words(th, std::min(d_max, max_ht));
  std::vector<Element> b;
  for (int i = 0; i < n; ++i) b.push_back(b_generator(th, i));

  Closure F(th, hp);
  for (const auto& x : nx) F.add(x);
  for (const auto& x : hp) F.add(x);
  F.close();
  for (int d = 1; d <= d_max; ++d) {
    std::vector<Element> prev = F.list();
    for (int i = 0; i < n; ++i) {
      F.add(b[i]);
      for (const auto& w : prev) F.add(g.bracket(b[i], w));
    }
    F.close();

    KLevel lv;
    lv.d = d;
    lv.dim_F = F.dim();
    Subspace<GaussQ> D(g.dim());
    for (const auto& x : nx) D.add(x.c);
    for (const auto& x : hp) D.add(x.c);
    for (std::size_t k = 0; k < bw.size(); ++k)
      if (g.degrees()[k].height <= d)
        for (const auto& x : bw[k]) D.add(x.c);
    lv.dim_D = D.dim();
    bool inside = true;
    for (const auto& row : D.basis())
      if (!F.space().contains(row)) inside = false;
    lv.F_equals_D = inside && lv.dim_D == lv.dim_F;

    int mh = max_positive_height(g, F.list());
    auto nt = n_plus_theta(th, mh);
    int r = rank_of({&F.list(), &hm, &nt}, g.dim());
    lv.iwasawa_direct = r == lv.dim_F + static_cast<int>(hm.size() + nt.size());
    lv.iwasawa_size = lv.dim_F == static_cast<int>(nx.size() + hp.size()) + g.dim_n_minus(d);
    rep.spanning = rep.spanning && lv.F_equals_D;
    rep.iwasawa = rep.iwasawa && lv.iwasawa_direct && lv.iwasawa_size;
    rep.levels.push_back(lv);
  }
  rep.levels_checked = d_max;

  // (b) k meets g_{-beta} + g_{sigma beta} in dim g_beta.
  for (const auto& dg : g.degrees()) {
    if (dg.height > d_max || supported_in(dg.beta, dec.x)) continue;
    IVec sb = th.sigma().apply(dg.beta);
    if (height(sb) > g.height()) continue;
    std::vector<Element> S;
    for (int k = 0; k < dg.dim(); ++k) S.push_back(g.basis(dg.neg + k));
    if (auto t = g.degree_index(sb))
      for (int k = 0; k < g.degrees()[*t].dim(); ++k) S.push_back(g.basis(g.degrees()[*t].pos + k));
    int r = rank_of({&F.list(), &S}, g.dim());
    int meet = F.dim() + static_cast<int>(S.size()) - r;
    if (meet != dg.dim()) rep.pseudo_fixed = false;
  }

  // (c) deviations land in n+_X + h^theta + span{b_w : alpha_w < lambda_ij}.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      SerreReport sr = serre_deviation(th, i, j, false);
      // weight of ad(b_i)^M(b_j)
      IVec lam = unit(n, j);
      lam[i] += sr.M;
      Subspace<GaussQ> allowed(g.dim());
      for (const auto& x : nx) allowed.add(x.c);
      for (const auto& x : hp) allowed.add(x.c);
      for (std::size_t k = 0; k < bw.size(); ++k) {
        IVec diff = sub(lam, g.degrees()[k].beta);
        if (!is_nonneg(diff) || is_zero_vec(diff)) continue;
        for (const auto& x : bw[k]) allowed.add(x.c);
      }
      if (!allowed.contains(sr.computed.c)) rep.deviations_ok = false;
    }

  // n+ cap theta(n^-) is n+_theta degree by degree.
  for (const auto& dg : g.degrees()) {
    IVec sb = th.sigma().apply(dg.beta);
    if (supported_in(dg.beta, dec.x) || height(sb) > g.height()) continue;
    std::vector<Element> imgs;
    auto t = g.degree_index(sb);
    bool overflow = false;
    for (int k = 0; k < dg.dim(); ++k) {
      const auto& col = th.column(dg.neg + k);
      if (!col) {
        overflow = true;
        break;
      }
      Element y{*col, false};
      for (int r = 0; r < g.dim(); ++r)
        if (!y.c[r].is_zero() && (!t || r < g.degrees()[*t].pos || r >= g.degrees()[*t].pos + g.degrees()[*t].dim()))
          rep.n_plus_split = false;
      imgs.push_back(std::move(y));
    }
    if (!overflow && rank_of({&imgs}, g.dim()) != dg.dim()) rep.n_plus_split = false;
  }

  if (g.complete() && d_max >= max_ht) {
    auto nt = n_plus_theta(th, max_ht);
    rep.total_ok = F.dim() + static_cast<int>(hm.size() + nt.size()) == g.dim() &&
                   rank_of({&F.list(), &hm, &nt}, g.dim()) == g.dim();
    rep.iwasawa = rep.iwasawa && rep.total_ok;
  }
  return rep;
}

KPrimeReport kprime_split(const ThetaMap& th) {
  const TruncatedAlgebra& g = th.algebra();
  if (!g.complete()) throw Error(Errc::BeyondBruteForce, "k' split needs a complete (finite type) algebra");
  int n = g.rank();
  int max_ht = 0;
  for (const auto& dg : g.degrees()) max_ht = std::max(max_ht, dg.height);

  auto hp = h_theta(th, 1);
  Closure F(th, hp);
  for (const auto& x : n_plus_X(th)) F.add(x);
  for (const auto& x : hp) F.add(x);
  F.close();
  std::vector<Element> b;
  for (int i = 0; i < n; ++i) b.push_back(b_generator(th, i));
  for (int d = 1; d <= max_ht + 4; ++d) {
    int before = F.dim();
    std::vector<Element> prev = F.list();
    for (int i = 0; i < n; ++i) {
      F.add(b[i]);
      for (const auto& w : prev) F.add(g.bracket(b[i], w));
    }
    F.close();
    if (F.dim() == before && d > 1) break;
  }
  const auto& k = F.list();
  Subspace<GaussQ> kp(g.dim());
  for (std::size_t p = 0; p < k.size(); ++p)
    for (std::size_t q = p + 1; q < k.size(); ++q) kp.add(g.bracket(k[p], k[q]).c);

  OrbitReport orb = special_orbits(th.dec());
  KPrimeReport rep;
  rep.dim_k = F.dim();
  rep.dim_kprime = kp.dim();
  rep.expected_codim = static_cast<int>(orb.I_diff.size() + orb.I_nsf.size());
  std::vector<Element> comp;
  for (int i : orb.I_diff) comp.push_back(g.h(i) - g.h(th.dec().tau[i]));
  for (int j : orb.I_nsf) comp.push_back(b[j]);
  Subspace<GaussQ> all = kp;
  for (const auto& x : comp) all.add(x.c);
  bool in_k = true;
  for (const auto& x : comp)
    if (!F.space().contains(x.c)) in_k = false;
  rep.complement_ok = in_k && all.dim() == rep.dim_k && all.dim() == rep.dim_kprime + static_cast<int>(comp.size());
  return rep;
}

std::vector<Element> fixed_points(const ThetaMap& th) {
  const TruncatedAlgebra& g = th.algebra();
  if (!g.complete()) throw Error(Errc::BeyondBruteForce, "fixed points need a complete (finite type) algebra");
  int N = g.dim();
  Mat<GaussQ> m(N, N);
  for (int k = 0; k < N; ++k) {
    const auto& col = th.column(k);
    if (!col) throw TruncationOverflow(2 * g.height(), "theta leaves the window");
    for (int r = 0; r < N; ++r) m(r, k) = (*col)[r];
    m(k, k) -= GaussQ(1);
  }
  std::vector<Element> out;
  for (auto& v : nullspace(m)) out.push_back(Element{std::move(v), false});
  return out;
}

}  // namespace satake
