#include "satake/lie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "satake/error.hpp"

namespace satake {

void SparseOp::add(int row, int col, const Rational& v) {
  if (!is_zero(v)) cols[col].emplace_back(row, v);
}

std::vector<GaussQ> SparseOp::apply(const std::vector<GaussQ>& x) const {
  std::vector<GaussQ> out(n);
  for (int c = 0; c < n; ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : cols[c]) out[r] += x[c] * v;
  }
  return out;
}

namespace {

void push_map(SparseOp& out, int c, const std::map<int, Rational>& acc) {
  for (const auto& [r, v] : acc)
    if (!is_zero(v)) out.cols[c].emplace_back(r, v);
}

}  // namespace

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  SparseOp out(b.n);
  for (int c = 0; c < b.n; ++c) {
    std::map<int, Rational> acc;
    for (const auto& [r, v] : b.cols[c])
      for (const auto& [r2, v2] : a.cols[r]) acc[r2] += v * v2;
    push_map(out, c, acc);
  }
  return out;
}

SparseOp operator-(const SparseOp& a, const SparseOp& b) {
  SparseOp out(a.n);
  for (int c = 0; c < a.n; ++c) {
    std::map<int, Rational> acc;
    for (const auto& [r, v] : a.cols[c]) acc[r] += v;
    for (const auto& [r, v] : b.cols[c]) acc[r] -= v;
    push_map(out, c, acc);
  }
  return out;
}

bool Element::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const GaussQ& z) { return z.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
  truncated = truncated || o.truncated;
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
  truncated = truncated || o.truncated;
  return *this;
}

Element& Element::operator*=(const GaussQ& s) {
  for (auto& z : c) z *= s;
  return *this;
}

AlgebraPtr TruncatedAlgebra::build(CartanPtr a, int h) {
  if (h < 1) throw std::invalid_argument("height bound must be at least 1");
  std::shared_ptr<TruncatedAlgebra> g(new TruncatedAlgebra());
  g->a_ = std::move(a);
  g->h_ = h;
  g->build_degrees();
  g->build_operators();
  return g;
}

namespace {

struct Candidate {
  Word word;
  int j, gamma, p;
  friend bool operator<(const Candidate& x, const Candidate& y) { return x.word < y.word; }
};

}  // namespace

void TruncatedAlgebra::build_degrees() {
  const CartanMatrix& a = *a_;
  int n = a.size();
  auto new_degree = [&](Degree d) {
    index_[d.beta] = static_cast<int>(deg_.size());
    int dim = d.dim();
    deg_.push_back(std::move(d));
    lower_.emplace_back(n, QMat(0, dim));
    raise_.emplace_back(n, QMat(0, dim));
    gram_.emplace_back();
  };
  std::vector<int> level;
  for (int i = 0; i < n; ++i) {
    Degree d;
    d.beta = unit(n, i);
    d.height = 1;
    d.words = {{i}};
    d.head = {i};
    d.tail = {-1};
    level.push_back(static_cast<int>(deg_.size()));
    new_degree(std::move(d));
    gram_.back() = QMat(1, 1);
    gram_.back()(0, 0) = Rational(1, static_cast<long>(a.epsilon()[i]));
  }

  // One level past the window decides completeness; it is dropped afterwards.
  for (int k = 2; k <= h_ + 1 && !level.empty(); ++k) {
    std::map<IVec, std::vector<Candidate>> cands;
    for (int g : level)
      for (int j = 0; j < n; ++j) {
        IVec beta = deg_[g].beta;
        ++beta[j];
        for (int p = 0; p < deg_[g].dim(); ++p) {
          Word w{j};
          w.insert(w.end(), deg_[g].words[p].begin(), deg_[g].words[p].end());
          cands[beta].push_back({std::move(w), j, g, p});
        }
      }
    std::vector<int> next;
    for (auto& [beta, cs] : cands) {
      std::sort(cs.begin(), cs.end());
      // Layout of the e-action vector: one block per i with beta - alpha_i a degree.
      std::vector<int> target(n, -1), off(n, 0);
      int total = 0;
      for (int i = 0; i < n; ++i) {
        if (beta[i] == 0) continue;
        IVec t = beta;
        --t[i];
        auto it = index_.find(t);
        if (it == index_.end()) continue;
        target[i] = it->second;
        off[i] = total;
        total += deg_[it->second].dim();
      }
      std::vector<QVec> vecs;
      for (const Candidate& c : cs) {
        QVec v(total, Rational(0));
        const IVec& gamma = deg_[c.gamma].beta;
        for (int i = 0; i < n; ++i) {
          if (target[i] < 0) continue;
          if (i == c.j) v[off[i] + c.p] -= pairing(a, gamma, c.j);
          if (k == 2) {
            // gamma = alpha_head, [e_i, f_i] = h_i and [f_j, h_i] = a_ij f_j.
            if (deg_[c.gamma].head[0] == i) v[off[i]] += Rational(static_cast<long>(a(i, c.j)));
            continue;
          }
          if (gamma[i] == 0) continue;
          IVec g2 = gamma;
          --g2[i];
          auto it = index_.find(g2);
          if (it == index_.end()) continue;
          QVec u = lower_[c.gamma][i].col(c.p);
          const QMat& r = raise_[it->second][c.j];
          if (r.rows() == 0) continue;
          QVec w = r.apply(u);
          for (int q = 0; q < static_cast<int>(w.size()); ++q) v[off[i] + q] += w[q];
        }
        vecs.push_back(std::move(v));
      }
      Subspace<Rational> span(total);
      std::vector<int> chosen;
      for (int c = 0; c < static_cast<int>(cs.size()); ++c)
        if (span.add(vecs[c])) chosen.push_back(c);
      if (chosen.empty()) continue;

      Degree d;
      d.beta = beta;
      d.height = k;
      for (int c : chosen) {
        d.words.push_back(cs[c].word);
        d.head.push_back(cs[c].j);
        d.tail.push_back(cs[c].p);
      }
      int m = d.dim();
      int id = static_cast<int>(deg_.size());
      new_degree(std::move(d));
      next.push_back(id);

      for (int i = 0; i < n; ++i) {
        if (target[i] < 0) continue;
        QMat l(deg_[target[i]].dim(), m);
        for (int s = 0; s < m; ++s)
          for (int q = 0; q < l.rows(); ++q) l(q, s) = vecs[chosen[s]][off[i] + q];
        lower_[id][i] = std::move(l);
      }
      QMat basis(total, m);
      for (int s = 0; s < m; ++s) basis.set_col(s, vecs[chosen[s]]);
      for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
        QMat& r = raise_[cs[c].gamma][cs[c].j];
        if (r.rows() == 0) r = QMat(m, deg_[cs[c].gamma].dim());
        auto x = solve(basis, vecs[c]);
        if (!x) throw std::logic_error("e-action vector outside the chosen span");
        r.set_col(cs[c].p, *x);
      }
      QMat gm(m, m);
      for (int s = 0; s < m; ++s) {
        int g = cs[chosen[s]].gamma, j = cs[chosen[s]].j, p = cs[chosen[s]].p;
        const QMat& l = lower_[id][j];
        for (int t = 0; t < m; ++t) {
          Rational acc = 0;
          for (int q = 0; q < l.rows(); ++q) acc += gram_[g](p, q) * l(q, t);
          gm(s, t) = acc;
        }
      }
      gram_[id] = std::move(gm);
    }
    level = std::move(next);
    if (k == h_ + 1) {
      complete_ = level.empty();
      // Drop the extra level.
      for (int id : level) index_.erase(deg_[id].beta);
      if (!level.empty()) {
        int keep = level.front();
        deg_.resize(keep);
        lower_.resize(keep);
        raise_.resize(keep);
        gram_.resize(keep);
      }
    }
  }
  if (level.empty()) complete_ = true;
  // Raises from the top level point at dropped degrees.
  for (std::size_t d = 0; d < deg_.size(); ++d)
    if (deg_[d].height == h_)
      for (auto& r : raise_[d]) r = QMat(0, deg_[d].dim());
}

void TruncatedAlgebra::build_operators() {
  const CartanMatrix& a = *a_;
  int n = a.size();
  int tot = 0;
  for (auto& d : deg_) {
    d.neg = tot;
    tot += d.dim();
  }
  hoff_ = tot;
  for (auto& d : deg_) d.pos = hoff_ + n + d.neg;
  n_ = 2 * tot + n;
  wt_.assign(n_, IVec(n, 0));
  blk_.assign(n_, -1);
  for (int d = 0; d < static_cast<int>(deg_.size()); ++d)
    for (int k = 0; k < deg_[d].dim(); ++k) {
      wt_[deg_[d].neg + k] = neg(deg_[d].beta);
      wt_[deg_[d].pos + k] = deg_[d].beta;
      blk_[deg_[d].neg + k] = d;
      blk_[deg_[d].pos + k] = d;
    }

  adf_.assign(n, SparseOp(n_));
  ade_.assign(n, SparseOp(n_));
  adh_.assign(n, SparseOp(n_));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // [f_j, h_i] = a_ij f_j and [e_j, h_i] = -a_ij e_j
      int d = index_.at(unit(n, j));
      adf_[j].add(deg_[d].neg, hoff_ + i, Rational(static_cast<long>(a(i, j))));
      ade_[j].add(deg_[d].pos, hoff_ + i, Rational(static_cast<long>(-a(i, j))));
    }
    for (int d = 0; d < static_cast<int>(deg_.size()); ++d) {
      const Degree& dg = deg_[d];
      const QMat& r = raise_[d][j];
      if (r.rows() > 0) {
        IVec up = dg.beta;
        ++up[j];
        const Degree& t = deg_[index_.at(up)];
        for (int p = 0; p < dg.dim(); ++p)
          for (int q = 0; q < r.rows(); ++q) {
            adf_[j].add(t.neg + q, dg.neg + p, r(q, p));
            ade_[j].add(t.pos + q, dg.pos + p, r(q, p));
          }
      }
      if (dg.height == 1 && dg.head[0] == j) {
        ade_[j].add(hoff_ + j, dg.neg, Rational(1));
        adf_[j].add(hoff_ + j, dg.pos, Rational(-1));
      } else if (dg.beta[j] > 0) {
        const QMat& l = lower_[d][j];
        if (l.rows() > 0) {
          IVec down = dg.beta;
          --down[j];
          const Degree& t = deg_[index_.at(down)];
          for (int p = 0; p < dg.dim(); ++p)
            for (int q = 0; q < l.rows(); ++q) {
              ade_[j].add(t.neg + q, dg.neg + p, l(q, p));
              adf_[j].add(t.pos + q, dg.pos + p, l(q, p));
            }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (const auto& dg : deg_) {
      Rational v(static_cast<long>(pairing(a, dg.beta, i)));
      for (int p = 0; p < dg.dim(); ++p) {
        adh_[i].add(dg.neg + p, dg.neg + p, -v);
        adh_[i].add(dg.pos + p, dg.pos + p, v);
      }
    }
  memo_.resize(n_);
  if (!complete_) outer_ = roots(a, 2 * h_ + 2);
}

std::optional<int> TruncatedAlgebra::degree_index(const IVec& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TruncatedAlgebra::dim_at(const IVec& beta) const {
  auto d = degree_index(beta);
  return d ? deg_[*d].dim() : 0;
}

int TruncatedAlgebra::dim_n_minus(int h) const {
  int s = 0;
  for (const auto& d : deg_)
    if (d.height <= h) s += d.dim();
  return s;
}

Element TruncatedAlgebra::zero() const { return Element{std::vector<GaussQ>(n_), false}; }

Element TruncatedAlgebra::basis(int k) const {
  Element x = zero();
  x.c[k] = 1;
  return x;
}

Element TruncatedAlgebra::f(int i) const { return basis(deg_[index_.at(unit(rank(), i))].neg); }
Element TruncatedAlgebra::e(int i) const { return basis(deg_[index_.at(unit(rank(), i))].pos); }
Element TruncatedAlgebra::h(int i) const { return basis(hoff_ + i); }

Element TruncatedAlgebra::from_h(const QVec& coeffs) const {
  Element x = zero();
  for (int i = 0; i < rank(); ++i) x.c[hoff_ + i] = coeffs[i];
  return x;
}

bool TruncatedAlgebra::beyond(const IVec& sd) const {
  if (complete_) return false;
  bool pos = false, negv = false;
  for (Int v : sd) {
    if (v > 0) pos = true;
    if (v < 0) negv = true;
  }
  if (pos == negv) return false;  // zero or mixed signs
  IVec b = pos ? sd : neg(sd);
  Int ht = satake::height(b);
  if (ht <= h_) return false;
  if (ht > outer_.height_bound && !outer_.complete) return true;
  return outer_.contains(b);
}

Element TruncatedAlgebra::apply(const SparseOp& op, const IVec& w, const Element& x) const {
  Element out{op.apply(x.c), x.truncated};
  std::set<IVec> seen;
  for (int k = 0; k < n_ && !out.truncated; ++k) {
    if (x.c[k].is_zero() || !seen.insert(wt_[k]).second) continue;
    if (beyond(add(wt_[k], w))) out.truncated = true;
  }
  return out;
}

Element TruncatedAlgebra::word(const Word& w, bool positive) const {
  int n = rank();
  Element x = positive ? e(w.back()) : f(w.back());
  for (int t = static_cast<int>(w.size()) - 2; t >= 0; --t) {
    IVec u = unit(n, w[t]);
    x = positive ? apply(ade_[w[t]], u, x) : apply(adf_[w[t]], neg(u), x);
  }
  return x;
}

const SparseOp& TruncatedAlgebra::ad_basis(int k) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (memo_[k]) return *memo_[k];
  }
  SparseOp op;
  if (k >= hoff_ && k < hoff_ + rank()) {
    op = adh_[k - hoff_];
  } else {
    bool positive = k > hoff_;
    int d = blk_[k];
    int s = k - (positive ? deg_[d].pos : deg_[d].neg);
    int j = deg_[d].head[s];
    const SparseOp& gen = positive ? ade_[j] : adf_[j];
    if (deg_[d].height == 1) {
      op = gen;
    } else {
      IVec down = deg_[d].beta;
      --down[j];
      const Degree& t = deg_[index_.at(down)];
      const SparseOp& tail = ad_basis((positive ? t.pos : t.neg) + deg_[d].tail[s]);
      op = gen * tail - tail * gen;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  if (!memo_[k]) memo_[k] = std::make_unique<SparseOp>(std::move(op));
  return *memo_[k];
}

Element TruncatedAlgebra::bracket(const Element& x, const Element& y) const {
  Element z = zero();
  z.truncated = x.truncated || y.truncated;
  // One representative index per weight on each side.
  std::set<IVec> bx, by;
  std::vector<int> kx, ky;
  for (int k = 0; k < n_; ++k) {
    if (!x.c[k].is_zero() && bx.insert(wt_[k]).second) kx.push_back(k);
    if (!y.c[k].is_zero() && by.insert(wt_[k]).second) ky.push_back(k);
  }
  for (int p : kx)
    for (int q : ky)
      if (beyond(add(wt_[p], wt_[q]))) z.truncated = true;
  for (int k = 0; k < n_; ++k) {
    if (x.c[k].is_zero()) continue;
    auto v = ad_basis(k).apply(y.c);
    for (int r = 0; r < n_; ++r)
      if (!v[r].is_zero()) z.c[r] += x.c[k] * v[r];
  }
  return z;
}

int gram_rank(const TruncatedAlgebra& g, int d) { return rank(g.gram(d)); }

std::optional<std::vector<GaussQ>> coordinates(const std::vector<Element>& span, const Element& x) {
  int n = static_cast<int>(x.c.size());
  Mat<GaussQ> m(n, static_cast<int>(span.size()));
  for (int c = 0; c < static_cast<int>(span.size()); ++c)
    for (int r = 0; r < n; ++r) m(r, c) = span[c].c[r];
  auto s = solve(m, x.c);
  if (!s) return std::nullopt;
  if (m.apply(*s) != x.c) return std::nullopt;
  return s;
}

}  // namespace satake
