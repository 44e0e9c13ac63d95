#pragma once
// Root multiplicities from Peterson's recursion
//   (b | b - 2 rho) c_b = sum_{b' + b'' = b} (b' | b'') c_b' c_b'',
//   c_b = sum_{k >= 1} mult(b / k) / k.
// Self-contained on purpose: it shares no code with the library algebra.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

class Peterson {
 public:
  // a[i][j] is a symmetrizable generalized Cartan matrix.
  explicit Peterson(std::vector<std::vector<long>> a) : a_(std::move(a)), n_(static_cast<int>(a_.size())) {
    // d_i a_ij = d_j a_ji by propagation along edges; scale to integers afterwards
    std::vector<mpq_class> d(n_, 0);
    for (int s = 0; s < n_; ++s) {
      if (d[s] != 0) continue;
      d[s] = 1;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n_; ++j)
          if (a_[i][j] != 0 && d[j] == 0) {
            d[j] = d[i] * mpq_class(a_[i][j], 1) / mpq_class(a_[j][i], 1);
            d[j].canonicalize();
            stack.push_back(j);
          }
      }
    }
    form_.assign(n_, std::vector<mpq_class>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) form_[i][j] = d[i] * a_[i][j];
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (form_[i][j] != form_[j][i]) throw std::invalid_argument("not symmetrizable");
  }

  // Multiplicity of the positive root lattice vector b (0 if not a root).
  long mult(const Vec& b) {
    auto it = mult_.find(b);
    if (it != mult_.end()) return it->second;
    long m = compute(b);
    mult_[b] = m;
    return m;
  }

 private:
  mpq_class ip(const Vec& x, const Vec& y) const {
    mpq_class s = 0;
    for (int i = 0; i < n_; ++i)
      if (x[i])
        for (int j = 0; j < n_; ++j)
          if (y[j]) s += form_[i][j] * x[i] * y[j];
    return s;
  }

  mpq_class c(const Vec& b) {
    auto it = c_.find(b);
    if (it != c_.end()) return it->second;
    mpq_class v = 0;
    long g = 0;
    for (long x : b) g = std::gcd(g, x);
    for (long k = 1; k <= g; ++k) {
      if (g % k) continue;
      Vec q(b);
      for (auto& x : q) x /= k;
      v += mpq_class(mult(q)) / k;
    }
    c_[b] = v;
    return v;
  }

  long compute(const Vec& b) {
    long ht = 0;
    for (long x : b) {
      if (x < 0) return 0;
      ht += x;
    }
    if (ht == 0) return 0;
    if (ht == 1) return 1;
    // (b | 2 rho) = sum_i b_i (a_i | a_i)
    mpq_class two_rho = 0;
    for (int i = 0; i < n_; ++i) two_rho += form_[i][i] * b[i];
    mpq_class lhs = ip(b, b) - two_rho;
    mpq_class rhs = 0;
    Vec p(n_, 0);
    enumerate(b, 0, p, rhs);
    long g = 0;
    for (long x : b) g = std::gcd(g, x);
    mpq_class rest = 0;
    for (long k = 2; k <= g; ++k) {
      if (g % k) continue;
      Vec q(b);
      for (auto& x : q) x /= k;
      rest += mpq_class(mult(q)) / k;
    }
    // The left side vanishes for b = rho - w(rho). The recursion is silent
    // there; mult(b) = 0 is assumed and any error shows up as a mismatch.
    mpq_class cb;
    if (lhs == 0) {
      if (rhs != 0) throw std::logic_error("inconsistent Peterson recursion");
      cb = rest;
    } else {
      cb = rhs / lhs;
    }
    c_[b] = cb;
    mpq_class m = cb - rest;
    if (m.get_den() != 1) throw std::logic_error("non-integral multiplicity");
    return m.get_num().get_si();
  }

  // Sum over ordered splits b = p + (b - p) with both parts nonzero.
  void enumerate(const Vec& b, int i, Vec& p, mpq_class& acc) {
    if (i == n_) {
      Vec q(n_);
      bool pz = true, qz = true;
      for (int k = 0; k < n_; ++k) {
        q[k] = b[k] - p[k];
        pz = pz && p[k] == 0;
        qz = qz && q[k] == 0;
      }
      if (pz || qz) return;
      mpq_class cp = c(p);
      if (cp == 0) return;
      mpq_class cq = c(q);
      if (cq == 0) return;
      acc += ip(p, q) * cp * cq;
      return;
    }
    for (long v = 0; v <= b[i]; ++v) {
      p[i] = v;
      enumerate(b, i + 1, p, acc);
    }
    p[i] = 0;
  }

  std::vector<std::vector<long>> a_;
  int n_;
  std::vector<std::vector<mpq_class>> form_;
  std::map<Vec, long> mult_;
  std::map<Vec, mpq_class> c_;
};

// All nonzero nonnegative integer vectors of height <= h.
inline std::vector<Vec> lattice_up_to(int n, int h) {
  std::vector<Vec> out;
  Vec v(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left < h) out.push_back(v);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      v[i] = k;
      self(self, i + 1, left - k);
    }
    v[i] = 0;
  };
  rec(rec, 0, h);
  return out;
}

}  // namespace oracle
