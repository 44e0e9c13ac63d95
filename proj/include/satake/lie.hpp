#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/weyl.hpp"

namespace satake {

// Sparse operator on the flat coordinate space; cols[c] lists (row, value).
struct SparseOp {
  int n = 0;
  std::vector<std::vector<std::pair<int, Rational>>> cols;

  explicit SparseOp(int dim = 0) : n(dim), cols(dim) {}
  void add(int row, int col, const Rational& v);
  std::vector<GaussQ> apply(const std::vector<GaussQ>& x) const;
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);  // a after b
  friend SparseOp operator-(const SparseOp& a, const SparseOp& b);
};

struct Element {
  std::vector<GaussQ> c;
  bool truncated = false;

  bool is_zero() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const GaussQ& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const GaussQ& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.c == b.c; }
};

// Homogeneous piece g_{-beta} of n^-; the mirrored words span g_{+beta}.
struct Degree {
  IVec beta;
  int height = 0;
  std::vector<Word> words;  // chosen left-normed words [f_w0,[f_w1,...]]
  // words[k] = (head[k], tail basis element tail[k] of beta - alpha_head)
  std::vector<int> head, tail;
  int neg = 0, pos = 0;  // flat offsets
  int dim() const { return static_cast<int>(words.size()); }
};

class TruncatedAlgebra;
using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

class TruncatedAlgebra {
 public:
  static AlgebraPtr build(CartanPtr a, int h);

  const CartanMatrix& cartan() const { return *a_; }
  const CartanPtr& cartan_ptr() const { return a_; }
  int height() const { return h_; }
  // True when n^- vanishes above some height <= H, so nothing is truncated.
  bool complete() const { return complete_; }
  int rank() const { return a_->size(); }
  int dim() const { return n_; }

  const std::vector<Degree>& degrees() const { return deg_; }
  std::optional<int> degree_index(const IVec& beta) const;
  int dim_at(const IVec& beta) const;  // dim g_{-beta}; 0 if absent within the window
  const QMat& gram(int d) const { return gram_[d]; }
  // [e_i, .] from degree d to degree beta - alpha_i (empty when that is zero or h).
  const QMat& lower(int d, int i) const { return lower_[d][i]; }

  // Flat layout: n^- blocks, then h_1..h_n, then n^+ blocks.
  int h_offset() const { return hoff_; }
  int f_index(int d, int k) const { return deg_[d].neg + k; }
  int e_index(int d, int k) const { return deg_[d].pos + k; }
  const IVec& weight(int k) const { return wt_[k]; }  // signed degree of a flat index
  int degree_of_index(int k) const { return blk_[k]; }  // -1 for h

  Element zero() const;
  Element basis(int k) const;
  Element f(int i) const;
  Element e(int i) const;
  Element h(int i) const;
  Element from_h(const QVec& coeffs) const;

  // The f-word [f_w0,[f_w1,...,f_wk]] (or the e-word when positive).
  Element word(const Word& w, bool positive = false) const;

  Element bracket(const Element& x, const Element& y) const;
  const SparseOp& ad_basis(int k) const;
  const SparseOp& ad_f(int i) const { return adf_[i]; }
  const SparseOp& ad_e(int i) const { return ade_[i]; }
  const SparseOp& ad_h(int i) const { return adh_[i]; }

  // Whether the root space at a signed degree may be nonzero though it lies
  // outside the window. False for non-roots and for complete algebras.
  bool beyond(const IVec& signed_degree) const;
  // Applies a homogeneous operator of the given weight, flagging truncation.
  Element apply(const SparseOp& op, const IVec& op_weight, const Element& x) const;

  // Sum over degrees of dim g_{-beta} with ht(beta) <= h.
  int dim_n_minus(int h) const;

 private:
  TruncatedAlgebra() = default;
  void build_degrees();
  void build_operators();

  CartanPtr a_;
  int h_ = 0;
  bool complete_ = false;
  int n_ = 0, hoff_ = 0;
  std::vector<Degree> deg_;
  std::map<IVec, int> index_;
  std::vector<std::vector<QMat>> lower_, raise_;  // raise_[d][j]: degree d -> d + alpha_j
  std::vector<QMat> gram_;
  std::vector<IVec> wt_;
  std::vector<int> blk_;
  std::vector<SparseOp> adf_, ade_, adh_;
  RootSet outer_;  // roots up to twice the window, for overflow decisions
  mutable std::mutex memo_mu_;
  mutable std::vector<std::unique_ptr<SparseOp>> memo_;
};

// Ranks of the contravariant Gram matrices, for cross checks.
int gram_rank(const TruncatedAlgebra& g, int d);

// Coordinates of an element in a list of elements, if it lies in their span.
std::optional<std::vector<GaussQ>> coordinates(const std::vector<Element>& span, const Element& x);

}  // namespace satake
