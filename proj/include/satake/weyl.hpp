#pragma once

#include <set>
#include <vector>

#include "satake/cartan.hpp"

namespace satake {

using Word = std::vector<int>;

// Element of W acting on the root lattice; columns are images of simple roots.
struct WeylElement {
  IMat matrix;
  Word word;  // not necessarily reduced

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

IMat reflection_matrix(const CartanMatrix& a, int i);
WeylElement reflect(const CartanMatrix& a, int i);
WeylElement identity_element(const CartanMatrix& a);
WeylElement from_word(const CartanMatrix& a, const Word& w);
WeylElement operator*(const WeylElement& x, const WeylElement& y);
IVec apply(const WeylElement& w, const IVec& v);
IVec apply(const IMat& w, const IVec& v);
QVec apply(const IMat& w, const QVec& v);

// Pairing lambda(h_i) = sum_k a_ik lambda_k.
Int pairing(const CartanMatrix& a, const IVec& lambda, int i);
Rational pairing(const CartanMatrix& a, const QVec& lambda, int i);
// (lambda, mu) with respect to the symmetrized form.
Rational form(const CartanMatrix& a, const QVec& x, const QVec& y);
Int form(const CartanMatrix& a, const IVec& x, const IVec& y);
// Coroot pairing lambda(alpha^vee) = 2(lambda,alpha)/(alpha,alpha) for a real root alpha.
Int coroot_pairing(const CartanMatrix& a, const IVec& lambda, const IVec& alpha);

struct Descent {
  int length = 0;
  Word reduced_word;
};

// Repeated right descent with smallest-index tie breaking.
Descent descend(const CartanMatrix& a, const IMat& w, int step_cap = 100000);
int length(const CartanMatrix& a, const WeylElement& w);
Word reduced_word(const CartanMatrix& a, const IMat& w);

WeylElement longest_element(const CartanMatrix& a, const NodeSet& x);
// Full-size permutation: oi_X on X, identity elsewhere.
Perm opposition_involution(const CartanMatrix& a, const NodeSet& x);

int zeta_X(const CartanMatrix& a, const NodeSet& x, const IVec& lambda);
int zeta_w(const CartanMatrix& a, const WeylElement& w, const IVec& lambda);
// Inversion set Phi+ cap w(-Phi+) read off a reduced word.
std::vector<IVec> inversion_set(const CartanMatrix& a, const Word& reduced);

// Positive real roots of height <= h.
std::vector<IVec> positive_real_roots(const CartanMatrix& a, int h);
// Positive imaginary roots of height <= h (W-orbit of the fundamental set).
std::vector<IVec> positive_imaginary_roots(const CartanMatrix& a, int h);
// Complete positive system of a finite-type subset, supported on X.
std::vector<IVec> positive_roots_finite(const CartanMatrix& a, const NodeSet& x);

struct RootSet {
  std::vector<IVec> real;       // positive real roots
  std::vector<IVec> imaginary;  // positive imaginary roots
  int height_bound = 0;
  bool complete = false;

  bool contains(const IVec& v) const;  // sign-insensitive
  std::vector<IVec> all() const;       // both signs
};
RootSet real_roots(const CartanMatrix& a, int h);
RootSet roots(const CartanMatrix& a, int h);

bool in_parabolic(const CartanMatrix& a, const IMat& w, const NodeSet& x);
bool is_minimal_coset_rep(const CartanMatrix& a, const WeylElement& w, const NodeSet& x);
bool normalizes_parabolic(const CartanMatrix& a, const WeylElement& w, const NodeSet& x);

// Brute-force enumeration of W (finite type only) up to a size budget.
std::vector<IMat> enumerate_weyl_group(const CartanMatrix& a, std::size_t budget = 2000000, bool parallel = true);
// Order of the group generated by integer matrices, or throws when it exceeds cap.
std::size_t group_order(const std::vector<IMat>& gens, std::size_t cap, bool parallel = true);
std::size_t group_order(const std::vector<QMat>& gens, std::size_t cap, bool parallel = true);
std::vector<IMat> group_elements(const std::vector<IMat>& gens, std::size_t cap, bool parallel = true);
std::vector<QMat> group_elements(const std::vector<QMat>& gens, std::size_t cap, bool parallel = true);

// Order of a single matrix, 0 when it exceeds the cap.
int element_order(const IMat& m, int cap);
int element_order(const QMat& m, int cap);

// Fundamental product of degrees for finite types, for cross checks.
std::size_t weyl_order_formula(const LieTypeLabel& t);

}  // namespace satake
