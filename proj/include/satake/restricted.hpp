#pragma once

#include <array>
#include <string>
#include <vector>

#include "satake/decoration.hpp"

namespace satake {

struct Sigma {
  Decoration dec;
  IMat matrix;
};

Sigma sigma(const Decoration& d);
// Projection onto V^sigma: (lambda + sigma(lambda)) / 2.
QVec bar(const Sigma& s, const QVec& lambda);
QVec bar(const Sigma& s, const IVec& lambda);

struct RestrictedTypeLabel {
  std::string name;  // "A2", "(B,C)1+", "(C~',C~)1+", "Z0", "Z~0", ...
  bool recognized = true;
  QMat gram;
  std::vector<std::vector<int>> multiples;  // {k <= 3 : k alpha_bar_i in Phi_bar}
};

struct RestrictedRootSystem {
  Decoration dec;
  IMat sigma;
  NodeSet I_star, tilde_I;
  std::vector<QVec> simple;  // alpha_bar_i, i in I_star, in the Pi basis
  QMat gram;
  std::vector<QVec> roots;   // Phi_bar, both signs, in the Pi basis
  std::vector<QVec> coords;  // the same roots in the Pi_bar basis
  std::vector<std::vector<int>> multiples;
  int height_bound = 0;
  bool complete = false;
};

RestrictedRootSystem restricted_system(const Decoration& d, int h = 8);
// Coordinates of a vector of V^sigma in the Pi_bar basis; nullopt outside V^sigma.
std::optional<QVec> pibar_coords(const RestrictedRootSystem& r, const QVec& v);

// w_X * w_{X[i]}, for i with X[i] of finite type.
WeylElement tilde_s(const Decoration& d, int i);

struct Battery {
  static constexpr const char* names[8] = {"commutes_with_sigma", "involutive",        "permutes_X_reflections",
                                           "stabilizes_Phi_X",    "generalized_satake", "stabilizes_V_sigma",
                                           "negates_alpha_bar",   "normalizes_W_X"};
  std::array<bool, 8> flags{};
  bool all_equal() const;
};
Battery gsat_battery(const Decoration& d);

// Coxeter entries: 1 on the diagonal, 0 for infinity, -1 if not a Coxeter angle.
using CoxeterMatrix = std::vector<std::vector<int>>;
struct CoxeterReport {
  NodeSet tilde_I;
  CoxeterMatrix on_V, restricted, reflections, angles;
  bool consistent() const;
};
CoxeterReport coxeter_report(const Decoration& d, int order_cap = 64);
CoxeterMatrix restricted_coxeter_matrix(const Decoration& d, int order_cap = 64);

struct ThreeGroups {
  std::size_t w_bar = 0;         // restrictions of W^sigma to V^sigma
  std::size_t w_phi = 0;         // reflection group of Phi_bar
  std::size_t w_tilde = 0;       // <tilde s_i> on V
  std::size_t w_tilde_res = 0;   // <tilde s_i> restricted to V^sigma, 0 if undefined
  bool kernel_is_W_X = false;
  bool coincide() const { return w_bar == w_phi && w_phi == w_tilde && w_tilde == w_tilde_res; }
};
ThreeGroups three_groups(const Decoration& d, std::size_t budget = 2000000, bool parallel = true);

RestrictedTypeLabel classify_restricted(const QMat& gram, const std::vector<std::vector<int>>& multiples);
RestrictedTypeLabel restricted_type(const Decoration& d, int h = 8);

}  // namespace satake
