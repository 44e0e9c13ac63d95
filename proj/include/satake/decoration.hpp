#pragma once

#include <string>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/scalar.hpp"
#include "satake/weyl.hpp"

namespace satake {

struct Decoration {
  CartanPtr a;
  NodeSet x;  // sorted
  Perm tau;   // full permutation of the node set

  int size() const { return a->size(); }
  friend bool operator==(const Decoration& p, const Decoration& q) {
    return *p.a == *q.a && p.x == q.x && p.tau == q.tau;
  }
};

struct EnrichedDecoration {
  Decoration base;
  std::vector<GaussQ> chi;  // chi(alpha_i); defaults to 1
};

Perm identity_perm(int n);
// Builds a decoration from a node set and a list of transpositions.
Decoration make_decoration(CartanPtr a, NodeSet x, const std::vector<std::pair<int, int>>& swaps = {});
EnrichedDecoration enrich(const Decoration& d, std::vector<GaussQ> chi = {});
std::vector<std::pair<int, int>> tau_pairs(const Perm& tau);

struct Verdict {
  bool ok = true;
  std::string reason;  // first failed clause
  explicit operator bool() const { return ok; }
};

Verdict is_compatible(const Decoration& d);
void require_compatible(const Decoration& d);

// sigma = w_X o tau on V.
IMat sigma_matrix(const Decoration& d);

bool is_generalized_satake(const Decoration& d);
NodeSet odd_nodes(const Decoration& d);
bool is_satake(const Decoration& d);

// chi extended multiplicatively to the root lattice.
GaussQ chi_of(const EnrichedDecoration& e, const IVec& lambda);
// chi(sigma(alpha_i)) == chi(alpha_i)^{-1} for all i, and chi nowhere zero.
Verdict in_tilde_H_theta(const EnrichedDecoration& e);
bool is_enriched_gsat(const EnrichedDecoration& e);

struct OrbitReport {
  NodeSet I_star, I_diff, I_ns, I_nsf, odd;
};
// Smallest node of each tau-orbit outside X.
NodeSet default_I_star(const Decoration& d);
OrbitReport special_orbits(const Decoration& d, const NodeSet& I_star);
OrbitReport special_orbits(const Decoration& d);

enum class Filter { Compatible, GSat, Satake };
// Exhaustive enumeration; X by size then lex, tau over involutive automorphisms.
std::vector<Decoration> enumerate(const CartanPtr& a, Filter f, int rank_guard = 12, bool parallel = true);

Decoration act(const Perm& psi, const Decoration& d);
// Orbit key: (sorted X, sorted tau pairs); smaller is more canonical.
std::pair<NodeSet, std::vector<std::pair<int, int>>> decoration_key(const Decoration& d);
Decoration canonical(const Decoration& d, const std::vector<Perm>& auts);
std::vector<Decoration> orbit_classes(const std::vector<Decoration>& ds);

// Structural lemma checks for a compatible decoration.
bool check_components_lemma(const Decoration& d);  // Z connected or A1 x A1
bool check_theta_tau_identity(const Decoration& d);
bool check_wX_formula(const Decoration& d);

struct TableRow {
  std::string label;        // e.g. "(A4)^rfl_1"
  Decoration dec;
  std::string restricted;   // restricted type predicted by the table
  std::string constraints;
  NodeSet special;          // nodes marked "s"
};
std::vector<TableRow> table_typeA(int n);

}  // namespace satake
