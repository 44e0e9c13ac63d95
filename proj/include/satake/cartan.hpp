#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

// Sorted list of 0-based node indices.
using NodeSet = std::vector<int>;
// perm[i] is the image of node i.
using Perm = std::vector<int>;

enum class TypeKind { Finite, Affine, Indefinite };
const char* to_string(TypeKind k);

struct ComponentType {
  TypeKind kind = TypeKind::Indefinite;
  // Family token: "A".."G" for finite; "A~", "B~", "B~v", "C~", "C~v", "C~'",
  // "D~", "E~", "F~", "F~v", "G~", "G~v" for affine. Empty when unnamed.
  std::string family;
  int rank = 0;   // Carter index (number of nodes minus one for affine)
  NodeSet nodes;  // ambient nodes listed in catalogue order when named

  std::string name() const;
  std::string kac() const;
};

struct LieTypeLabel {
  TypeKind kind = TypeKind::Finite;
  std::vector<ComponentType> components;

  std::string name() const;  // "Z0" for the empty set, products joined by 'x'
  std::string kac() const;
  bool is_finite() const { return kind == TypeKind::Finite; }
};

class CartanMatrix {
 public:
  int size() const { return a_.rows(); }
  Int operator()(int i, int j) const { return a_(i, j); }
  const IMat& entries() const { return a_; }
  const std::vector<Int>& epsilon() const { return eps_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Index of the node carrying the given label; nullopt when absent.
  std::optional<int> node(std::string_view label) const;
  bool indecomposable() const { return indecomposable_; }
  // Catalogue name such as "G~v2" when built from the catalogue.
  const std::string& catalogue_name() const { return name_; }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.a_ == b.a_; }

 private:
  friend CartanMatrix make_cartan(const IMat&, std::vector<std::string>, bool, std::string);
  IMat a_;
  std::vector<Int> eps_;
  std::vector<std::string> labels_;
  bool indecomposable_ = true;
  std::string name_;
};

using CartanPtr = std::shared_ptr<const CartanMatrix>;

// Coprime positive symmetrizer per connected component, if one exists.
std::optional<std::vector<Int>> symmetrizer(const IMat& a);

// Validates a GCM; decomposable input is rejected. Labels default to 1..n.
CartanMatrix validate_gcm(const IMat& entries, std::vector<std::string> labels = {});
// Same checks without the connectivity requirement.
CartanMatrix validate_gcm_relaxed(const IMat& entries, std::vector<std::string> labels = {});

// Catalogue matrices in Bourbaki labelling (G2 with node 1 long, node 0
// affinizing for affine families).
IMat catalogue_matrix(std::string_view family, int rank);
CartanMatrix catalogue(std::string_view family, int rank);
// Parses "A4", "G~v2", "C~'1" and Kac aliases such as "D4^(3)".
CartanMatrix cartan_from_name(std::string_view name);
CartanPtr share(CartanMatrix a);

IMat bilinear_form(const CartanMatrix& a);
IMat principal(const CartanMatrix& a, const NodeSet& j);
std::vector<NodeSet> components(const CartanMatrix& a, const NodeSet& j);
NodeSet perp(const CartanMatrix& a, const NodeSet& j);
NodeSet all_nodes(const CartanMatrix& a);

TypeKind kind_of(const CartanMatrix& a, const NodeSet& j);
bool is_finite_type(const CartanMatrix& a, const NodeSet& j);
LieTypeLabel classify_type(const CartanMatrix& a, const NodeSet& j);
// Classification of an arbitrary connected GCM given as a raw matrix.
ComponentType classify_matrix(const IMat& m);

std::vector<Perm> diagram_automorphisms(const CartanMatrix& a);

// Enumerates bijections p with a(i,j) == b(p[i],p[j]) and colour_a[i] ==
// colour_b[p[i]]. The callback returns false to stop.
void for_each_isomorphism(const IMat& a, const IMat& b, const std::vector<int>& colour_a,
                          const std::vector<int>& colour_b, const std::function<bool(const Perm&)>& cb);
std::optional<Perm> find_isomorphism(const IMat& a, const IMat& b, const std::vector<int>& colour_a = {},
                                     const std::vector<int>& colour_b = {});

// Node-set helpers.
bool contains(const NodeSet& s, int i);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_minus(const NodeSet& a, const NodeSet& b);
NodeSet image(const Perm& p, const NodeSet& s);
std::string to_string(const NodeSet& s, const CartanMatrix& a);

}  // namespace satake
