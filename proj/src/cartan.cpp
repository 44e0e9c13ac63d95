#include "satake/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "satake/error.hpp"

namespace satake {

const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return "finite";
    case TypeKind::Affine: return "affine";
    case TypeKind::Indefinite: return "indefinite";
  }
  return "?";
}

std::string ComponentType::name() const {
  if (family.empty()) return std::string("?") + to_string(kind) + std::to_string(nodes.size());
  return family + std::to_string(rank);
}

std::string ComponentType::kac() const {
  if (family.empty()) return name();
  if (kind == TypeKind::Finite) return name();
  const std::string& f = family;
  auto r = std::to_string(rank);
  if (f.size() == 2) return f.substr(0, 1) + r + "^(1)";  // untwisted X~n
  if (f == "B~v") return "A" + std::to_string(2 * rank - 1) + "^(2)";
  if (f == "C~v") return "D" + std::to_string(rank + 1) + "^(2)";
  if (f == "C~'") return "A" + std::to_string(2 * rank) + "^(2)";
  if (f == "F~v") return "E6^(2)";
  if (f == "G~v") return "D4^(3)";
  return name();
}

std::string LieTypeLabel::name() const {
  if (components.empty()) return "Z0";
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) s += (k ? "x" : "") + components[k].name();
  return s;
}

std::string LieTypeLabel::kac() const {
  if (components.empty()) return "Z0";
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) s += (k ? "x" : "") + components[k].kac();
  return s;
}

std::optional<int> CartanMatrix::node(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

namespace {

std::vector<NodeSet> connected_components(const IMat& a, const NodeSet& j) {
  std::vector<NodeSet> out;
  std::vector<char> seen(a.rows(), 0);
  std::vector<char> in(a.rows(), 0);
  for (int v : j) in[v] = 1;
  for (int s : j) {
    if (seen[s]) continue;
    NodeSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w = 0; w < a.rows(); ++w)
        if (in[w] && !seen[w] && a(v, w) != 0) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

IMat sub_matrix(const IMat& a, const NodeSet& j) {
  IMat m(static_cast<int>(j.size()), static_cast<int>(j.size()));
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j.size(); ++c) m(r, c) = a(j[r], j[c]);
  return m;
}

void check_gcm(const IMat& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(Errc::NotGCM, "matrix must be square and non-empty");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (i == j && a(i, j) != 2) throw Error(Errc::NotGCM, "diagonal entry != 2 at " + std::to_string(i));
      if (i != j && a(i, j) > 0) throw Error(Errc::NotGCM, "positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw Error(Errc::NotGCM, "zero pattern is not symmetric");
    }
}

std::vector<std::string> default_labels(int n, int first) {
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) l[i] = std::to_string(i + first);
  return l;
}

}  // namespace

std::optional<std::vector<Int>> symmetrizer(const IMat& a) {
  int n = a.rows();
  std::vector<Rational> eps(n, Rational(0));
  for (const NodeSet& comp : connected_components(a, [&] {
         NodeSet all(n);
         std::iota(all.begin(), all.end(), 0);
         return all;
       }())) {
    // Spanning tree propagation of eps_j = eps_i a_ij / a_ji.
    std::queue<int> q;
    eps[comp[0]] = 1;
    q.push(comp[0]);
    std::vector<char> seen(n, 0);
    seen[comp[0]] = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0 || seen[j]) continue;
        Rational r(static_cast<long>(a(i, j)), static_cast<long>(a(j, i)));
        r.canonicalize();
        eps[j] = eps[i] * r;
        seen[j] = 1;
        q.push(j);
      }
    }
    for (int i : comp)
      for (int j : comp)
        if (eps[i] * a(i, j) != eps[j] * a(j, i) || sgn(eps[i]) <= 0) return std::nullopt;
    mpz_class l = 1;
    for (int i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), eps[i].get_den_mpz_t());
    mpz_class g = 0;
    for (int i : comp) {
      eps[i] *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), eps[i].get_num_mpz_t());
    }
    for (int i : comp) eps[i] /= g;
  }
  std::vector<Int> out(n);
  for (int i = 0; i < n; ++i) out[i] = eps[i].get_num().get_si();
  return out;
}

CartanMatrix make_cartan(const IMat& entries, std::vector<std::string> labels, bool relaxed, std::string name) {
  check_gcm(entries);
  auto eps = symmetrizer(entries);
  if (!eps) throw Error(Errc::NotSymmetrizable, "no positive symmetrizer exists");
  NodeSet all(entries.rows());
  std::iota(all.begin(), all.end(), 0);
  bool connected = connected_components(entries, all).size() == 1;
  if (!connected && !relaxed) throw Error(Errc::Decomposable, "the index set is not connected");
  if (labels.empty()) labels = default_labels(entries.rows(), 1);
  if (static_cast<int>(labels.size()) != entries.rows()) throw Error(Errc::NotGCM, "label count mismatch");
  CartanMatrix c;
  c.a_ = entries;
  c.eps_ = *eps;
  c.labels_ = std::move(labels);
  c.indecomposable_ = connected;
  c.name_ = std::move(name);
  return c;
}

CartanMatrix validate_gcm(const IMat& entries, std::vector<std::string> labels) {
  return make_cartan(entries, std::move(labels), false, "");
}

CartanMatrix validate_gcm_relaxed(const IMat& entries, std::vector<std::string> labels) {
  return make_cartan(entries, std::move(labels), true, "");
}

namespace {

void bond(IMat& m, int i, int j, Int aij = -1, Int aji = -1) {
  m(i, j) = aij;
  m(j, i) = aji;
}

IMat path(int n, int offset, int total) {
  IMat m(total, total);
  for (int i = 0; i < total; ++i) m(i, i) = 2;
  for (int i = 0; i + 1 < n; ++i) bond(m, offset + i, offset + i + 1);
  return m;
}

// Finite matrix placed at indices offset..offset+n-1 of a total x total matrix.
IMat finite_block(char f, int n, int offset, int total) {
  IMat m = path(0, 0, total);
  auto at = [&](int k) { return offset + k; };
  switch (f) {
    case 'A':
      for (int k = 0; k + 1 < n; ++k) bond(m, at(k), at(k + 1));
      break;
    case 'B':
      for (int k = 0; k + 1 < n; ++k) bond(m, at(k), at(k + 1));
      m(at(n - 1), at(n - 2)) = -2;
      break;
    case 'C':
      for (int k = 0; k + 1 < n; ++k) bond(m, at(k), at(k + 1));
      m(at(n - 2), at(n - 1)) = -2;
      break;
    case 'D':
      for (int k = 0; k + 1 < n - 1; ++k) bond(m, at(k), at(k + 1));
      bond(m, at(n - 3), at(n - 1));
      break;
    case 'E': {
      int e[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto& p : e)
        if (p[0] < n && p[1] < n) bond(m, at(p[0]), at(p[1]));
      break;
    }
    case 'F':
      bond(m, at(0), at(1));
      bond(m, at(1), at(2), -1, -2);
      bond(m, at(2), at(3));
      break;
    case 'G':
      bond(m, at(0), at(1), -1, -3);
      break;
  }
  return m;
}

bool finite_rank_ok(char f, int n) {
  switch (f) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

}  // namespace

IMat catalogue_matrix(std::string_view family, int n) {
  auto bad = [&] { return Error(Errc::NotGCM, "no catalogue entry " + std::string(family) + std::to_string(n)); };
  if (family.empty()) throw bad();
  char f = family[0];
  std::string_view mod = family.substr(1);
  if (mod.empty()) {
    if (!finite_rank_ok(f, n)) throw bad();
    return finite_block(f, n, 0, n);
  }
  int total = n + 1;
  IMat m;
  if (mod == "~") {
    if (f == 'A') {
      if (n < 1) throw bad();
      if (n == 1) return IMat::from_rows({{2, -2}, {-2, 2}});
      m = finite_block('A', n, 1, total);
      bond(m, 0, 1);
      bond(m, 0, n);
      return m;
    }
    if (f == 'B' && n >= 3) {
      m = finite_block('B', n, 1, total);
      bond(m, 0, 2);
      return m;
    }
    if (f == 'C' && n >= 2) {
      m = finite_block('C', n, 1, total);
      bond(m, 0, 1, -1, -2);
      return m;
    }
    if (f == 'D' && n >= 4) {
      m = finite_block('D', n, 1, total);
      bond(m, 0, 2);
      return m;
    }
    if (f == 'E' && n >= 6 && n <= 8) {
      m = finite_block('E', n, 1, total);
      bond(m, 0, n == 6 ? 2 : n == 7 ? 1 : 8);
      return m;
    }
    if (f == 'F' && n == 4) {
      m = finite_block('F', 4, 1, total);
      bond(m, 0, 1);
      return m;
    }
    if (f == 'G' && n == 2) {
      m = finite_block('G', 2, 1, total);
      bond(m, 0, 1);
      return m;
    }
    throw bad();
  }
  if (mod == "~v") {
    if (f == 'B' && n >= 3) return catalogue_matrix("B~", n).transpose();
    if (f == 'C' && n >= 2) return catalogue_matrix("C~", n).transpose();
    if (f == 'F' && n == 4) return catalogue_matrix("F~", 4).transpose();
    if (f == 'G' && n == 2) {
      // Paper labelling: node 0 attached to the short node 2.
      m = finite_block('G', 2, 1, total);
      bond(m, 0, 2);
      return m;
    }
    throw bad();
  }
  if (mod == "~'" && f == 'C' && n >= 1) {
    if (n == 1) return IMat::from_rows({{2, -4}, {-1, 2}});
    m = finite_block('C', n, 1, total);
    bond(m, 0, 1, -2, -1);
    return m;
  }
  throw bad();
}

CartanMatrix catalogue(std::string_view family, int n) {
  IMat m = catalogue_matrix(family, n);
  bool affine = family.size() > 1;
  std::string name = std::string(family) + std::to_string(n);
  return make_cartan(m, default_labels(m.rows(), affine ? 0 : 1), false, name);
}

CartanMatrix cartan_from_name(std::string_view s) {
  auto bad = [&] { return Error(Errc::NotGCM, "unknown type name '" + std::string(s) + "'"); };
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) throw bad();
  std::size_t k = 1;
  std::string fam(1, s[0]);
  if (k < s.size() && s[k] == '~') {
    fam += '~';
    ++k;
    if (k < s.size() && (s[k] == 'v' || s[k] == '\'')) fam += s[k++];
  }
  std::size_t d0 = k;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == d0) throw bad();
  int n = std::stoi(std::string(s.substr(d0, k - d0)));
  if (k == s.size()) return catalogue(fam, n);
  // Kac alias X_n^(t).
  if (fam.size() != 1 || s.substr(k, 2) != "^(" || s.back() != ')') throw bad();
  int t = std::stoi(std::string(s.substr(k + 2, s.size() - k - 3)));
  char f = fam[0];
  if (t == 1) return catalogue(fam + "~", n);
  if (t == 2) {
    if (f == 'A' && n % 2 == 0 && n >= 2) return catalogue("C~'", n / 2);
    if (f == 'A' && n == 3) return catalogue("C~v", 2);
    if (f == 'A' && n % 2 == 1 && n >= 5) return catalogue("B~v", (n + 1) / 2);
    if (f == 'D' && n >= 3) return catalogue("C~v", n - 1);
    if (f == 'E' && n == 6) return catalogue("F~v", 4);
  }
  if (t == 3 && f == 'D' && n == 4) return catalogue("G~v", 2);
  throw bad();
}

CartanPtr share(CartanMatrix a) { return std::make_shared<const CartanMatrix>(std::move(a)); }

IMat bilinear_form(const CartanMatrix& a) {
  int n = a.size();
  IMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = a.epsilon()[i] * a(i, j);
  return b;
}

IMat principal(const CartanMatrix& a, const NodeSet& j) { return sub_matrix(a.entries(), j); }

std::vector<NodeSet> components(const CartanMatrix& a, const NodeSet& j) {
  return connected_components(a.entries(), j);
}

NodeSet perp(const CartanMatrix& a, const NodeSet& j) {
  NodeSet out;
  for (int i = 0; i < a.size(); ++i) {
    bool ok = true;
    for (int k : j)
      if (a(i, k) != 0) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

NodeSet all_nodes(const CartanMatrix& a) {
  NodeSet s(a.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

namespace {

// Finite type test for a connected symmetrizable matrix: the symmetrized
// form must be positive definite (leading principal minors).
bool positive_definite_sym(const IMat& m) {
  auto eps = symmetrizer(m);
  int n = m.rows();
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = Rational(static_cast<long>((*eps)[i] * m(i, j)));
  for (int k = 1; k <= n; ++k) {
    QMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = b(i, j);
    if (sgn(det(lead)) <= 0) return false;
  }
  return true;
}

TypeKind kind_connected(const IMat& m) {
  if (positive_definite_sym(m)) return TypeKind::Finite;
  if (sgn(det(to_q(m))) != 0) return TypeKind::Indefinite;
  int n = m.rows();
  for (int drop = 0; drop < n; ++drop) {
    NodeSet rest;
    for (int i = 0; i < n; ++i)
      if (i != drop) rest.push_back(i);
    for (const NodeSet& c : connected_components(m, rest))
      if (!positive_definite_sym(sub_matrix(m, c))) return TypeKind::Indefinite;
  }
  return TypeKind::Affine;
}

struct Candidate {
  const char* family;
  int rank;
};

std::vector<Candidate> candidates(TypeKind kind, int nodes) {
  std::vector<Candidate> c;
  if (kind == TypeKind::Finite) {
    int n = nodes;
    if (n >= 1) c.push_back({"A", n});
    if (n >= 2) c.push_back({"B", n});
    if (n >= 3) c.push_back({"C", n});
    if (n >= 4) c.push_back({"D", n});
    if (n >= 6 && n <= 8) c.push_back({"E", n});
    if (n == 4) c.push_back({"F", 4});
    if (n == 2) c.push_back({"G", 2});
  } else if (kind == TypeKind::Affine) {
    int n = nodes - 1;
    if (n >= 1) c.push_back({"A~", n});
    if (n >= 3) c.push_back({"B~", n});
    if (n >= 3) c.push_back({"B~v", n});
    if (n >= 2) c.push_back({"C~", n});
    if (n >= 2) c.push_back({"C~v", n});
    if (n >= 1) c.push_back({"C~'", n});
    if (n >= 4) c.push_back({"D~", n});
    if (n >= 6 && n <= 8) c.push_back({"E~", n});
    if (n == 4) c.push_back({"F~", 4});
    if (n == 4) c.push_back({"F~v", 4});
    if (n == 2) c.push_back({"G~", 2});
    if (n == 2) c.push_back({"G~v", 2});
  }
  return c;
}

}  // namespace

ComponentType classify_matrix(const IMat& m) {
  ComponentType t;
  t.kind = kind_connected(m);
  t.nodes.resize(m.rows());
  std::iota(t.nodes.begin(), t.nodes.end(), 0);
  for (const Candidate& c : candidates(t.kind, m.rows())) {
    IMat cat = catalogue_matrix(c.family, c.rank);
    if (auto p = find_isomorphism(m, cat)) {
      t.family = c.family;
      t.rank = c.rank;
      for (int i = 0; i < m.rows(); ++i) t.nodes[(*p)[i]] = i;
      break;
    }
  }
  if (t.family.empty()) t.rank = t.kind == TypeKind::Affine ? m.rows() - 1 : m.rows();
  return t;
}

TypeKind kind_of(const CartanMatrix& a, const NodeSet& j) {
  TypeKind k = TypeKind::Finite;
  for (const NodeSet& c : components(a, j)) {
    TypeKind kc = kind_connected(sub_matrix(a.entries(), c));
    if (static_cast<int>(kc) > static_cast<int>(k)) k = kc;
  }
  return k;
}

bool is_finite_type(const CartanMatrix& a, const NodeSet& j) {
  for (const NodeSet& c : components(a, j))
    if (!positive_definite_sym(sub_matrix(a.entries(), c))) return false;
  return true;
}

LieTypeLabel classify_type(const CartanMatrix& a, const NodeSet& j) {
  LieTypeLabel label;
  for (const NodeSet& c : components(a, j)) {
    ComponentType t = classify_matrix(sub_matrix(a.entries(), c));
    for (int& v : t.nodes) v = c[v];
    if (static_cast<int>(t.kind) > static_cast<int>(label.kind)) label.kind = t.kind;
    label.components.push_back(std::move(t));
  }
  return label;
}

void for_each_isomorphism(const IMat& a, const IMat& b, const std::vector<int>& colour_a,
                          const std::vector<int>& colour_b, const std::function<bool(const Perm&)>& cb) {
  int n = a.rows();
  if (b.rows() != n) return;
  auto colour = [](const std::vector<int>& c, int i) { return c.empty() ? 0 : c[i]; };
  auto signature = [](const IMat& m, int i) {
    std::vector<std::pair<Int, Int>> s;
    for (int j = 0; j < m.rows(); ++j)
      if (j != i) s.emplace_back(m(i, j), m(j, i));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::pair<Int, Int>>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  // Assign a-nodes in BFS order so that adjacency constrains early.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w = 0; w < n; ++w)
        if (!seen[w] && a(v, w) != 0) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  Perm p(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int depth) {
    if (stop) return;
    if (depth == n) {
      if (!cb(p)) stop = true;
      return;
    }
    int v = order[depth];
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || colour(colour_a, v) != colour(colour_b, w) || sa[v] != sb[w]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int u = order[d];
        if (a(v, u) != b(w, p[u]) || a(u, v) != b(p[u], w)) ok = false;
      }
      if (!ok) continue;
      p[v] = w;
      used[w] = 1;
      rec(depth + 1);
      used[w] = 0;
      p[v] = -1;
    }
  };
  rec(0);
}

std::optional<Perm> find_isomorphism(const IMat& a, const IMat& b, const std::vector<int>& colour_a,
                                     const std::vector<int>& colour_b) {
  std::optional<Perm> out;
  for_each_isomorphism(a, b, colour_a, colour_b, [&](const Perm& p) {
    out = p;
    return false;
  });
  return out;
}

std::vector<Perm> diagram_automorphisms(const CartanMatrix& a) {
  std::vector<Perm> out;
  for_each_isomorphism(a.entries(), a.entries(), {}, {}, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const NodeSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_minus(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet image(const Perm& p, const NodeSet& s) {
  NodeSet out;
  for (int i : s) out.push_back(p[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const NodeSet& s, const CartanMatrix& a) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + a.label(s[k]);
  return out + "}";
}

std::string to_string(const IMat& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_string(const QMat& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace satake
