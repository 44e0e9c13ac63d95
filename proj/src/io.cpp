#include "satake/io.hpp"

#include <cctype>
#include <sstream>

#include "satake/error.hpp"
#include "satake/restricted.hpp"

namespace satake {

namespace {

using nlohmann::json;

// Cursor over the spec text; every error carries its offset.
class Lexer {
 public:
  explicit Lexer(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  std::size_t pos() const { return base_ + p_; }
  bool done() {
    skip();
    return p_ >= s_.size();
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  // Maximal run of characters not in the stop set.
  std::string_view token(std::string_view stops) {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && stops.find(s_[p_]) == std::string_view::npos && !std::isspace(uc(s_[p_]))) ++p_;
    return s_.substr(b, p_ - b);
  }
  [[noreturn]] void fail(const std::string& what, std::size_t at = std::string::npos) const {
    throw ParseError(at == std::string::npos ? pos() : at, what);
  }

 private:
  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }
  void skip() {
    while (p_ < s_.size() && std::isspace(uc(s_[p_]))) ++p_;
  }
  std::string_view s_;
  std::size_t base_, p_ = 0;
};

int node_of(const CartanMatrix& a, Lexer& lx, std::string_view stops) {
  std::size_t at = lx.pos();
  auto t = lx.token(stops);
  if (t.empty()) lx.fail("expected a node label", at);
  auto i = a.node(t);
  if (!i) lx.fail("unknown node '" + std::string(t) + "'", at);
  return *i;
}

std::vector<GaussQ> chi_list(const CartanMatrix& a, Lexer& lx, std::string_view end) {
  std::vector<GaussQ> chi(a.size(), GaussQ(1));
  std::vector<bool> seen(a.size(), false);
  if (end.find(lx.peek()) != std::string_view::npos) return chi;
  do {
    std::size_t at = lx.pos();
    int i = node_of(a, lx, std::string(":,") + std::string(end));
    if (seen[i]) lx.fail("chi given twice for node " + a.label(i), at);
    seen[i] = true;
    lx.expect(':');
    std::size_t vat = lx.pos();
    auto v = lx.token(std::string(",") + std::string(end));
    try {
      chi[i] = parse_gauss(v);
    } catch (const std::exception&) {
      lx.fail("bad chi value '" + std::string(v) + "'", vat);
    }
    if (chi[i].is_zero()) lx.fail("chi must be nonzero", vat);
  } while (lx.accept(','));
  return chi;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::string labels(const CartanMatrix& a, const NodeSet& s) {
  std::vector<std::string> out;
  for (int i : s) out.push_back(a.label(i));
  return join(out, ",");
}

std::string pair_labels(const CartanMatrix& a, const Perm& tau) {
  std::vector<std::string> out;
  for (auto [p, q] : tau_pairs(tau)) out.push_back(a.label(p) + ":" + a.label(q));
  return join(out, ",");
}

bool trivial_chi(const std::vector<GaussQ>& chi) {
  for (const auto& c : chi)
    if (c != GaussQ(1)) return false;
  return true;
}

}  // namespace

EnrichedDecoration parse_spec(std::string_view text) {
  Lexer lx(text);
  std::size_t at = lx.pos();
  auto name = lx.token("[");
  if (name.empty()) lx.fail("expected a diagram type", at);
  CartanPtr a;
  try {
    a = share(cartan_from_name(name));
  } catch (const std::exception&) {
    lx.fail("unknown diagram type '" + std::string(name) + "'", at);
  }
  int n = a->size();
  NodeSet x;
  Perm tau = identity_perm(n);
  std::vector<GaussQ> chi(n, GaussQ(1));
  if (lx.accept('[')) {
    bool have_x = false, have_tau = false, have_chi = false;
    while (!lx.accept(']')) {
      if (lx.done()) lx.fail("missing ']'");
      std::size_t kat = lx.pos();
      auto key = lx.token("=;]");
      lx.expect('=');
      if (key == "X") {
        if (have_x) lx.fail("X given twice", kat);
        have_x = true;
        if (lx.peek() != ';' && lx.peek() != ']') do {
            std::size_t iat = lx.pos();
            int i = node_of(*a, lx, ",;]");
            if (contains(x, i)) lx.fail("node listed twice in X", iat);
            x.insert(std::lower_bound(x.begin(), x.end(), i), i);
          } while (lx.accept(','));
      } else if (key == "tau") {
        if (have_tau) lx.fail("tau given twice", kat);
        have_tau = true;
        if (lx.peek() != ';' && lx.peek() != ']') do {
            std::size_t pat = lx.pos();
            int p = node_of(*a, lx, ":,;]");
            lx.expect(':');
            int q = node_of(*a, lx, ",;]");
            if (tau[p] != p || tau[q] != q || p == q) lx.fail("tau pairs must be disjoint transpositions", pat);
            tau[p] = q;
            tau[q] = p;
          } while (lx.accept(','));
      } else if (key == "chi") {
        if (have_chi) lx.fail("chi given twice", kat);
        have_chi = true;
        chi = chi_list(*a, lx, ";]");
      } else {
        lx.fail("unknown clause '" + std::string(key) + "'", kat);
      }
      if (!lx.accept(';') && lx.peek() != ']') lx.fail("expected ';' or ']'");
    }
  }
  if (!lx.done()) lx.fail("trailing input");
  return {Decoration{std::move(a), std::move(x), std::move(tau)}, std::move(chi)};
}

Decoration parse_decoration(std::string_view text) { return parse_spec(text).base; }

std::vector<GaussQ> parse_chi(const CartanMatrix& a, std::string_view text, std::size_t offset) {
  Lexer lx(text, offset);
  auto chi = chi_list(a, lx, "");
  if (!lx.done()) lx.fail("trailing input");
  return chi;
}

std::string render(const Decoration& d) { return render(enrich(d)); }

std::string render(const EnrichedDecoration& e) {
  const Decoration& d = e.base;
  const CartanMatrix& a = *d.a;
  std::vector<std::string> clauses;
  if (!d.x.empty()) clauses.push_back("X=" + labels(a, d.x));
  if (!tau_pairs(d.tau).empty()) clauses.push_back("tau=" + pair_labels(a, d.tau));
  if (!trivial_chi(e.chi)) {
    std::vector<std::string> parts;
    for (int i = 0; i < a.size(); ++i)
      if (e.chi[i] != GaussQ(1)) parts.push_back(a.label(i) + ":" + to_spec(e.chi[i]));
    clauses.push_back("chi=" + join(parts, ","));
  }
  std::string name = a.catalogue_name();
  if (name.empty()) throw Error(Errc::ParseError, "only catalogued diagrams have a text form");
  return name + "[" + join(clauses, "; ") + "]";
}

json cartan_to_json(const CartanMatrix& a) {
  json m = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(a(i, j));
    m.push_back(row);
  }
  json j{{"matrix", m}, {"labels", a.labels()}, {"epsilon", a.epsilon()}};
  if (!a.catalogue_name().empty()) j["name"] = a.catalogue_name();
  return j;
}

CartanPtr cartan_from_json(const json& j) {
  if (j.contains("name")) return share(cartan_from_name(j.at("name").get<std::string>()));
  const auto& m = j.at("matrix");
  int n = static_cast<int>(m.size());
  IMat a(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(m[r].size()) != n) throw Error(Errc::NotGCM, "matrix is not square");
    for (int c = 0; c < n; ++c) a(r, c) = m[r][c].get<Int>();
  }
  std::vector<std::string> lab;
  if (j.contains("labels")) lab = j.at("labels").get<std::vector<std::string>>();
  return share(validate_gcm(a, lab));
}

json decoration_to_json(const EnrichedDecoration& e) {
  const Decoration& d = e.base;
  const CartanMatrix& a = *d.a;
  json x = json::array(), tau = json::array(), chi = json::object();
  for (int i : d.x) x.push_back(a.label(i));
  for (auto [p, q] : tau_pairs(d.tau)) tau.push_back({a.label(p), a.label(q)});
  for (int i = 0; i < a.size(); ++i)
    if (e.chi[i] != GaussQ(1)) chi[a.label(i)] = to_spec(e.chi[i]);
  json j{{"cartan", cartan_to_json(a)}, {"X", x}, {"tau", tau}, {"chi", chi}};
  if (!a.catalogue_name().empty()) j["spec"] = render(e);
  return j;
}

EnrichedDecoration decoration_from_json(const json& j) {
  CartanPtr a = cartan_from_json(j.at("cartan"));
  auto node = [&](const json& v) {
    auto i = a->node(v.get<std::string>());
    if (!i) throw Error(Errc::ParseError, "unknown node " + v.dump());
    return *i;
  };
  NodeSet x;
  for (const auto& v : j.value("X", json::array())) x.push_back(node(v));
  std::vector<std::pair<int, int>> swaps;
  for (const auto& v : j.value("tau", json::array())) swaps.emplace_back(node(v.at(0)), node(v.at(1)));
  std::vector<GaussQ> chi(a->size(), GaussQ(1));
  json cj = j.value("chi", json::object());
  for (auto it = cj.begin(); it != cj.end(); ++it) chi[node(json(it.key()))] = parse_gauss(it.value().get<std::string>());
  return enrich(make_decoration(a, x, swaps), chi);
}

NodeSet special_nodes(const Decoration& d) {
  OrbitReport r = special_orbits(d);
  return set_union(r.I_diff, r.I_nsf);
}

std::string to_dot(const Decoration& d) {
  const CartanMatrix& a = *d.a;
  int n = a.size();
  NodeSet odd = odd_nodes(d), special = special_nodes(d);
  std::ostringstream os;
  os << "graph \"" << (a.catalogue_name().empty() ? "diagram" : render(d)) << "\" {\n";
  os << "  rankdir=LR;\n  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (int i = 0; i < n; ++i) {
    std::string mark = contains(odd, i) ? "o" : contains(special, i) ? "s" : "";
    os << "  n" << i << " [label=\"" << a.label(i) << "\"";
    if (contains(d.x, i)) os << ", style=filled, fillcolor=black, fontcolor=white";
    if (!mark.empty()) os << ", xlabel=\"" << mark << "\"";
    os << "];\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      os << "  n" << i << " -- n" << j;
      // bond multiplicity as the pair of entries, arrow toward the shorter root
      if (a(i, j) != -1 || a(j, i) != -1) {
        os << " [label=\"" << a(i, j) << "," << a(j, i) << "\"";
        if (a(i, j) != a(j, i)) os << ", dir=forward, arrowhead=" << (a(i, j) < a(j, i) ? "normal" : "inv");
        os << "]";
      }
      os << ";\n";
    }
  for (auto [p, q] : tau_pairs(d.tau))
    os << "  n" << p << " -- n" << q << " [style=dashed, dir=both, constraint=false];\n";
  os << "}\n";
  return os.str();
}

TableEntry table_entry(const Decoration& d, int height, std::string label, std::string constraints) {
  const CartanMatrix& a = *d.a;
  TableEntry t;
  t.label = label.empty() ? render(d) : std::move(label);
  t.x = labels(a, d.x);
  t.tau = pair_labels(a, d.tau);
  if (is_generalized_satake(d)) {
    RestrictedTypeLabel r = restricted_type(d, height);
    t.restricted_type = r.name;
  } else {
    t.restricted_type = "-";
  }
  t.odd_nodes = labels(a, odd_nodes(d));
  t.special_orbits = labels(a, special_nodes(d));
  t.constraints = std::move(constraints);
  return t;
}

std::string table_tsv(const std::vector<TableEntry>& rows) {
  std::ostringstream os;
  os << "label\tX\ttau\trestrictedType\toddNodes\tspecialOrbits\tconstraints\n";
  for (const auto& r : rows)
    os << r.label << '\t' << r.x << '\t' << r.tau << '\t' << r.restricted_type << '\t' << r.odd_nodes << '\t'
       << r.special_orbits << '\t' << r.constraints << '\n';
  return os.str();
}

json table_json(const std::vector<TableEntry>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"label", r.label},
                   {"X", r.x},
                   {"tau", r.tau},
                   {"restrictedType", r.restricted_type},
                   {"oddNodes", r.odd_nodes},
                   {"specialOrbits", r.special_orbits},
                   {"constraints", r.constraints}});
  return out;
}

}  // namespace satake
