#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "satake/decoration.hpp"

namespace satake {

// Text form: <TYPE><rank>[X=<labels>; tau=<a:b,...>; chi=<label:re/num|im,...>].
// Node references use the diagram's own labels (1-based finite, 0-based affine).
EnrichedDecoration parse_spec(std::string_view text);
Decoration parse_decoration(std::string_view text);  // chi clause allowed and ignored
// Parses a bare chi list "1:2,2:1/2|1" against a diagram; unlisted nodes get 1.
std::vector<GaussQ> parse_chi(const CartanMatrix& a, std::string_view text, std::size_t offset = 0);

// Inverse of parse_spec; chi is written only when some value differs from 1.
std::string render(const Decoration& d);
std::string render(const EnrichedDecoration& e);

nlohmann::json cartan_to_json(const CartanMatrix& a);
CartanPtr cartan_from_json(const nlohmann::json& j);
nlohmann::json decoration_to_json(const EnrichedDecoration& e);
EnrichedDecoration decoration_from_json(const nlohmann::json& j);

// Graphviz: X filled, tau orbits as double arrows, "s" / "o" on special and odd nodes.
std::string to_dot(const Decoration& d);

struct TableEntry {
  std::string label, x, tau, restricted_type, odd_nodes, special_orbits, constraints;
};
// Entry for one decoration; the label defaults to render(d).
TableEntry table_entry(const Decoration& d, int height = 8, std::string label = {}, std::string constraints = {});
std::string table_tsv(const std::vector<TableEntry>& rows);
nlohmann::json table_json(const std::vector<TableEntry>& rows);

// Nodes marked "s" in drawings: tau-orbits outside X contributing to k / k'.
NodeSet special_nodes(const Decoration& d);

}  // namespace satake
