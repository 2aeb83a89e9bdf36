#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qnp/graph_ideal.hpp"
#include "qnp/monomial_ideal.hpp"

namespace qnp {

// Monomial text format: factors `x[i,j]^e` joined by `*`, the `^e` suffix
// omitted when e = 1, and the unit monomial written as `1`.
std::string to_text(const Monomial& m);
Monomial parse_monomial(const BlockShape& shape, std::string_view text);

// Exponent-vector format: `(a11,...,a1m1|a21,...|...)`, blocks separated by
// `|`.
std::string exponents_to_text(const BlockShape& shape, std::span<const int> exponents);
std::string exponents_to_text(const Monomial& m);
std::vector<int> parse_exponent_vector(const BlockShape& shape, std::string_view text);

std::string to_text(VariableIndex v); // "x[i,j]"
VariableIndex parse_variable(std::string_view text);

std::string to_text(const MonomialPrime& p); // "x[1,1],x[2,1]"
MonomialPrime parse_prime(const BlockShape& shape, std::string_view text);

// Ideal file format: a `shape: m1,m2,...,mn` header line, then one generator
// per line in the monomial text format. `#` starts a comment, blank lines are
// ignored. A zero ideal is a header with no generators.
std::string to_ideal_file(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal_file(std::string_view contents);
MonomialIdeal load_ideal_file(const std::string& path);

// JSON form: {"shape":[...],"generators":[[exponents...],...],"warnings":[...]}
// with generators in canonical order.
std::string to_json(const MonomialIdeal& ideal, std::span<const std::string> warnings = {});

// Graph specification string: `shape=m1,m2,...,mn;edges=complete|consecutive`
// (edges defaults to complete).
StrongQuasiGraph parse_graph_spec(std::string_view text);
std::string to_text(const StrongQuasiGraph& g);

} // namespace qnp
