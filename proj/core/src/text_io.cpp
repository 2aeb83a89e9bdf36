#include "qnp/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qnp {

namespace {

/// Minimal scanner over a string_view with positioned error messages.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what +
                                " in \"" + std::string(s) + "\"");
  }
  bool at_end() const { return pos >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool try_consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  int parse_int() {
    skip_ws();
    bool neg = try_consume('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000) fail("integer too large");
      ++pos;
    }
    return static_cast<int>(neg ? -v : v);
  }
};

std::vector<int> parse_int_list(Cursor& c, char sep) {
  std::vector<int> out;
  out.push_back(c.parse_int());
  c.skip_ws();
  while (c.try_consume(sep)) {
    out.push_back(c.parse_int());
    c.skip_ws();
  }
  return out;
}

VariableIndex parse_variable_at(Cursor& c) {
  c.skip_ws();
  if (!c.try_consume('x')) c.fail("expected a variable 'x[i,j]'");
  c.skip_ws();
  c.expect('[');
  int block = c.parse_int();
  c.skip_ws();
  c.expect(',');
  int pos = c.parse_int();
  c.skip_ws();
  c.expect(']');
  return VariableIndex{block, pos};
}

} // namespace

std::string to_text(VariableIndex v) {
  return "x[" + std::to_string(v.block) + "," + std::to_string(v.pos) + "]";
}

VariableIndex parse_variable(std::string_view text) {
  Cursor c{text};
  VariableIndex v = parse_variable_at(c);
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input after variable");
  return v;
}

std::string to_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  const BlockShape& shape = m.shape();
  std::string out;
  for (int p = 0; p < shape.total(); ++p) {
    int e = m.exponent_flat(p);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += to_text(variable_at(shape, p));
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

Monomial parse_monomial(const BlockShape& shape, std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.try_consume('1')) {
    c.skip_ws();
    if (!c.at_end()) c.fail("trailing input after unit monomial");
    return unit_monomial(shape);
  }
  std::vector<int> exps(static_cast<std::size_t>(shape.total()), 0);
  while (true) {
    VariableIndex v = parse_variable_at(c);
    int e = 1;
    c.skip_ws();
    if (c.try_consume('^')) {
      e = c.parse_int();
      if (e < 0) c.fail("negative exponent");
    }
    exps[static_cast<std::size_t>(flat_index(shape, v))] += e;
    c.skip_ws();
    if (!c.try_consume('*')) break;
  }
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input after monomial");
  return Monomial(shape, std::move(exps));
}

std::string exponents_to_text(const BlockShape& shape, std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != shape.total())
    throw std::invalid_argument("exponents_to_text: length mismatch");
  std::string out = "(";
  std::size_t p = 0;
  for (int i = 1; i <= shape.blocks(); ++i) {
    if (i > 1) out += '|';
    for (int j = 0; j < shape.block_size(i); ++j, ++p) {
      if (j > 0) out += ',';
      out += std::to_string(exponents[p]);
    }
  }
  out += ')';
  return out;
}

std::string exponents_to_text(const Monomial& m) {
  return exponents_to_text(m.shape(), m.exponents());
}

std::vector<int> parse_exponent_vector(const BlockShape& shape, std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  c.expect('(');
  std::vector<int> exps;
  for (int i = 1; i <= shape.blocks(); ++i) {
    if (i > 1) {
      c.skip_ws();
      c.expect('|');
    }
    std::vector<int> block = parse_int_list(c, ',');
    if (static_cast<int>(block.size()) != shape.block_size(i))
      c.fail("block " + std::to_string(i) + " expects " + std::to_string(shape.block_size(i)) +
             " entries");
    for (int e : block) {
      if (e < 0) c.fail("negative exponent");
      exps.push_back(e);
    }
  }
  c.skip_ws();
  c.expect(')');
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing input after exponent vector");
  return exps;
}

std::string to_text(const MonomialPrime& p) {
  std::string out;
  for (VariableIndex v : p.variables()) {
    if (!out.empty()) out += ',';
    out += to_text(v);
  }
  return out;
}

MonomialPrime parse_prime(const BlockShape& shape, std::string_view text) {
  Cursor c{text};
  std::vector<VariableIndex> vars;
  vars.push_back(parse_variable_at(c));
  c.skip_ws();
  while (c.try_consume(',')) {
    vars.push_back(parse_variable_at(c));
    c.skip_ws();
  }
  if (!c.at_end()) c.fail("trailing input after variable list");
  return MonomialPrime(shape, std::move(vars));
}

std::string to_ideal_file(const MonomialIdeal& ideal) {
  std::string out = "shape: ";
  const auto& sizes = ideal.shape().sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes[i]);
  }
  out += '\n';
  for (const Monomial& g : ideal.generators()) {
    out += to_text(g);
    out += '\n';
  }
  return out;
}

MonomialIdeal parse_ideal_file(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  bool have_shape = false;
  BlockShape shape({1});
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (!have_shape) {
      if (body.rfind("shape:", 0) != 0)
        throw std::invalid_argument("ideal file line " + std::to_string(line_no) +
                                    ": expected a 'shape:' header first");
      Cursor c{std::string_view(body).substr(6)};
      shape = BlockShape(parse_int_list(c, ','));
      c.skip_ws();
      if (!c.at_end()) c.fail("trailing input after shape header");
      have_shape = true;
      continue;
    }
    gens.push_back(parse_monomial(shape, body));
  }
  if (!have_shape) throw std::invalid_argument("ideal file: missing 'shape:' header");
  if (gens.empty()) return MonomialIdeal::zero(shape);
  return MonomialIdeal::of(shape, std::move(gens));
}

MonomialIdeal load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

std::string to_json(const MonomialIdeal& ideal, std::span<const std::string> warnings) {
  nlohmann::ordered_json doc;
  doc["shape"] = ideal.shape().sizes();
  auto gens = nlohmann::ordered_json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
  doc["generators"] = std::move(gens);
  doc["warnings"] = std::vector<std::string>(warnings.begin(), warnings.end());
  return doc.dump();
}

StrongQuasiGraph parse_graph_spec(std::string_view text) {
  std::vector<int> sizes;
  EdgeSemantics semantics = EdgeSemantics::CompleteMultipartite;
  bool have_shape = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string_view field =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!field.empty()) {
      std::size_t eq = field.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("graph spec: expected key=value in \"" + std::string(field) + "\"");
      std::string_view key = field.substr(0, eq);
      std::string_view value = field.substr(eq + 1);
      if (key == "shape") {
        Cursor c{value};
        sizes = parse_int_list(c, ',');
        c.skip_ws();
        if (!c.at_end()) c.fail("trailing input in shape list");
        have_shape = true;
      } else if (key == "edges") {
        if (value == "complete")
          semantics = EdgeSemantics::CompleteMultipartite;
        else if (value == "consecutive")
          semantics = EdgeSemantics::ConsecutiveParts;
        else
          throw std::invalid_argument("graph spec: edges must be 'complete' or 'consecutive', got \"" +
                                      std::string(value) + "\"");
      } else {
        throw std::invalid_argument("graph spec: unknown key \"" + std::string(key) + "\"");
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!have_shape) throw std::invalid_argument("graph spec: missing shape=");
  return StrongQuasiGraph(BlockShape(std::move(sizes)), semantics);
}

std::string to_text(const StrongQuasiGraph& g) {
  std::string out = "shape=";
  const auto& sizes = g.shape().sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes[i]);
  }
  out += ";edges=";
  out += g.semantics() == EdgeSemantics::CompleteMultipartite ? "complete" : "consecutive";
  return out;
}

} // namespace qnp
