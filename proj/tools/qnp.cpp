#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qnp/bipolymatroid.hpp"
#include "qnp/cm.hpp"
#include "qnp/graph_ideal.hpp"
#include "qnp/monomial_ideal.hpp"
#include "qnp/text_io.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string ideal_file;
  int t = -1;
  int b = 2;
  int k = 1;
  bool json = false;
  std::string via = "naive";
  std::string by;
  std::string prime;
  std::string order = "canonical";
  std::uint64_t budget = 1000000;
  std::uint64_t cap = 1000000;
  int length = 1;
  std::string policy = "trail";
  std::string monotone = "on";
  bool compare_formula = false;
};

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

/// Build the working ideal from --graph/--t or --ideal-file; range warnings
/// go to `warnings`.
qnp::MonomialIdeal resolve_ideal(const Options& o, std::vector<std::string>& warnings) {
  if (!o.graph.empty() && !o.ideal_file.empty())
    throw std::invalid_argument("pass either --graph or --ideal-file, not both");
  if (!o.ideal_file.empty()) return qnp::load_ideal_file(o.ideal_file);
  if (o.graph.empty())
    throw std::invalid_argument("one of --graph (with --t) or --ideal-file is required");
  qnp::StrongQuasiGraph g = qnp::parse_graph_spec(o.graph);
  if (o.t < 0) throw std::invalid_argument("--t is required with --graph");
  int hi = qnp::max_nontrivial_degree(g, o.b);
  if (o.t > hi - 1)
    warnings.push_back("t=" + std::to_string(o.t) + " lies outside the nontrivial range 2.." +
                       std::to_string(hi - 1) + " for this graph");
  return qnp::generalized_graph_ideal(g, o.t, o.b);
}

int print_ideal(const qnp::MonomialIdeal& ideal, const Options& o,
                const std::vector<std::string>& warnings) {
  emit_warnings(warnings);
  if (o.json)
    std::cout << qnp::to_json(ideal, warnings) << "\n";
  else
    std::cout << qnp::to_ideal_file(ideal);
  return 0;
}

ordered_json json_exponent_rows(std::span<const qnp::Monomial> monomials) {
  auto rows = ordered_json::array();
  for (const auto& m : monomials) rows.push_back(m.exponents());
  return rows;
}

int run_ideal(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  return print_ideal(ideal, o, warnings);
}

int run_edge_ideal(const Options& o) {
  if (o.graph.empty()) throw std::invalid_argument("--graph is required");
  qnp::MonomialIdeal ideal = qnp::edge_ideal(qnp::parse_graph_spec(o.graph));
  return print_ideal(ideal, o, {});
}

int run_power(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal result = [&] {
    if (o.via == "formula") {
      if (o.graph.empty())
        throw std::invalid_argument("--via formula requires --graph/--t construction");
      qnp::StrongQuasiGraph g = qnp::parse_graph_spec(o.graph);
      if (o.t < 0) throw std::invalid_argument("--t is required with --graph");
      int hi = qnp::max_nontrivial_degree(g, o.b);
      if (o.t > hi - 1)
        warnings.push_back("t=" + std::to_string(o.t) + " lies outside the nontrivial range 2.." +
                           std::to_string(hi - 1) + " for this graph");
      return qnp::power_via_compositions(g, o.t, o.k, o.b);
    }
    return qnp::power(resolve_ideal(o, warnings), o.k);
  }();
  return print_ideal(result, o, warnings);
}

int run_colon(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  qnp::Monomial by = qnp::parse_monomial(ideal.shape(), o.by);
  return print_ideal(qnp::colon(ideal, by), o, warnings);
}

int run_localize(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  qnp::MonomialPrime p = qnp::parse_prime(ideal.shape(), o.prime);
  return print_ideal(qnp::localize(ideal, p), o, warnings);
}

int run_log(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  emit_warnings(warnings);
  auto vectors = qnp::log_set(ideal.generators());
  if (o.json) {
    ordered_json doc;
    doc["shape"] = ideal.shape().sizes();
    doc["log"] = vectors;
    doc["warnings"] = warnings;
    std::cout << doc.dump() << "\n";
    return 0;
  }
  for (const auto& v : vectors) std::cout << qnp::exponents_to_text(ideal.shape(), v) << "\n";
  return 0;
}

int run_check_exchange(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  emit_warnings(warnings);
  qnp::ExchangeVerdict verdict = qnp::is_generalized_bipolymatroidal(ideal);
  if (o.json) {
    ordered_json doc;
    doc["verdict"] = verdict.passed ? "PASS" : "FAIL";
    if (verdict.failure == qnp::ExchangeFailure::NotEquigenerated)
      doc["reason"] = "not-equigenerated";
    if (verdict.witness) {
      doc["u"] = qnp::to_text(verdict.witness->u);
      doc["v"] = qnp::to_text(verdict.witness->v);
      doc["at"] = qnp::to_text(verdict.witness->from);
    }
    doc["warnings"] = warnings;
    std::cout << doc.dump() << "\n";
    return verdict.passed ? 0 : 1;
  }
  if (verdict.passed) {
    std::cout << "PASS\n";
    return 0;
  }
  if (verdict.failure == qnp::ExchangeFailure::NotEquigenerated)
    std::cout << "FAIL not-equigenerated\n";
  else
    std::cout << "FAIL u=" << qnp::to_text(verdict.witness->u)
              << " v=" << qnp::to_text(verdict.witness->v)
              << " at=" << qnp::to_text(verdict.witness->from) << "\n";
  return 1;
}

int run_check_d1d2(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  emit_warnings(warnings);
  qnp::BaseSet bases = qnp::base_set(ideal);
  qnp::D1D2Verdict verdict = qnp::check_d1_d2(bases, o.cap);
  if (o.json) {
    ordered_json doc;
    doc["verdict"] = verdict.passed ? "PASS" : "FAIL";
    doc["closure_size"] = verdict.closure_size;
    if (verdict.witness) {
      doc["a"] = qnp::exponents_to_text(ideal.shape(), verdict.witness->first);
      doc["b"] = qnp::exponents_to_text(ideal.shape(), verdict.witness->second);
    }
    doc["warnings"] = warnings;
    std::cout << doc.dump() << "\n";
    return verdict.passed ? 0 : 1;
  }
  if (verdict.passed)
    std::cout << "PASS\n";
  else
    std::cout << "FAIL a=" << qnp::exponents_to_text(ideal.shape(), verdict.witness->first)
              << " b=" << qnp::exponents_to_text(ideal.shape(), verdict.witness->second) << "\n";
  std::cout << "closure-size: " << verdict.closure_size << "\n";
  return verdict.passed ? 0 : 1;
}

std::string order_line(const qnp::MonomialIdeal& ideal, std::span<const std::size_t> order) {
  std::string out;
  for (std::size_t i : order) {
    if (!out.empty()) out += ", ";
    out += qnp::to_text(ideal.generators()[i]);
  }
  return out;
}

int run_check_linear_quotients(const Options& o) {
  std::vector<std::string> warnings;
  qnp::MonomialIdeal ideal = resolve_ideal(o, warnings);
  emit_warnings(warnings);
  ordered_json doc;
  doc["warnings"] = warnings;

  if (o.order == "canonical") {
    std::vector<std::size_t> canonical(ideal.size());
    for (std::size_t i = 0; i < canonical.size(); ++i) canonical[i] = i;
    qnp::LinearQuotientsVerdict verdict = qnp::check_linear_quotients(ideal, canonical);
    if (o.json) {
      doc["verdict"] = verdict.passed ? "PASS" : "FAIL";
      if (verdict.passed)
        doc["order"] = order_line(ideal, canonical);
      else
        doc["failing_index"] = verdict.failing_index;
      std::cout << doc.dump() << "\n";
    } else if (verdict.passed) {
      std::cout << "PASS\norder: " << order_line(ideal, canonical) << "\n";
    } else {
      std::cout << "FAIL at-index=" << verdict.failing_index << "\n";
    }
    return verdict.passed ? 0 : 1;
  }

  qnp::LqSearchResult result = qnp::find_linear_quotients_order(ideal, o.budget);
  if (o.json) {
    switch (result.status) {
      case qnp::LqSearchStatus::Found: doc["verdict"] = "PASS"; break;
      case qnp::LqSearchStatus::NoOrderExists: doc["verdict"] = "FAIL"; break;
      case qnp::LqSearchStatus::BudgetExhausted: doc["verdict"] = "UNKNOWN"; break;
    }
    if (result.status == qnp::LqSearchStatus::Found) doc["order"] = order_line(ideal, result.order);
    doc["nodes"] = result.nodes;
    std::cout << doc.dump() << "\n";
    return result.status == qnp::LqSearchStatus::Found ? 0 : 1;
  }
  switch (result.status) {
    case qnp::LqSearchStatus::Found:
      std::cout << "PASS\norder: " << order_line(ideal, result.order) << "\n";
      return 0;
    case qnp::LqSearchStatus::NoOrderExists:
      std::cout << "FAIL no-order-exists nodes=" << result.nodes << "\n";
      return 1;
    case qnp::LqSearchStatus::BudgetExhausted:
      std::cout << "UNKNOWN budget-exhausted nodes=" << result.nodes << "\n";
      return 1;
  }
  return 1;
}

std::string cover_line(const qnp::VertexCover& c) {
  std::string out;
  for (qnp::VariableIndex v : c.members) {
    if (!out.empty()) out += ',';
    out += qnp::to_text(v);
  }
  return out;
}

int run_cm(const Options& o) {
  qnp::CmVerdict verdict;
  qnp::BlockShape shape({1});
  if (!o.graph.empty() && !o.ideal_file.empty())
    throw std::invalid_argument("pass either --graph or --ideal-file, not both");
  if (!o.graph.empty()) {
    qnp::StrongQuasiGraph g = qnp::parse_graph_spec(o.graph);
    shape = g.shape();
    verdict = qnp::cohen_macaulay_verdict(g);
  } else if (!o.ideal_file.empty()) {
    qnp::MonomialIdeal ideal = qnp::load_ideal_file(o.ideal_file);
    shape = ideal.shape();
    verdict = qnp::cm_analysis(ideal);
  } else {
    throw std::invalid_argument("one of --graph or --ideal-file is required");
  }
  const char* status = verdict.status == qnp::CmStatus::CohenMacaulay ? "CM" : "undetermined";
  if (o.json) {
    ordered_json doc;
    doc["shape"] = shape.sizes();
    doc["height"] = verdict.height;
    doc["variables"] = verdict.total_variables;
    doc["dimension"] = verdict.dimension;
    doc["verdict"] = status;
    auto covers = ordered_json::array();
    for (const auto& c : verdict.covers) {
      auto members = ordered_json::array();
      for (qnp::VariableIndex v : c.members) members.push_back(qnp::to_text(v));
      covers.push_back(std::move(members));
    }
    doc["covers"] = std::move(covers);
    doc["warnings"] = ordered_json::array();
    std::cout << doc.dump() << "\n";
    return 0;
  }
  std::cout << "height: " << verdict.height << "\n"
            << "variables: " << verdict.total_variables << "\n"
            << "dimension: " << verdict.dimension << "\n"
            << "verdict: " << status << "\n";
  for (const auto& c : verdict.covers) std::cout << "minimal-cover: " << cover_line(c) << "\n";
  return 0;
}

int run_walks(const Options& o) {
  if (o.graph.empty()) throw std::invalid_argument("--graph is required");
  qnp::StrongQuasiGraph g = qnp::parse_graph_spec(o.graph);
  qnp::WalkPolicy policy{o.policy == "trail", o.monotone == "on"};
  std::vector<qnp::Monomial> walk_monomials = qnp::enumerate_walk_monomials(g, o.length, policy);

  std::optional<qnp::MonomialIdeal> formula;
  bool agree = false;
  std::vector<qnp::Monomial> only_formula, only_walks;
  std::vector<std::string> warnings;
  if (o.compare_formula) {
    formula = qnp::generalized_graph_ideal(g, o.length + 1, o.b);
    auto in_set = [](const std::vector<qnp::Monomial>& set, const qnp::Monomial& m) {
      return std::find(set.begin(), set.end(), m) != set.end();
    };
    std::vector<qnp::Monomial> formula_gens(formula->generators().begin(),
                                            formula->generators().end());
    for (const auto& m : formula_gens)
      if (!in_set(walk_monomials, m)) only_formula.push_back(m);
    for (const auto& m : walk_monomials)
      if (!in_set(formula_gens, m)) only_walks.push_back(m);
    agree = only_formula.empty() && only_walks.empty();
    if (!agree)
      warnings.push_back("walk enumeration and composition formula disagree at length " +
                         std::to_string(o.length));
  }
  emit_warnings(warnings);

  if (o.json) {
    ordered_json doc;
    doc["shape"] = g.shape().sizes();
    doc["length"] = o.length;
    doc["policy"] = o.policy;
    doc["monotone"] = o.monotone == "on";
    doc["walk_monomials"] = json_exponent_rows(walk_monomials);
    if (formula) {
      doc["formula_generators"] = json_exponent_rows(formula->generators());
      doc["agreement"] = agree;
      doc["only_formula"] = json_exponent_rows(only_formula);
      doc["only_walks"] = json_exponent_rows(only_walks);
    }
    doc["warnings"] = warnings;
    std::cout << doc.dump() << "\n";
    return 0;
  }
  for (const auto& m : walk_monomials) std::cout << qnp::to_text(m) << "\n";
  if (formula) {
    std::cout << "# walk-monomials: " << walk_monomials.size() << "\n"
              << "# formula-generators: " << formula->size() << "\n"
              << "# agreement: " << (agree ? "yes" : "no") << "\n";
    for (const auto& m : only_formula) std::cout << "# only-formula: " << qnp::to_text(m) << "\n";
    for (const auto& m : only_walks) std::cout << "# only-walks: " << qnp::to_text(m) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"monomial ideals of strong quasi-n-partite graphs"};
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* sub, bool with_t) {
    sub->add_option("--graph", o.graph, "graph spec, e.g. \"shape=2,2;edges=complete\"");
    if (with_t) sub->add_option("--t", o.t, "degree t of the generalized graph ideal");
    sub->add_option("--b", o.b, "per-variable exponent cap (default 2)");
    sub->add_option("--ideal-file", o.ideal_file, "read the ideal from a file instead");
    sub->add_flag("--json", o.json, "emit JSON instead of text");
  };

  CLI::App* ideal = app.add_subcommand("ideal", "generalized graph ideal I_t");
  add_source(ideal, true);

  CLI::App* edge = app.add_subcommand("edge-ideal", "edge ideal (cross edges plus loops)");
  edge->add_option("--graph", o.graph, "graph spec")->required();
  edge->add_flag("--json", o.json, "emit JSON instead of text");

  CLI::App* pow = app.add_subcommand("power", "k-th power of the ideal");
  add_source(pow, true);
  pow->add_option("--k", o.k, "power exponent")->required();
  pow->add_option("--via", o.via, "evaluation route (default naive)")
      ->check(CLI::IsMember({"formula", "naive"}));

  CLI::App* col = app.add_subcommand("colon", "colon ideal I : u");
  add_source(col, true);
  col->add_option("--by", o.by, "monomial u, e.g. \"x[1,1]\"")->required();

  CLI::App* loc = app.add_subcommand("localize", "monomial localization at a prime");
  add_source(loc, true);
  loc->add_option("--prime", o.prime, "variable list, e.g. \"x[1,1],x[1,2]\"")->required();

  CLI::App* check = app.add_subcommand("check", "structure checkers");
  check->require_subcommand(1);
  CLI::App* chk_exchange = check->add_subcommand("exchange", "within-block exchange property");
  add_source(chk_exchange, true);
  CLI::App* chk_d1d2 = check->add_subcommand("d1d2", "subvector-closure axioms D1 and D2");
  add_source(chk_d1d2, true);
  chk_d1d2->add_option("--cap", o.cap, "closure size cap");
  CLI::App* chk_lq = check->add_subcommand("linear-quotients", "linear quotients of an ordering");
  add_source(chk_lq, true);
  chk_lq->add_option("--order", o.order, "canonical or search")
      ->check(CLI::IsMember({"canonical", "search"}));
  chk_lq->add_option("--budget", o.budget, "search node budget");

  CLI::App* cm = app.add_subcommand("cm", "vertex covers, height, dimension, CM verdict");
  cm->add_option("--graph", o.graph, "graph spec");
  cm->add_option("--ideal-file", o.ideal_file, "analyze an ideal from a file");
  cm->add_flag("--json", o.json, "emit JSON instead of text");

  CLI::App* walks = app.add_subcommand("walks", "walk-monomial oracle");
  walks->add_option("--graph", o.graph, "graph spec")->required();
  walks->add_option("--length", o.length, "walk length (>= 1)")->required();
  walks->add_option("--policy", o.policy, "trail or free (default trail)")
      ->check(CLI::IsMember({"trail", "free"}));
  walks->add_option("--monotone", o.monotone, "on or off (default on)")
      ->check(CLI::IsMember({"on", "off"}));
  walks->add_option("--b", o.b, "cap used by --compare-formula");
  walks->add_flag("--compare-formula", o.compare_formula,
                  "compare against the composition formula at t = length + 1");
  walks->add_flag("--json", o.json, "emit JSON instead of text");

  CLI::App* log = app.add_subcommand("log", "log set (exponent vectors) of an ideal");
  add_source(log, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(ideal)) return run_ideal(o);
    if (app.got_subcommand(edge)) return run_edge_ideal(o);
    if (app.got_subcommand(pow)) return run_power(o);
    if (app.got_subcommand(col)) return run_colon(o);
    if (app.got_subcommand(loc)) return run_localize(o);
    if (app.got_subcommand(check)) {
      if (check->got_subcommand(chk_exchange)) return run_check_exchange(o);
      if (check->got_subcommand(chk_d1d2)) return run_check_d1d2(o);
      if (check->got_subcommand(chk_lq)) return run_check_linear_quotients(o);
    }
    if (app.got_subcommand(cm)) return run_cm(o);
    if (app.got_subcommand(walks)) return run_walks(o);
    if (app.got_subcommand(log)) return run_log(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
