#include "qnp/cm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qnp {

namespace {

void check_proper(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument(std::string(op) + ": unit ideal");
}

/// Deduplicated, inclusion-minimal support masks; hitting those hits all.
std::vector<std::uint32_t> minimal_supports(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> supports;
  supports.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    std::uint32_t s = 0;
    for (std::size_t p = 0; p < g.exponents().size(); ++p)
      if (g.exponents()[p] > 0) s |= std::uint32_t{1} << p;
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s : supports) {
    bool dominated = false;
    for (std::uint32_t k : kept)
      if ((k & s) == k) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

} // namespace

std::vector<VertexCover> minimal_vertex_covers(const MonomialIdeal& ideal) {
  check_proper(ideal, "minimal_vertex_covers");
  const BlockShape& shape = ideal.shape();
  const int n_vars = shape.total();
  if (n_vars > 24)
    throw std::invalid_argument("minimal_vertex_covers: exhaustive search capped at 24 variables");

  const auto supports = minimal_supports(ideal);
  auto is_cover = [&](std::uint32_t mask) {
    for (std::uint32_t s : supports)
      if ((s & mask) == 0) return false;
    return true;
  };

  std::vector<std::uint32_t> covers;
  const std::uint32_t all = (std::uint32_t{1} << n_vars) - 1;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    if (!is_cover(mask)) continue;
    bool minimal = true;
    for (std::uint32_t rest = mask; rest && minimal; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (is_cover(mask & ~bit)) minimal = false;
    }
    if (minimal) covers.push_back(mask);
  }

  std::vector<VertexCover> out;
  out.reserve(covers.size());
  for (std::uint32_t mask : covers) {
    VertexCover c{shape, {}, true};
    for (int p = 0; p < n_vars; ++p)
      if (mask >> p & 1) c.members.push_back(variable_at(shape, p));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const VertexCover& a, const VertexCover& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

int height(const MonomialIdeal& ideal) {
  auto covers = minimal_vertex_covers(ideal);
  return static_cast<int>(covers.front().members.size());
}

int quotient_dimension(const MonomialIdeal& ideal) {
  return ideal.shape().total() - height(ideal);
}

CmVerdict cm_analysis(const MonomialIdeal& ideal) {
  CmVerdict v;
  v.covers = minimal_vertex_covers(ideal);
  v.height = static_cast<int>(v.covers.front().members.size());
  v.total_variables = ideal.shape().total();
  v.dimension = v.total_variables - v.height;
  v.status = v.dimension == 0 ? CmStatus::CohenMacaulay : CmStatus::Undetermined;
  return v;
}

CmVerdict cohen_macaulay_verdict(const StrongQuasiGraph& g) {
  return cm_analysis(edge_ideal(g));
}

} // namespace qnp
