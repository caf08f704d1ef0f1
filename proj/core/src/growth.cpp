#include "coarse/growth.hpp"

#include "coarse/errors.hpp"

namespace coarse {

std::vector<GrowthRow> boundedness_growth(unsigned m_max, unsigned p) {
  std::vector<GrowthRow> rows;
  for (unsigned m = 1; m <= m_max; ++m) {
    ApNormContext ctx(bounded_filtration(Window::integer_path(2 * m)), p, 0);
    GrowthRow row;
    row.m = m;

    std::vector<ApElement::Term> terms;
    for (PointId x = 0; x < 2 * m; ++x) terms.push_back({x, 1});
    const ApElement full = ApElement::from_terms(p, std::move(terms));
    const NormResult fr = p == 2 ? ctx.tjoin(full, 0) : ctx.oracle(full, 0);
    if (!fr.exact_value(row.full_support_norm))
      throw Error("internal: full-support element unreachable on bounded window");

    unsigned max_norm = 0;
    for (std::uint64_t code = 0; code < ctx.codec().size(); ++code) {
      const NormResult res = ctx.oracle(ctx.codec().decode(code), 0);
      unsigned value = 0;
      if (!res.exact_value(value))
        throw Error("internal: element unreachable on bounded window");
      max_norm = std::max(max_norm, value);
    }
    row.max_norm = max_norm;
    rows.push_back(row);
  }
  return rows;
}

unsigned one_point_max_norm(unsigned p) {
  ApNormContext ctx(bounded_filtration(Window::integer_path(1)), p, 0);
  unsigned max_norm = 0;
  for (std::uint64_t code = 0; code < ctx.codec().size(); ++code) {
    const NormResult res = ctx.oracle(ctx.codec().decode(code), 0);
    unsigned value = 0;
    if (!res.exact_value(value))
      throw Error("internal: element unreachable on one-point window");
    max_norm = std::max(max_norm, value);
  }
  return max_norm;
}

} // namespace coarse
