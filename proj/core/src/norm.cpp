#include "coarse/norm.hpp"

#include <algorithm>
#include <deque>

#include "coarse/errors.hpp"

namespace coarse {

std::string NormResult::status_string() const {
  switch (status) {
    case Status::Exact: return "exact";
    case Status::Interval: return "interval";
    default: return "not-within-limits";
  }
}

std::string NormResult::method_string() const {
  switch (method) {
    case Method::Oracle: return "oracle";
    case Method::TJoin: return "tjoin";
    default: return "search";
  }
}

ApElement z_shift_adjusted(const ApElement& a, PointId z) {
  const unsigned sigma = a.augmentation();
  return a.subtract(ApElement::single(a.p(), z, sigma));
}

std::vector<ApElement> ap_difference_set(const Filtration& f, unsigned r, unsigned p) {
  const Entourage e = f.level(r).symmetrized();
  const std::size_t n = f.window()->size();
  std::vector<ApElement> out;
  for (PointId x = 0; x < n; ++x)
    for (PointId y : e.ball(x))
      out.push_back(ApElement::unit(p, x).subtract(ApElement::unit(p, y)));
  std::sort(out.begin(), out.end(), [](const ApElement& a, const ApElement& b) {
    return a.terms() < b.terms();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ReducedWord> word_difference_set(const Filtration& f, unsigned r) {
  const Entourage e = f.level(r).symmetrized();
  const std::size_t n = f.window()->size();
  std::vector<ReducedWord> out;
  for (PointId x = 0; x < n; ++x)
    for (PointId y : e.ball(x))
      out.push_back(
          ReducedWord::generator(x).multiply(ReducedWord::generator(y, -1)));
  std::sort(out.begin(), out.end(), shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ApNormContext::ApNormContext(Filtration f, unsigned p, PointId z,
                             std::uint64_t enum_budget)
    : f_(std::move(f)), z_(z), codec_(p, f_.window()->size(), enum_budget) {
  if (z_ >= f_.window()->size()) throw Error("distinguished point outside window");
}

const std::vector<std::int32_t>& ApNormContext::distance_table(unsigned r) {
  auto it = dist_tables_.find(r);
  if (it != dist_tables_.end()) return it->second;

  // generator codes at this radius, zero dropped (it never shortens a sum)
  std::vector<std::uint64_t> gens;
  for (const ApElement& g : ap_difference_set(f_, r, codec_.p()))
    if (!g.is_zero()) gens.push_back(codec_.encode(g));

  std::vector<std::int32_t> dist(codec_.size(), -1);
  dist[0] = 0;
  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    for (std::uint64_t g : gens) {
      const std::uint64_t nxt = codec_.add(cur, g);
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        queue.push_back(nxt);
      }
    }
  }
  return dist_tables_.emplace(r, std::move(dist)).first->second;
}

const std::vector<std::vector<std::int32_t>>& ApNormContext::point_distances(unsigned r) {
  auto it = point_dists_.find(r);
  if (it != point_dists_.end()) return it->second;

  const Entourage e = f_.level(r).symmetrized();
  const std::size_t n = f_.window()->size();
  std::vector<std::vector<std::int32_t>> all(n, std::vector<std::int32_t>(n, -1));
  for (PointId s = 0; s < n; ++s) {
    auto& dist = all[s];
    dist[s] = 0;
    std::deque<PointId> queue{s};
    while (!queue.empty()) {
      const PointId cur = queue.front();
      queue.pop_front();
      for (PointId nxt : e.ball(cur))
        if (dist[nxt] < 0) {
          dist[nxt] = dist[cur] + 1;
          queue.push_back(nxt);
        }
    }
  }
  return point_dists_.emplace(r, std::move(all)).first->second;
}

NormResult ApNormContext::oracle(const ApElement& a, unsigned r) {
  const ApElement adjusted = z_shift_adjusted(a, z_);
  const std::int32_t d = distance_table(r)[codec_.encode(adjusted)];
  if (d < 0) return NormResult::not_within_limits(r, NormResult::Method::Oracle);
  return NormResult::exact(static_cast<unsigned>(d), r, NormResult::Method::Oracle);
}

NormResult ApNormContext::tjoin(const ApElement& a, unsigned r) {
  if (codec_.p() != 2) return oracle(a, r);
  const ApElement adjusted = z_shift_adjusted(a, z_);
  std::vector<PointId> support;
  for (const auto& [x, m] : adjusted.terms()) support.push_back(x);
  if (support.size() % 2 != 0)
    throw Error("internal: odd support after z-adjustment");
  if (support.empty()) return NormResult::exact(0, r, NormResult::Method::TJoin);

  const auto& pd = point_distances(r);
  std::vector<std::vector<std::int64_t>> dist(support.size(),
                                              std::vector<std::int64_t>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j)
      dist[i][j] = pd[support[i]][support[j]];

  const auto match = min_weight_perfect_matching(dist);
  if (!match) return NormResult::not_within_limits(r, NormResult::Method::TJoin);
  return NormResult::exact(static_cast<unsigned>(match->weight), r,
                           NormResult::Method::TJoin);
}

bool ApNormContext::member(const ApElement& a, Grade g) {
  const NormResult res = oracle(a, g.r);
  unsigned n = 0;
  return res.exact_value(n) && n <= g.n;
}

bool ap_ideal_member(ApNormContext& ctx, const ApElement& a, unsigned n, unsigned r) {
  return ctx.member(a, Grade{n, r});
}

GradedBase<ApElement> ap_y_base(std::shared_ptr<ApNormContext> ctx, Grade max_grade) {
  GradedBase<ApElement> base;
  base.kind = "free-abelian";
  base.max_grade = max_grade;
  base.member = [ctx](const ApElement& a, Grade g) { return ctx->member(a, g); };
  base.enumerate = [ctx](Grade g) {
    std::vector<ApElement> out;
    for (std::uint64_t code = 0; code < ctx->codec().size(); ++code) {
      const ApElement a = ctx->codec().decode(code);
      if (ctx->member(a, g)) out.push_back(a);
    }
    return out;
  };
  base.difference_grade = [ctx](Grade a, Grade b) {
    return std::optional<Grade>(Grade{a.n + b.n, ctx->filtration().comp_bound(a.r, b.r)});
  };
  return base;
}

GradedBase<ReducedWord> pullback_base(std::shared_ptr<ApNormContext> ctx,
                                      Grade max_grade) {
  GradedBase<ReducedWord> base;
  base.kind = "pullback";
  base.max_grade = max_grade;
  const unsigned p = ctx->p();
  base.member = [ctx, p](const ReducedWord& w, Grade g) {
    return ctx->member(w.abelianized(p), g);
  };
  base.difference_grade = [ctx](Grade a, Grade b) {
    return std::optional<Grade>(Grade{a.n + b.n, ctx->filtration().comp_bound(a.r, b.r)});
  };
  return base;
}

GradedBase<ApElement> finite_sets_base(std::shared_ptr<ApNormContext> ctx) {
  GradedBase<ApElement> base;
  base.kind = "finite-sets";
  const std::uint64_t size = ctx->codec().size();
  base.max_grade = Grade{static_cast<unsigned>(size - 1), 0};
  base.member = [ctx](const ApElement& a, Grade g) {
    return ctx->codec().encode(a) <= g.n;
  };
  base.enumerate = [ctx, size](Grade g) {
    std::vector<ApElement> out;
    for (std::uint64_t code = 0; code <= std::min<std::uint64_t>(g.n, size - 1); ++code)
      out.push_back(ctx->codec().decode(code));
    return out;
  };
  return base;
}

GradedBase<ApElement> all_subsets_base(unsigned p, Grade max_grade) {
  GradedBase<ApElement> base;
  base.kind = "all-subsets";
  base.max_grade = max_grade;
  base.member = [p](const ApElement& a, Grade) { return a.p() == p; };
  base.difference_grade = [](Grade a, Grade b) {
    return std::optional<Grade>(Grade{std::max(a.n, b.n), std::max(a.r, b.r)});
  };
  return base;
}

RestrictionReport restriction_check(ApNormContext& ctx, unsigned rmax, unsigned nmax) {
  RestrictionReport rep;
  rep.rmax = rmax;
  rep.nmax = nmax;
  const std::size_t count = ctx.window()->size();
  const unsigned p = ctx.p();

  for (unsigned r = 1; r <= rmax; ++r) {
    const auto& table = ctx.distance_table(r);
    const Entourage sym = ctx.filtration().level(r).symmetrized();
    Entourage pow = Entourage::diagonal(ctx.window());
    for (unsigned n = 0; n <= nmax; ++n) {
      if (n > 0) pow = pow.compose(sym);
      for (PointId x = 0; x < count; ++x)
        for (PointId y = 0; y < count; ++y) {
          ++rep.pairs_checked;
          const ApElement diff =
              ApElement::unit(p, x).subtract(ApElement::unit(p, y));
          const std::int32_t norm = table[ctx.codec().encode(diff)];
          const bool in_base = norm >= 0 && static_cast<unsigned>(norm) <= n;
          const bool in_power = pow.contains(x, y);
          if (in_base != in_power) {
            rep.pass = false;
            rep.discrepancies.push_back({r, n, x, y, in_power});
          }
        }
    }
  }
  return rep;
}

} // namespace coarse
