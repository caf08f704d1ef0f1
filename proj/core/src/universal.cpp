#include "coarse/universal.hpp"

#include "coarse/errors.hpp"
#include "coarse/group_window.hpp"
#include "coarse/hom.hpp"

namespace coarse {

namespace {

GroupWindow<ApElement> ap_group_window(ApNormContext& ctx) {
  std::vector<ApElement> elements;
  elements.reserve(ctx.codec().size());
  for (std::uint64_t code = 0; code < ctx.codec().size(); ++code)
    elements.push_back(ctx.codec().decode(code));
  auto window = ctx.window();
  return GroupWindow<ApElement>::make(
      std::move(elements), ap_group_ops(ctx.p()),
      [window](const ApElement& a) { return a.to_string(*window); });
}

} // namespace

UniversalReport universal_extension_check(const std::vector<ApElement>& images,
                                          std::shared_ptr<ApNormContext> source,
                                          std::shared_ptr<ApNormContext> target,
                                          Grade source_range, Grade target_range) {
  UniversalReport rep;
  rep.source_range = source_range;
  rep.target_range = target_range;

  const std::size_t n = source->window()->size();
  if (images.size() != n) throw Error("map not total on the source window");
  const unsigned p = source->p();
  if (target->p() != p) throw Error("source and target exponents differ");
  const auto ops = ap_group_ops(p);

  // f as a coarse map from the base space into the target coarse group
  {
    auto gw = ap_group_window(*target);
    auto y = ap_y_base(target, target_range);
    Filtration target_space =
        filtration_from_ideal(y, gw, std::max(target_range.n, target_range.r),
                              /*validate=*/false);
    PointMap f;
    for (const ApElement& img : images) {
      auto idx = gw.index_of(img);
      if (!idx) throw Error("image outside the target window");
      f.push_back(*idx);
    }
    const auto mod = coarse_modulus(f, source->filtration(), target_space,
                                    std::min<unsigned>(source_range.r,
                                                       source->filtration()
                                                           .materialized_radius()));
    rep.premap_coarse = mod.ok();
    if (!mod.ok() && mod.failure)
      rep.premap_witness = "no image level at radius " +
                           std::to_string(mod.failure->radius) + " for pair (" +
                           source->window()->label(mod.failure->x) + ", " +
                           source->window()->label(mod.failure->y) + ")";
  }

  // h(a) for every source element, by the extension homomorphism
  std::vector<ApElement> image_of(source->codec().size(), ApElement::zero(p));
  for (std::uint64_t code = 0; code < source->codec().size(); ++code)
    image_of[code] =
        hom_image<ApElement>(source->codec().decode(code), images, ops);

  bool total = true;
  for (unsigned ns = 0; ns <= source_range.n && total; ++ns)
    for (unsigned rs = 0; rs <= source_range.r && total; ++rs) {
      std::optional<Grade> found;
      for (unsigned rt = 0; rt <= target_range.r && !found; ++rt) {
        unsigned needed = 0;
        bool feasible = true;
        for (std::uint64_t code = 0; code < source->codec().size() && feasible;
             ++code) {
          if (!source->member(source->codec().decode(code), Grade{ns, rs})) continue;
          const NormResult res = target->oracle(image_of[code], rt);
          unsigned value = 0;
          if (!res.exact_value(value) || value > target_range.n)
            feasible = false;
          else
            needed = std::max(needed, value);
        }
        if (feasible) found = Grade{needed, rt};
      }
      if (found) {
        rep.modulus.push_back({ns, rs, found->n, found->r});
      } else {
        total = false;
        rep.counterexample = "source grade (" + std::to_string(ns) + "," +
                             std::to_string(rs) +
                             ") has no containing target grade within (" +
                             std::to_string(target_range.n) + "," +
                             std::to_string(target_range.r) + ")";
      }
    }

  rep.pass = rep.premap_coarse && total;
  return rep;
}

} // namespace coarse
