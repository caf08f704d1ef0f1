#include "coarse/maps.hpp"

#include "coarse/errors.hpp"

namespace coarse {

bool Modulus::monotone() const {
  for (std::size_t i = 0; i + 1 < image_radius.size(); ++i)
    if (image_radius[i] > image_radius[i + 1]) return false;
  return true;
}

ModulusResult coarse_modulus(const PointMap& f, const Filtration& source,
                             const Filtration& target, unsigned range) {
  const std::size_t n = source.window()->size();
  if (f.size() != n) throw Error("coarse_modulus: map not total on source window");
  for (PointId y : f)
    if (y >= target.window()->size())
      throw Error("coarse_modulus: image outside target window");

  ModulusResult out;
  Modulus mod;
  const unsigned tmax = target.materialized_radius();
  for (unsigned r = 0; r <= range; ++r) {
    unsigned best = mod.image_radius.empty() ? 0 : mod.image_radius.back();
    bool found = false;
    for (unsigned rp = best; rp <= tmax && !found; ++rp) {
      bool ok = true;
      for (PointId x = 0; x < n && ok; ++x)
        for (PointId y : source.level(r).ball(x))
          if (!target.level(rp).contains(f[x], f[y])) {
            ok = false;
            break;
          }
      if (ok) {
        mod.image_radius.push_back(rp);
        found = true;
      }
    }
    if (!found) {
      // report the first pair whose image escapes the largest tested level
      for (PointId x = 0; x < n; ++x)
        for (PointId y : source.level(r).ball(x))
          if (!target.level(tmax).contains(f[x], f[y])) {
            out.failure = ModulusFailure{r, x, y};
            return out;
          }
    }
  }
  out.modulus = std::move(mod);
  return out;
}

AsymorphismReport check_asymorphism(const PointMap& f, const Filtration& source,
                                    const Filtration& target, unsigned range) {
  AsymorphismReport rep;
  const std::size_t n = source.window()->size();
  const std::size_t m = target.window()->size();
  if (f.size() != n) throw Error("check_asymorphism: map not total on source window");

  std::vector<std::optional<PointId>> preimage(m);
  for (PointId x = 0; x < n; ++x) {
    if (f[x] >= m) throw Error("check_asymorphism: image outside target window");
    if (preimage[f[x]]) {
      rep.collision = std::make_pair(*preimage[f[x]], x);
      return rep;
    }
    preimage[f[x]] = x;
  }
  if (n != m) return rep; // injective but not onto
  rep.bijective = true;

  PointMap inv(m);
  for (PointId y = 0; y < m; ++y) inv[y] = *preimage[y];

  rep.forward = coarse_modulus(f, source, target, range);
  rep.backward = coarse_modulus(inv, target, source, range);
  rep.pass = rep.forward.ok() && rep.backward.ok();
  return rep;
}

CoarseEquivalenceReport check_coarse_equivalence_witness(
    std::span<const PointId> y_source, std::span<const PointId> y_target,
    const PointMap& f_on_subsets, const Filtration& source, const Filtration& target,
    unsigned range) {
  CoarseEquivalenceReport rep;
  rep.large_source = is_large(source, y_source);
  rep.large_target = is_large(target, y_target);
  Filtration sub_source = restrict(source, y_source);
  Filtration sub_target = restrict(target, y_target);
  rep.asym = check_asymorphism(f_on_subsets, sub_source, sub_target, range);
  rep.pass = rep.large_source.large && rep.large_target.large && rep.asym.pass;
  return rep;
}

} // namespace coarse
