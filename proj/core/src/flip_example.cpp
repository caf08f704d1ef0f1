#include "coarse/flip_example.hpp"

namespace coarse {

GroupOps<FlipElement> flip_group_ops(int n) {
  return GroupOps<FlipElement>{
      FlipElement::identity(n),
      [](const FlipElement& a, const FlipElement& b) { return a.multiply(b); },
      [](const FlipElement& a) { return a.inverse(); },
  };
}

namespace {

std::vector<FlipElement> enumerate_flip_group(int n) {
  std::vector<FlipElement> out;
  const unsigned width = 2 * n + 1;
  for (int flip = 0; flip <= 1; ++flip)
    for (std::uint64_t bits = 0; bits < (UINT64_C(1) << width); ++bits) {
      std::vector<int> support;
      for (unsigned s = 0; s < width; ++s)
        if ((bits >> s) & 1u) support.push_back(static_cast<int>(s) - n);
      out.push_back(FlipElement::from_support(n, support, flip != 0));
    }
  return out;
}

} // namespace

std::shared_ptr<const GroupWindow<FlipElement>> flip_group_window(int n) {
  auto gw = std::make_shared<GroupWindow<FlipElement>>(GroupWindow<FlipElement>::make(
      enumerate_flip_group(n), flip_group_ops(n),
      [](const FlipElement& g) { return g.to_string(); }));
  return gw;
}

GradedBase<FlipElement> flip_example_base(int n, unsigned max_grade_j) {
  GradedBase<FlipElement> base;
  base.kind = "flip-example";
  base.max_grade = Grade{max_grade_j, 0};
  base.member = [n](const FlipElement& g, Grade grade) {
    if (g.flipped()) return false;
    return g.min_support() >= -static_cast<int>(std::min<unsigned>(grade.n, n));
  };
  base.enumerate = [n](Grade grade) {
    std::vector<FlipElement> out;
    const int m = -static_cast<int>(std::min<unsigned>(grade.n, n));
    const unsigned width = static_cast<unsigned>(n - m + 1);
    for (std::uint64_t bits = 0; bits < (UINT64_C(1) << width); ++bits) {
      std::vector<int> support;
      for (unsigned s = 0; s < width; ++s)
        if ((bits >> s) & 1u) support.push_back(m + static_cast<int>(s));
      out.push_back(FlipElement::from_support(n, support, false));
    }
    return out;
  };
  base.difference_grade = [](Grade a, Grade b) {
    return std::optional<Grade>(Grade{std::max(a.n, b.n), 0});
  };
  return base;
}

ObstructionReport flip_obstruction_check(int n) {
  ObstructionReport rep;
  const unsigned width = 2 * n + 1;
  const auto vec = [n](std::uint64_t bits) {
    std::vector<int> support;
    for (int i = -n; i <= n; ++i)
      if ((bits >> (i + n)) & 1u) support.push_back(i);
    return FlipElement::from_support(n, support, false);
  };

  // candidate nonnegative-support parts
  std::vector<FlipElement> h0;
  for (std::uint64_t bits = 0; bits < (UINT64_C(1) << (n + 1)); ++bits) {
    std::vector<int> support;
    for (int i = 0; i <= n; ++i)
      if ((bits >> i) & 1u) support.push_back(i);
    h0.push_back(FlipElement::from_support(n, support, false));
  }

  for (std::uint64_t bits = 0; bits < (UINT64_C(1) << width); ++bits) {
    const FlipElement v = vec(bits);
    ++rep.vectors_checked;
    bool split = false;
    for (const FlipElement& a : h0) {
      const FlipElement rest = v.multiply(a.inverse());
      if (rest.flipped()) continue;
      const auto support = rest.support();
      bool nonpositive = true;
      for (int i : support)
        if (i > 0) {
          nonpositive = false;
          break;
        }
      if (nonpositive) {
        split = true;
        if (rep.example_split.empty() && !a.is_identity() && !rest.is_identity())
          rep.example_split =
              v.to_string() + " = " + a.to_string() + " + " + rest.to_string();
        break;
      }
    }
    if (split)
      ++rep.splits_found;
    else
      rep.failures.push_back(v.to_string());
  }
  rep.pass = rep.failures.empty();
  return rep;
}

} // namespace coarse
