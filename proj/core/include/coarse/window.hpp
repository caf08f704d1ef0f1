#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coarse {

using PointId = std::uint32_t;

/// Finite ordered sample of a (possibly infinite) space. Every computation in
/// this library is relative to one of these. Point order is fixed at
/// construction, which makes all derived outputs reproducible.
class Window {
public:
  static std::shared_ptr<const Window> from_labels(std::vector<std::string> labels);

  /// Points x0..x{n-1} standing for the integer segment [0, n).
  static std::shared_ptr<const Window> integer_path(std::size_t n);

  /// Points p{i}_{j} standing for the grid [0, rows) x [0, cols).
  static std::shared_ptr<const Window> integer_grid(std::size_t rows, std::size_t cols);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(PointId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<PointId> find(std::string_view label) const;

  bool operator==(const Window& other) const { return labels_ == other.labels_; }

private:
  explicit Window(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::map<std::string, PointId, std::less<>> index_;
};

using WindowPtr = std::shared_ptr<const Window>;

/// True when both handles denote the same point set in the same order.
bool same_window(const WindowPtr& a, const WindowPtr& b);

} // namespace coarse
