#include "coarse/window.hpp"

#include "coarse/errors.hpp"

namespace coarse {

Window::Window(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ConfigError("window must be nonempty");
  for (PointId i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) throw ConfigError("duplicate window point '" + labels_[i] + "'");
  }
}

std::shared_ptr<const Window> Window::from_labels(std::vector<std::string> labels) {
  return std::shared_ptr<const Window>(new Window(std::move(labels)));
}

std::shared_ptr<const Window> Window::integer_path(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return from_labels(std::move(labels));
}

std::shared_ptr<const Window> Window::integer_grid(std::size_t rows, std::size_t cols) {
  std::vector<std::string> labels;
  labels.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      labels.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
  return from_labels(std::move(labels));
}

std::optional<PointId> Window::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_window(const WindowPtr& a, const WindowPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

} // namespace coarse
