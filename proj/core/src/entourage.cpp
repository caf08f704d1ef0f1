#include "coarse/entourage.hpp"

#include "coarse/errors.hpp"

namespace coarse {

Entourage Entourage::diagonal(WindowPtr w) {
  BitRel rel(w->size());
  rel.set_diagonal();
  return Entourage(std::move(w), std::move(rel));
}

Entourage Entourage::full(WindowPtr w) {
  BitRel rel(w->size());
  rel.fill();
  return Entourage(std::move(w), std::move(rel));
}

Entourage Entourage::from_pairs(WindowPtr w,
                                std::span<const std::pair<PointId, PointId>> pairs) {
  BitRel rel(w->size());
  rel.set_diagonal();
  for (auto [x, y] : pairs) {
    if (x >= w->size() || y >= w->size())
      throw Error("entourage pair out of window range");
    rel.set(x, y);
  }
  return Entourage(std::move(w), std::move(rel));
}

Entourage Entourage::from_rel(WindowPtr w, BitRel rel) {
  if (rel.size() != w->size()) throw Error("relation size does not match window");
  rel.set_diagonal();
  return Entourage(std::move(w), std::move(rel));
}

Entourage Entourage::compose(const Entourage& d) const {
  if (!same_window(window_, d.window_))
    throw Error("compose: entourages live on different windows");
  return Entourage(window_, rel_.compose(d.rel_));
}

Entourage Entourage::inverse() const { return Entourage(window_, rel_.transposed()); }

Entourage Entourage::symmetrized() const {
  return Entourage(window_, rel_.united(rel_.transposed()));
}

Entourage Entourage::united(const Entourage& d) const {
  if (!same_window(window_, d.window_))
    throw Error("union: entourages live on different windows");
  return Entourage(window_, rel_.united(d.rel_));
}

Entourage Entourage::intersected(const Entourage& d) const {
  if (!same_window(window_, d.window_))
    throw Error("intersection: entourages live on different windows");
  return Entourage(window_, rel_.intersected(d.rel_));
}

Entourage Entourage::power(unsigned n) const {
  Entourage acc = diagonal(window_);
  for (unsigned i = 0; i < n; ++i) acc = acc.compose(*this);
  return acc;
}

bool Entourage::symmetric() const { return rel_ == rel_.transposed(); }

std::vector<PointId> Entourage::ball(PointId x) const {
  if (x >= window_->size()) throw Error("ball: point outside window");
  std::vector<PointId> out;
  for (std::size_t j : rel_.row_members(x)) out.push_back(static_cast<PointId>(j));
  return out;
}

std::vector<std::pair<PointId, PointId>> Entourage::pairs() const {
  std::vector<std::pair<PointId, PointId>> out;
  out.reserve(pair_count());
  for (PointId i = 0; i < window_->size(); ++i)
    for (std::size_t j : rel_.row_members(i))
      out.emplace_back(i, static_cast<PointId>(j));
  return out;
}

bool Entourage::operator==(const Entourage& d) const {
  return same_window(window_, d.window_) && rel_ == d.rel_;
}

Entourage compose(const Entourage& e, const Entourage& d) { return e.compose(d); }
Entourage inverse(const Entourage& e) { return e.inverse(); }
Entourage symmetrize(const Entourage& e) { return e.symmetrized(); }
std::vector<PointId> ball(PointId x, const Entourage& e) { return e.ball(x); }

} // namespace coarse
