#include "coarse/reduced_word.hpp"

#include <algorithm>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

bool cancels(const ReducedWord::Letter& a, const ReducedWord::Letter& b) {
  return a.point == b.point && a.sign == -b.sign;
}

} // namespace

ReducedWord ReducedWord::generator(PointId x, int sign) {
  if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
  ReducedWord w;
  w.letters_.push_back({x, static_cast<std::int8_t>(sign)});
  return w;
}

ReducedWord ReducedWord::from_letters(std::span<const Letter> letters) {
  ReducedWord w;
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    if (!w.letters_.empty() && cancels(w.letters_.back(), l))
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

ReducedWord ReducedWord::multiply(const ReducedWord& v) const {
  ReducedWord out = *this;
  for (const Letter& l : v.letters_) {
    if (!out.letters_.empty() && cancels(out.letters_.back(), l))
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->point, static_cast<std::int8_t>(-it->sign)});
  return out;
}

ReducedWord ReducedWord::conjugated_by(const ReducedWord& g) const {
  return g.inverse().multiply(*this).multiply(g);
}

ReducedWord ReducedWord::cyclically_reduced() const {
  ReducedWord out = *this;
  while (out.letters_.size() >= 2 && cancels(out.letters_.back(), out.letters_.front())) {
    out.letters_.pop_back();
    out.letters_.erase(out.letters_.begin());
  }
  return out;
}

ApElement ReducedWord::abelianized(unsigned p) const {
  std::vector<ApElement::Term> terms;
  for (const Letter& l : letters_)
    terms.push_back({l.point, l.sign > 0 ? 1u : p - 1u});
  return ApElement::from_terms(p, std::move(terms));
}

std::string ReducedWord::to_string(const Window& w) const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += " ";
    out += w.label(l.point);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

ReducedWord word_multiply(const ReducedWord& u, const ReducedWord& v) {
  return u.multiply(v);
}

ReducedWord word_invert(const ReducedWord& u) { return u.inverse(); }

ApElement abelianize(const ReducedWord& w, unsigned p) { return w.abelianized(p); }

bool shortlex_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

std::vector<ReducedWord> enumerate_reduced_words(std::size_t points, std::size_t max_len) {
  std::vector<ReducedWord> all{ReducedWord::identity()};
  std::vector<ReducedWord> frontier = all;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& w : frontier)
      for (PointId x = 0; x < points; ++x)
        for (int sign : {+1, -1}) {
          ReducedWord v = w.multiply(ReducedWord::generator(x, sign));
          if (v.length() == len) next.push_back(v);
        }
    std::sort(next.begin(), next.end(), shortlex_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

} // namespace coarse
