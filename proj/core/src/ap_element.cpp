#include "coarse/ap_element.hpp"

#include <algorithm>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

void require_prime(unsigned p) {
  if (p < 2) throw Error("modulus must be a prime >= 2");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("modulus " + std::to_string(p) + " is not prime");
}

} // namespace

ApElement ApElement::zero(unsigned p) {
  require_prime(p);
  return ApElement(p, {});
}

ApElement ApElement::single(unsigned p, PointId x, unsigned coeff) {
  require_prime(p);
  coeff %= p;
  if (coeff == 0) return ApElement(p, {});
  return ApElement(p, {{x, coeff}});
}

ApElement ApElement::from_terms(unsigned p, std::vector<Term> terms) {
  require_prime(p);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> folded;
  for (const auto& [x, m] : terms) {
    if (!folded.empty() && folded.back().first == x)
      folded.back().second = (folded.back().second + m) % p;
    else
      folded.push_back({x, m % p});
    if (folded.back().second == 0) folded.pop_back();
  }
  return ApElement(p, std::move(folded));
}

ApElement ApElement::add(const ApElement& other) const {
  if (p_ != other.p_)
    throw Error("modulus mismatch: " + std::to_string(p_) + " vs " +
                std::to_string(other.p_));
  std::vector<Term> out;
  out.reserve(support_.size() + other.support_.size());
  std::size_t i = 0, j = 0;
  while (i < support_.size() || j < other.support_.size()) {
    if (j == other.support_.size() ||
        (i < support_.size() && support_[i].first < other.support_[j].first)) {
      out.push_back(support_[i++]);
    } else if (i == support_.size() || other.support_[j].first < support_[i].first) {
      out.push_back(other.support_[j++]);
    } else {
      const unsigned m = (support_[i].second + other.support_[j].second) % p_;
      if (m != 0) out.push_back({support_[i].first, m});
      ++i;
      ++j;
    }
  }
  return ApElement(p_, std::move(out));
}

ApElement ApElement::negated() const {
  std::vector<Term> out = support_;
  for (auto& [x, m] : out) m = p_ - m;
  return ApElement(p_, std::move(out));
}

ApElement ApElement::scaled(unsigned k) const {
  k %= p_;
  std::vector<Term> out;
  if (k != 0)
    for (const auto& [x, m] : support_) out.push_back({x, (m * k) % p_});
  return ApElement(p_, std::move(out));
}

unsigned ApElement::augmentation() const {
  unsigned s = 0;
  for (const auto& [x, m] : support_) s = (s + m) % p_;
  return s;
}

unsigned ApElement::coefficient(PointId x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x,
                             [](const Term& t, PointId v) { return t.first < v; });
  if (it == support_.end() || it->first != x) return 0;
  return it->second;
}

std::string ApElement::to_string(const Window& w) const {
  if (support_.empty()) return "0";
  std::string out;
  for (const auto& [x, m] : support_) {
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m);
    out += w.label(x);
  }
  return out;
}

ApElement ap_add(const ApElement& a, const ApElement& b) { return a.add(b); }

ApCodec::ApCodec(unsigned p, std::size_t points, std::uint64_t budget)
    : p_(p), points_(points) {
  require_prime(p);
  std::uint64_t size = 1;
  pow_.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    pow_.push_back(size);
    if (size > budget / p)
      throw BudgetError("group enumeration " + std::to_string(p) + "^" +
                        std::to_string(points) + " exceeds budget " +
                        std::to_string(budget));
    size *= p;
  }
  size_ = size;
}

std::uint64_t ApCodec::encode(const ApElement& a) const {
  if (a.p() != p_) throw Error("codec modulus mismatch");
  std::uint64_t code = 0;
  for (const auto& [x, m] : a.terms()) {
    if (x >= points_) throw Error("element support outside codec window");
    code += pow_[x] * m;
  }
  return code;
}

ApElement ApCodec::decode(std::uint64_t code) const {
  std::vector<ApElement::Term> terms;
  for (std::size_t i = 0; i < points_; ++i) {
    const unsigned digit = static_cast<unsigned>(code % p_);
    code /= p_;
    if (digit != 0) terms.push_back({static_cast<PointId>(i), digit});
  }
  return ApElement::from_terms(p_, std::move(terms));
}

std::uint64_t ApCodec::add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < points_; ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += pow_[i] * ((da + db) % p_);
  }
  return out;
}

std::uint64_t ApCodec::negate(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < points_; ++i) {
    const std::uint64_t da = a % p_;
    a /= p_;
    if (da != 0) out += pow_[i] * (p_ - da);
  }
  return out;
}

std::uint64_t ApCodec::unit(PointId x, unsigned coeff) const {
  if (x >= points_) throw Error("point outside codec window");
  return pow_[x] * (coeff % p_);
}

unsigned ApCodec::augmentation(std::uint64_t a) const {
  unsigned s = 0;
  for (std::size_t i = 0; i < points_; ++i) {
    s = (s + static_cast<unsigned>(a % p_)) % p_;
    a /= p_;
  }
  return s;
}

} // namespace coarse
