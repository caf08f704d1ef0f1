#include "coarse/parse.hpp"

#include <cctype>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

// longest window label starting at pos; labels are not prefixes of digits so
// greedy longest-match resolves p0_1 vs p0_10 style collisions
std::optional<std::pair<PointId, std::size_t>> match_label(std::string_view s,
                                                           std::size_t pos,
                                                           const Window& w) {
  std::optional<std::pair<PointId, std::size_t>> best;
  for (PointId x = 0; x < w.size(); ++x) {
    const std::string& label = w.label(x);
    if (s.substr(pos, label.size()) == label)
      if (!best || label.size() > best->second) best = {{x, label.size()}};
  }
  return best;
}

} // namespace

ApElement parse_ap_element(std::string_view text, const Window& w, unsigned p) {
  std::vector<ApElement::Term> terms;
  std::size_t pos = skip_spaces(text, 0);
  if (pos >= text.size()) throw ParseError("empty element", pos);
  if (text.substr(pos, 1) == "0" && skip_spaces(text, pos + 1) >= text.size())
    return ApElement::zero(p);

  bool negate = false;
  while (true) {
    pos = skip_spaces(text, pos);
    unsigned coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = coeff * 10 + static_cast<unsigned>(text[pos] - '0');
        if (coeff > 1000000) throw ParseError("coefficient too large", pos);
        ++pos;
      }
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    const auto label = match_label(text, pos, w);
    if (!label) throw ParseError("expected a window point label", pos);
    pos += label->second;
    if (negate) coeff = coeff % p == 0 ? 0 : p - coeff % p;
    terms.push_back({label->first, coeff});

    pos = skip_spaces(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == '+')
      negate = false;
    else if (text[pos] == '-')
      negate = true;
    else
      throw ParseError("expected '+' or '-'", pos);
    ++pos;
  }
  return ApElement::from_terms(p, std::move(terms));
}

ReducedWord parse_word(std::string_view text, const Window& w) {
  std::vector<ReducedWord::Letter> letters;
  std::size_t pos = skip_spaces(text, 0);
  if (pos >= text.size()) throw ParseError("empty word", pos);
  if (text.substr(pos, 1) == "e" && skip_spaces(text, pos + 1) >= text.size() &&
      !match_label(text, pos, w))
    return ReducedWord::identity();

  while (pos < text.size()) {
    pos = skip_spaces(text, pos);
    if (pos >= text.size()) break;
    const auto label = match_label(text, pos, w);
    if (!label) throw ParseError("expected a window point label", pos);
    pos += label->second;
    int sign = +1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (text.substr(pos, 2) == "-1") {
        sign = -1;
        pos += 2;
      } else if (text.substr(pos, 2) == "+1") {
        pos += 2;
      } else {
        throw ParseError("expected exponent -1 or +1", pos);
      }
    }
    letters.push_back({label->first, static_cast<std::int8_t>(sign)});
  }
  return ReducedWord::from_letters(letters);
}

} // namespace coarse
