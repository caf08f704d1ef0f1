#pragma once

#include <string_view>

#include "coarse/ap_element.hpp"
#include "coarse/reduced_word.hpp"

namespace coarse {

/// "x0+x2", "2x1+x3", "x0-x1" (minus folds to p-1 coefficients), "0".
/// Throws ParseError with the byte offset on malformed input.
ApElement parse_ap_element(std::string_view text, const Window& w, unsigned p);

/// Whitespace-separated letters with an optional ^-1 suffix: "x0 x1^-1";
/// "e" is the identity.
ReducedWord parse_word(std::string_view text, const Window& w);

} // namespace coarse
