#pragma once

#include <json.hpp>

#include "coarse/ap_element.hpp"
#include "coarse/entourage.hpp"
#include "coarse/flip_group.hpp"
#include "coarse/maps.hpp"
#include "coarse/norm.hpp"
#include "coarse/reduced_word.hpp"

namespace coarse {

/// JSON shapes used by reports and the CLI. Everything is rendered through
/// window labels so artifacts stay readable and stable across runs.
nlohmann::json entourage_to_json(const Entourage& e);
nlohmann::json ap_element_to_json(const ApElement& a, const Window& w);
nlohmann::json word_to_json(const ReducedWord& u, const Window& w);
nlohmann::json flip_element_to_json(const FlipElement& g);
nlohmann::json norm_result_to_json(const NormResult& r);
nlohmann::json modulus_to_json(const Modulus& m);

} // namespace coarse
