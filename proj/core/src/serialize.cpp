#include "coarse/serialize.hpp"

namespace coarse {

using nlohmann::json;

json entourage_to_json(const Entourage& e) {
  json pairs = json::array();
  const auto& w = *e.window();
  for (auto [x, y] : e.pairs()) pairs.push_back({w.label(x), w.label(y)});
  return json{{"window", w.labels()}, {"pairs", pairs}};
}

json ap_element_to_json(const ApElement& a, const Window& w) {
  json coeffs = json::object();
  for (const auto& [x, m] : a.terms()) coeffs[w.label(x)] = m;
  return json{{"p", a.p()}, {"coeffs", coeffs}};
}

json word_to_json(const ReducedWord& u, const Window& w) {
  json letters = json::array();
  for (const auto& l : u.letters())
    letters.push_back({w.label(l.point), static_cast<int>(l.sign)});
  return json{{"letters", letters}};
}

json flip_element_to_json(const FlipElement& g) {
  return json{{"support", g.support()}, {"flip", g.flipped()}};
}

json norm_result_to_json(const NormResult& r) {
  json out{{"status", r.status_string()},
           {"method", r.method_string()},
           {"radius", r.radius}};
  if (r.status == NormResult::Status::NotWithinLimits) {
    out["lower"] = r.lo;
  } else {
    out["lower"] = r.lo;
    out["upper"] = *r.hi;
  }
  return out;
}

json modulus_to_json(const Modulus& m) {
  json out = json::array();
  for (unsigned r = 0; r < m.image_radius.size(); ++r)
    out.push_back({r, m.image_radius[r]});
  return out;
}

} // namespace coarse
