#include "coarse/word_norm.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace coarse {

namespace {

std::string pack(const ReducedWord& w) {
  std::string out;
  out.reserve(w.length());
  for (const auto& l : w.letters())
    out.push_back(static_cast<char>((l.point << 1) | (l.sign > 0 ? 0 : 1)));
  return out;
}

struct SearchState {
  const std::vector<WordFactor>* pool = nullptr;
  std::vector<ReducedWord> factor_inverses;
  std::vector<unsigned> factor_lengths;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool budget_hit = false;
  unsigned threshold = 0;
  std::unordered_set<std::string> dead; // (packed word, depth) pairs at this threshold
  std::vector<std::size_t> path;
};

} // namespace

WordNormContext::WordNormContext(std::shared_ptr<ApNormContext> ap, SearchLimits limits)
    : ap_(std::move(ap)), limits_(limits) {}

const std::vector<WordFactor>& WordNormContext::factor_pool(unsigned r) {
  auto it = pools_.find(r);
  if (it != pools_.end()) return it->second;

  const ReducedWord z = ReducedWord::generator(ap_->z());
  std::vector<ReducedWord> cores;
  for (const ReducedWord& d : word_difference_set(ap_->filtration(), r)) {
    cores.push_back(d);
    cores.push_back(d.multiply(z));            // D z: how singletons enter
    cores.push_back(z.inverse().multiply(d));  // the inverses of D z, keeping
                                               // the factor set symmetric
  }
  std::sort(cores.begin(), cores.end(), shortlex_less);
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());

  const auto conjugators =
      enumerate_reduced_words(ap_->window()->size(), limits_.max_conj_len);

  std::vector<WordFactor> pool;
  std::unordered_set<std::string> seen;
  for (const ReducedWord& c : cores) {
    if (c.is_identity()) continue;
    for (const ReducedWord& g : conjugators) {
      WordFactor f{g, c};
      const ReducedWord v = f.value();
      if (v.is_identity()) continue;
      if (seen.insert(pack(v)).second) pool.push_back(std::move(f));
    }
  }
  std::sort(pool.begin(), pool.end(), [](const WordFactor& a, const WordFactor& b) {
    return shortlex_less(a.value(), b.value());
  });
  return pools_.emplace(r, std::move(pool)).first->second;
}

unsigned WordNormContext::abelian_lower(const ReducedWord& w, unsigned r,
                                        bool& unreachable) {
  const NormResult res = ap_->oracle(w.abelianized(ap_->p()), r);
  unsigned n = 0;
  if (res.exact_value(n)) {
    unreachable = false;
    return n;
  }
  unreachable = true;
  return 0;
}

namespace {

// depth-first stage of the iterative deepening: can rem be written with at
// most `left` pool factors, given an admissible heuristic?
bool dfs(WordNormContext& ctx, SearchState& st, const ReducedWord& rem, unsigned left,
         unsigned r) {
  if (rem.is_identity()) return true;
  if (left == 0) return false;
  if (st.budget_hit) return false;

  bool unreachable = false;
  const unsigned h = ctx.abelian_lower(rem, r, unreachable);
  if (unreachable || h > left) return false;

  const unsigned max_len = st.factor_lengths.back();
  if (rem.length() > static_cast<std::size_t>(left) * max_len) return false;

  const std::string key = pack(rem) + static_cast<char>(left);
  if (st.dead.contains(key)) return false;

  if (++st.nodes > st.budget) {
    st.budget_hit = true;
    return false;
  }

  const auto& pool = *st.pool;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    // pool is length-sorted: once |f| exceeds what left-1 factors can cancel
    // back down from, no later factor can start a factorization of rem
    if (st.factor_lengths[i] > rem.length() + (left - 1) * max_len) break;
    const ReducedWord next = st.factor_inverses[i].multiply(rem);
    st.path.push_back(i);
    if (dfs(ctx, st, next, left - 1, r)) return true;
    st.path.pop_back();
  }
  st.dead.insert(key);
  return false;
}

} // namespace

WordNormReport WordNormContext::bounds(const ReducedWord& w, unsigned r) {
  WordNormReport rep;
  rep.lower = abelian_lower(w, r, rep.lower_unreachable);
  if (rep.lower_unreachable) {
    rep.result = NormResult::not_within_limits(r, NormResult::Method::Search);
    return rep;
  }
  if (w.is_identity()) {
    rep.upper = 0;
    rep.result = NormResult::exact(0, r, NormResult::Method::Search);
    return rep;
  }

  const auto& pool = factor_pool(r);
  if (pool.empty()) {
    rep.result =
        NormResult::not_within_limits(r, NormResult::Method::Search, rep.lower);
    return rep;
  }
  SearchState st;
  st.pool = &pool;
  st.budget = limits_.node_budget;
  for (const auto& f : pool) {
    const ReducedWord v = f.value();
    st.factor_lengths.push_back(static_cast<unsigned>(v.length()));
    st.factor_inverses.push_back(v.inverse());
  }

  for (unsigned t = std::max(rep.lower, 1u); t <= limits_.max_n && !st.budget_hit;
       ++t) {
    st.threshold = t;
    st.dead.clear();
    st.path.clear();
    if (dfs(*this, st, w, t, r)) {
      rep.upper = static_cast<unsigned>(st.path.size());
      for (std::size_t i : st.path) rep.certificate.push_back(pool[i]);
      break;
    }
  }
  rep.nodes = st.nodes;
  rep.budget_hit = st.budget_hit;
  if (rep.upper)
    rep.result = NormResult::interval(rep.lower, *rep.upper, r,
                                      NormResult::Method::Search);
  else
    rep.result =
        NormResult::not_within_limits(r, NormResult::Method::Search, rep.lower);
  return rep;
}

} // namespace coarse
