#pragma once
// Order-statistic decoding over the most reliable basis.
//
// Pipeline: sort positions by |y| (stable), refine into an information set
// with gauss_jordan_systematic, hard-decide the first k permuted positions,
// re-encode r xor e for every test error pattern e, keep the candidate with
// the smallest correlation discrepancy (sum of |y'| over positions that
// disagree with the hard decision -- an exact reformulation of squared
// Euclidean distance ranking), and restore the winner through kappa^-1.
//
// TEP enumeration order is canonical and deterministic: weight classes
// ascending; a full weight class in lexicographic support order; the partial
// class of a fractional order best-first by reliability sum of the flipped
// positions, ties broken lexicographically on the ascending support tuple.
// Two lists with the same fractional class therefore share a literal prefix.

#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "urllc/code.hpp"
#include "urllc/combinatorics.hpp"
#include "urllc/gf2.hpp"

namespace urllc {

// Equal-distance candidates: keep the first found in enumeration order, or
// prefer the lexicographically smallest TEP support.
enum class TieBreak { first_found, lowest_index_pattern };

struct DecoderConfig {
  Order s;                  // reprocessing order, 0 <= s <= k
  std::size_t q_bits = 8;   // quantizer resolution (complexity accounting only)
  TieBreak tie_break = TieBreak::first_found;
  // Stop enumerating once no remaining pattern can beat the incumbent (the
  // class-minimum reliability bound). Decisions are unchanged, but
  // teps_evaluated then undercounts the nominal list size, so complexity
  // accounting no longer matches the closed form; off by default.
  bool early_exit = false;
};

// Reliability sort + basis refinement for one received vector.
struct SortResult {
  Permutation kappa;
  BitMatrix g_sys;                   // [I_k | P]
  std::vector<double> y_perm;        // y reordered by kappa
  std::vector<double> reliabilities; // |y_perm|
  BitVec hard;                       // hard decisions of y_perm (y > 0 -> 1)
};
SortResult sort_reliabilities(const std::vector<double>& y, const BitMatrix& g);

using TepSupport = std::vector<std::uint16_t>;  // flipped MRB positions, ascending

namespace detail {

// All weight-w supports over {0..k-1} in lexicographic order. f returns
// false to stop.
template <class F>
void weight_class_lex(std::size_t k, int w, F&& f) {
  if ((std::size_t)w > k) return;
  TepSupport sup(w);
  for (int i = 0; i < w; ++i) sup[i] = std::uint16_t(i);
  for (;;) {
    if (!f(sup)) return;
    if (w == 0) return;
    int j = w - 1;
    while (j >= 0 && sup[j] == std::uint16_t(k - w + j)) --j;
    if (j < 0) return;
    ++sup[j];
    for (int i = j + 1; i < w; ++i) sup[i] = sup[j] + std::uint16_t(i - j);
  }
}

// The max_emit smallest weight-w supports by total reliability of the
// flipped positions, ties lexicographic on the ascending support tuple.
// Slots index positions by ascending reliability (slot 0 = least reliable =
// MRB position k-1); successors advance one slot into a free higher slot,
// deduplicated, so every subset is reachable exactly once from {0..w-1}.
// f returns false to stop.
template <class F>
void weight_class_best_first(std::size_t k, int w, const std::vector<double>& rel,
                             std::uint64_t max_emit, F&& f) {
  if ((std::size_t)w > k || max_emit == 0) return;
  if (w == 0) {
    TepSupport empty;
    f(empty);
    return;
  }
  auto to_support = [&](const TepSupport& slots) {
    TepSupport s(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      s[slots.size() - 1 - i] = std::uint16_t(k - 1 - slots[i]);
    return s;
  };
  auto slot_sum = [&](const TepSupport& slots) {
    double t = 0;  // fixed order: rounding independent of generation path
    for (auto sl : slots) t += rel[k - 1 - sl];
    return t;
  };
  struct Node {
    double sum;
    TepSupport slots;    // ascending slot numbers
    TepSupport support;  // ascending MRB positions
  };
  auto worse = [](const Node& a, const Node& b) {  // min-heap
    if (a.sum != b.sum) return a.sum > b.sum;
    return a.support > b.support;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> heap(worse);
  std::set<TepSupport> seen;

  Node init;
  init.slots.resize(w);
  for (int i = 0; i < w; ++i) init.slots[i] = std::uint16_t(i);
  init.support = to_support(init.slots);
  init.sum = slot_sum(init.slots);
  seen.insert(init.slots);
  heap.push(std::move(init));

  std::uint64_t emitted = 0;
  while (emitted < max_emit && !heap.empty()) {
    Node top = heap.top();
    heap.pop();
    if (!f(top.support)) return;
    ++emitted;
    for (int i = 0; i < w; ++i) {
      std::uint16_t nxt = top.slots[i] + 1;
      if (nxt >= k) continue;
      if (i + 1 < w && nxt == top.slots[i + 1]) continue;  // slot occupied
      Node child;
      child.slots = top.slots;
      child.slots[i] = nxt;
      if (!seen.insert(child.slots).second) continue;
      child.support = to_support(child.slots);
      child.sum = slot_sum(child.slots);
      heap.push(std::move(child));
    }
  }
}

}  // namespace detail

// The TEP list of order s for k information positions with the given
// (descending) reliabilities. Patterns are streamed, not materialized.
struct TepList {
  std::size_t k = 0;
  Order s;
  BigInt count;                // exact list size
  int full_max_weight = 0;     // floor(s)
  std::uint64_t frac_count = 0;
  std::vector<double> rel;     // first-k reliabilities

  // f takes a TepSupport and returns false to stop enumeration
  template <class F>
  void for_each(F&& f) const {
    bool go = true;
    auto guard = [&](const TepSupport& sup) { return go = f(sup); };
    for (int w = 0; go && w <= full_max_weight; ++w)
      detail::weight_class_lex(k, w, guard);
    if (go && frac_count)
      detail::weight_class_best_first(k, full_max_weight + 1, rel, frac_count, guard);
  }
  // materialized prefix for tests and inspection
  std::vector<TepSupport> patterns(std::uint64_t limit = UINT64_MAX) const;
};
TepList build_tep_list(std::size_t k, const Order& s, const std::vector<double>& rel);

struct DecodeResult {
  BitVec info_bits;               // u with u G = decoded codeword
  BitVec codeword;                // decoded codeword, original column order
  double best_distance = 0;       // correlation discrepancy of the winner
  std::uint64_t teps_evaluated = 0;
  std::uint64_t measured_xor_ops = 0;  // 64-bit word XORs spent
};

// Per-code state reused across many decode calls.
struct DecoderContext {
  const LinearCode* code;
  InfoExtractor extractor;
  explicit DecoderContext(const LinearCode& c) : code(&c), extractor(c.g) {}
};

DecodeResult decode(const DecoderContext& ctx, const std::vector<double>& y,
                    const DecoderConfig& cfg);
DecodeResult decode(const LinearCode& code, const std::vector<double>& y,
                    const DecoderConfig& cfg);

// One pass at the largest order with snapshots at each requested order
// (orders ascending). Weight classes that occur fractionally in any of the
// requested orders are streamed best-first so each snapshot sees exactly the
// list of its own order; distances therefore match decode() per order.
std::vector<DecodeResult> decode_multi(const DecoderContext& ctx,
                                       const std::vector<double>& y,
                                       const std::vector<Order>& orders,
                                       std::size_t q_bits = 8);

// Near-ML reprocessing order of a code: min{ceil(d_min/4 - 1), k}.
Order required_order(std::size_t d_min, std::size_t k);
inline Order required_order(const LinearCode& c) { return required_order(c.d_min, c.k); }

}  // namespace urllc
