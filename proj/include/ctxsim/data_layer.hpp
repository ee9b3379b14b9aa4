#pragma once

// Value comparators and the Count / Inter / Simil set operations. Every set
// operation is directed: the first argument is the query side and the result
// is 1 exactly when it is contained in the second.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ranges>
#include <string_view>

#include "ctxsim/ontology.hpp"
#include "ctxsim/score.hpp"

namespace ctxsim {

Score compare_boolean(bool a, bool b);

/// 1 - |a - b| / (|a| + |b|), with compare_number(0, 0) = 1.
Score compare_number(double a, double b);

/// Exact match after Unicode NFC normalization.
Score compare_text(std::string_view a, std::string_view b);

/// Kind-dispatched comparison; values of different kinds score 0.
Score compare_values(const Value& a, const Value& b);

/// Equality consistent with compare_values (text compared after NFC).
bool values_equal(const Value& a, const Value& b);

/// |a ∩ b| / |a|; 1 when `a` is empty. Elements within each range are
/// assumed distinct.
template <std::ranges::forward_range A, std::ranges::forward_range B,
          typename Eq = std::equal_to<>>
Score op_inter(const A& a, const B& b, Eq eq = {}) {
  const auto size_a = static_cast<std::size_t>(std::ranges::distance(a));
  if (size_a == 0) return Score::one();
  std::size_t shared = 0;
  for (const auto& x : a) {
    if (std::ranges::any_of(b, [&](const auto& y) { return eq(x, y); })) ++shared;
  }
  return Score(static_cast<double>(shared) / static_cast<double>(size_a));
}

/// Cardinality containment: 1 when |a| <= |b|, otherwise |b| / |a|.
inline Score op_count(std::size_t size_a, std::size_t size_b) {
  if (size_a <= size_b) return Score::one();
  return Score(static_cast<double>(size_b) / static_cast<double>(size_a));
}

template <std::ranges::sized_range A, std::ranges::sized_range B>
Score op_count(const A& a, const B& b) {
  return op_count(std::ranges::size(a), std::ranges::size(b));
}

/// Directed best-match mean: the average over x in `a` of the best
/// element_sim(x, y) over y in `b`. 1 when `a` is empty, 0 when only `b` is.
template <std::ranges::forward_range A, std::ranges::forward_range B, typename Sim>
  requires std::invocable<Sim&, std::ranges::range_reference_t<const A>,
                          std::ranges::range_reference_t<const B>>
Score op_simil(const A& a, const B& b, Sim&& element_sim) {
  if (std::ranges::empty(a)) return Score::one();
  if (std::ranges::empty(b)) return Score::zero();
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& x : a) {
    double best = 0.0;
    for (const auto& y : b) {
      best = std::max(best, Score(element_sim(x, y)).value());
    }
    total += best;
    ++count;
  }
  return Score(std::min(1.0, total / static_cast<double>(count)));
}

}  // namespace ctxsim
