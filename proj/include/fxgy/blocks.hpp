#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "fxgy/rational.hpp"

namespace fxgy {

enum class DivClass { KDividesL, KDivides2L, Sporadic };

/// "k-div-l" (k | l), "k-div-2l" (k | 2l but not k | l), "k-ndiv-2l" (k does
/// not divide 2l, sporadic).
std::string_view class_name(DivClass c);
/// Accepts the names above, "k|l" and "k|2l". Throws InvalidInput.
DivClass parse_class(std::string_view text);

DivClass classify_degrees_pair(int k, int l);

/// Equal products of k elements from block A and l elements from block B,
/// k < l. Blocks are the minimal spans of the chosen elements.
struct BlockProductInstance {
  std::int64_t a_lo = 0, a_hi = 0;
  std::int64_t b_lo = 0, b_hi = 0;
  std::vector<std::int64_t> chosen_a;
  std::vector<std::int64_t> chosen_b;
  BigInt product;
  DivClass divisibility = DivClass::KDividesL;
};

DivClass classify_instance(const BlockProductInstance& inst);

/// Recomputes both products and checks spans, disjointness and k < l.
bool verify_instance(const BlockProductInstance& inst, int N);

inline constexpr std::uint64_t kSubsetBudget = 4'000'000;

/// Every instance with spans <= N, block starts in [1, max_start],
/// k <= k_max, l <= l_max; sorted by (product, a_lo, b_lo, chosen sets).
/// Throws ResourceBoundExceeded when N > 12, max_start > 10^4, the guard
/// k_max < l_max <= N fails, or more than kSubsetBudget subsets would be
/// indexed; InvalidInput for nonpositive arguments. k_max = 0 (the default
/// for N = 1) gives no instances.
std::vector<BlockProductInstance> search(int N, int max_start, int k_max, int l_max);

/// Instance counts by class and by (k, l).
struct Census {
  std::map<DivClass, std::size_t> by_class;
  std::map<std::pair<int, int>, std::size_t> by_sizes;
};

Census census(const std::vector<BlockProductInstance>& instances);

}  // namespace fxgy
