#include "fxgy/blocks.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "fxgy/error.hpp"

namespace fxgy {

namespace {

struct MpzHash {
  std::size_t operator()(const BigInt& v) const {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    const int n = std::abs(z->_mp_size);
    for (int i = 0; i < n; ++i) h = h * 1000003u ^ static_cast<std::size_t>(z->_mp_d[i]);
    return h;
  }
};

struct Subset {
  std::vector<std::int64_t> elems;  // ascending
};

BigInt product_of(const std::vector<std::int64_t>& v) {
  BigInt p = 1;
  for (auto e : v) p *= static_cast<long>(e);
  return p;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::string_view class_name(DivClass c) {
  switch (c) {
    case DivClass::KDividesL: return "k-div-l";
    case DivClass::KDivides2L: return "k-div-2l";
    case DivClass::Sporadic: return "k-ndiv-2l";
  }
  return "?";
}

DivClass parse_class(std::string_view text) {
  if (text == "k|l" || text == "k-div-l") return DivClass::KDividesL;
  if (text == "k|2l" || text == "k-div-2l") return DivClass::KDivides2L;
  if (text == "k-ndiv-2l") return DivClass::Sporadic;
  throw Error(ErrorCode::InvalidInput, "unknown divisibility class '" + std::string(text) + "'");
}

DivClass classify_degrees_pair(int k, int l) {
  if (l % k == 0) return DivClass::KDividesL;
  if ((2 * l) % k == 0) return DivClass::KDivides2L;
  return DivClass::Sporadic;
}

DivClass classify_instance(const BlockProductInstance& inst) {
  return classify_degrees_pair(static_cast<int>(inst.chosen_a.size()), static_cast<int>(inst.chosen_b.size()));
}

bool verify_instance(const BlockProductInstance& inst, int N) {
  const auto& a = inst.chosen_a;
  const auto& b = inst.chosen_b;
  if (a.empty() || a.size() >= b.size()) return false;
  if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  if (a.front() != inst.a_lo || a.back() != inst.a_hi || b.front() != inst.b_lo || b.back() != inst.b_hi) return false;
  if (inst.a_lo < 1 || inst.b_lo < 1) return false;
  if (inst.a_hi - inst.a_lo + 1 > N || inst.b_hi - inst.b_lo + 1 > N) return false;
  if (!(inst.a_hi < inst.b_lo || inst.b_hi < inst.a_lo)) return false;
  BigInt pa = product_of(a), pb = product_of(b);
  return pa == pb && pa == inst.product && classify_instance(inst) == inst.divisibility;
}

std::vector<BlockProductInstance> search(int N, int max_start, int k_max, int l_max) {
  if (N < 1 || max_start < 1 || k_max < 0 || l_max < 1) throw Error(ErrorCode::InvalidInput, "blocks: arguments must be positive");
  if (N > 12) throw Error(ErrorCode::ResourceBoundExceeded, "blocks: N exceeds 12");
  if (max_start > 10000) throw Error(ErrorCode::ResourceBoundExceeded, "blocks: max-start exceeds 10^4");
  if (!(k_max < l_max && l_max <= N)) throw Error(ErrorCode::ResourceBoundExceeded, "blocks: need kmax < lmax <= N");

  if (k_max == 0) return {};

  // Subsets with minimum lo are lo plus any (size-1)-subset of the next N-1.
  std::uint64_t per_start = 0;
  for (int size = 1; size <= l_max; ++size) per_start += binom(N - 1, size - 1);
  if (per_start * static_cast<std::uint64_t>(max_start) > kSubsetBudget) {
    throw Error(ErrorCode::ResourceBoundExceeded, "blocks: more than " + std::to_string(kSubsetBudget) + " subsets to index");
  }

  std::vector<Subset> subsets;
  std::unordered_map<BigInt, std::vector<std::size_t>, MpzHash> index;
  const unsigned full = 1u << (N - 1);
  for (std::int64_t lo = 1; lo <= max_start; ++lo) {
    for (unsigned mask = 0; mask < full; ++mask) {
      int size = 1 + __builtin_popcount(mask);
      if (size > l_max) continue;
      Subset s;
      s.elems.push_back(lo);
      for (int bit = 0; bit < N - 1; ++bit) {
        if (mask & (1u << bit)) s.elems.push_back(lo + bit + 1);
      }
      index[product_of(s.elems)].push_back(subsets.size());
      subsets.push_back(std::move(s));
    }
  }

  std::vector<BlockProductInstance> out;
  for (const auto& [product, ids] : index) {
    if (ids.size() < 2) continue;
    for (auto i : ids) {
      const auto& a = subsets[i].elems;
      if (static_cast<int>(a.size()) > k_max) continue;
      for (auto j : ids) {
        const auto& b = subsets[j].elems;
        if (b.size() <= a.size()) continue;
        if (!(a.back() < b.front() || b.back() < a.front())) continue;
        BlockProductInstance inst;
        inst.a_lo = a.front();
        inst.a_hi = a.back();
        inst.b_lo = b.front();
        inst.b_hi = b.back();
        inst.chosen_a = a;
        inst.chosen_b = b;
        inst.product = product_of(b);
        inst.divisibility = classify_instance(inst);
        if (product_of(a) != inst.product) throw Error(ErrorCode::InvalidInput, "blocks: product index corrupted");
        out.push_back(std::move(inst));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BlockProductInstance& x, const BlockProductInstance& y) {
    if (x.product != y.product) return x.product < y.product;
    if (x.a_lo != y.a_lo) return x.a_lo < y.a_lo;
    if (x.b_lo != y.b_lo) return x.b_lo < y.b_lo;
    if (x.chosen_a != y.chosen_a) return x.chosen_a < y.chosen_a;
    return x.chosen_b < y.chosen_b;
  });
  return out;
}

Census census(const std::vector<BlockProductInstance>& instances) {
  Census c;
  for (const auto& inst : instances) {
    ++c.by_class[inst.divisibility];
    ++c.by_sizes[{static_cast<int>(inst.chosen_a.size()), static_cast<int>(inst.chosen_b.size())}];
  }
  return c;
}

}  // namespace fxgy
