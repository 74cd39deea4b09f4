#include "doctest.h"

#include "../oracles.hpp"
#include "fxgy/blocks.hpp"
#include "fxgy/error.hpp"

using namespace fxgy;

namespace {

std::vector<oracle::BlockKey> keys(const std::vector<BlockProductInstance>& v) {
  std::vector<oracle::BlockKey> out;
  for (const auto& i : v) out.push_back({i.chosen_a, i.chosen_b});
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const std::vector<oracle::BlockKey>& a, const std::vector<oracle::BlockKey>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify_degrees_pair(2, 3) == DivClass::KDivides2L);
  CHECK(classify_degrees_pair(1, 5) == DivClass::KDividesL);
  CHECK(classify_degrees_pair(3, 4) == DivClass::Sporadic);
  CHECK(parse_class("k-ndiv-2l") == DivClass::Sporadic);
  CHECK(parse_class(class_name(DivClass::KDivides2L)) == DivClass::KDivides2L);
  CHECK_THROWS_AS(parse_class("nonsense"), Error);
}

TEST_CASE("small search") {
  auto found = search(3, 20, 2, 3);
  auto it = std::find_if(found.begin(), found.end(), [](const BlockProductInstance& i) {
    return i.chosen_a == std::vector<std::int64_t>{14, 15} && i.chosen_b == std::vector<std::int64_t>{5, 6, 7};
  });
  REQUIRE(it != found.end());
  CHECK(it->product == 210);
  CHECK(it->divisibility == DivClass::KDivides2L);
  for (const auto& inst : found) {
    CHECK(verify_instance(inst, 3));
    CHECK(inst.divisibility == classify_instance(inst));
  }
  CHECK(keys(found) == oracle::block_products(3, 20, 2, 3));
  CHECK(search(1, 20, 0, 1).empty());
}

TEST_CASE("search against pairwise comparison") {
  CHECK(keys(search(4, 40, 3, 4)) == oracle::block_products(4, 40, 3, 4));
  CHECK(keys(search(5, 30, 2, 5)) == oracle::block_products(5, 30, 2, 5));
}

TEST_CASE("sporadic census at N = 4") {
  auto all = search(4, 100, 3, 4);
  std::size_t sporadic = 0;
  for (const auto& i : all) sporadic += i.divisibility == DivClass::Sporadic;
  CHECK(census(all).by_class[DivClass::Sporadic] == sporadic);
  std::size_t total = 0;
  for (const auto& [kl, n] : census(all).by_sizes) total += n;
  CHECK(total == all.size());
}

TEST_CASE("monotone in N and max_start") {
  auto a = keys(search(3, 20, 2, 3));
  auto b = keys(search(3, 40, 2, 3));
  auto c = keys(search(4, 40, 2, 3));
  auto d = keys(search(4, 40, 3, 4));
  CHECK(subset(a, b));
  CHECK(subset(b, c));
  CHECK(subset(c, d));
}

TEST_CASE("guards") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code([] { search(13, 10, 2, 3); }) == ErrorCode::ResourceBoundExceeded);
  CHECK(code([] { search(3, 10001, 2, 3); }) == ErrorCode::ResourceBoundExceeded);
  CHECK(code([] { search(3, 10, 3, 3); }) == ErrorCode::ResourceBoundExceeded);
  CHECK_THROWS_AS(search(0, 10, 1, 2), Error);
}
