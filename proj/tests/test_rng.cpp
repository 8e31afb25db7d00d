#include <doctest.h>

#include <set>
#include <vector>

#include "hyperavg/rng.hpp"

using namespace hyperavg;

TEST_SUITE_BEGIN("rng");

TEST_CASE("splitmix64 reference outputs for seed 0") {
  // First four outputs of the reference implementation.
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xE220A8397B1DCDAFULL);
  CHECK(sm.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(sm.next() == 0x06C45D188009454FULL);
  CHECK(sm.next() == 0xF88BB8A8724C81ECULL);
}

TEST_CASE("xoshiro256++ first outputs under splitmix seeding") {
  Xoshiro256PlusPlus a(42);
  CHECK(a.next() == 0xD0764D4F4476689FULL);
  CHECK(a.next() == 0x519E4174576F3791ULL);
  CHECK(a.next() == 0xFBE07CFB0C24ED8CULL);
  CHECK(a.next() == 0xB37D9F600CD835B8ULL);

  Xoshiro256PlusPlus b(0);
  CHECK(b.next() == 0x53175D61490B23DFULL);
  CHECK(b.next() == 0x61DA6F3DC380D507ULL);
  CHECK(b.next() == 0x5C0FDF91EC9A7BFCULL);
  CHECK(b.next() == 0x02EEBF8C3BBE5E1AULL);
}

TEST_CASE("trial streams are deterministic and distinct") {
  auto a1 = stream_for_trial(7, 3);
  auto a2 = stream_for_trial(7, 3);
  auto b = stream_for_trial(7, 4);
  bool same = true, differ = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a1.next();
    same = same && x == a2.next();
    differ = differ || x != b.next();
  }
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("next_below stays in range and covers small supports") {
  Xoshiro256PlusPlus rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.next_below(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
  CHECK(rng.next_below(1) == 0);
}

TEST_CASE("next_symmetric lands in [-1, 1)") {
  Xoshiro256PlusPlus rng(2);
  double lo = 1.0, hi = -1.0;
  for (int i = 0; i < 5000; ++i) {
    const double v = rng.next_symmetric();
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // both halves get visited
  CHECK(lo < -0.5);
  CHECK(hi > 0.5);
}

TEST_CASE("weights stream tag does not collide with small trial indices") {
  const auto w = SplitMix64::at(9, kWeightsStreamTag);
  for (std::uint64_t k = 0; k < 1000; ++k) CHECK(w != SplitMix64::at(9, k));
}

TEST_SUITE_END();
