#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wlab/value.hpp"

using wlab::DivByZero;
using wlab::Value;
using wlab::ValueOverflow;

namespace {

std::vector<uint64_t> sample_values() {
  std::vector<uint64_t> vs = {0,  1,  2,  3,  7,  63,  64,  65,
                              (1ull << 32) - 1, 1ull << 32, (1ull << 32) + 1,
                              1ull << 63, ~0ull, ~0ull - 1};
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 24; ++i) vs.push_back(rng());
  return vs;
}

Value big_of(uint64_t seed, unsigned limbs) {
  // seed * 2^(64*limbs) + seed: guaranteed multi-limb for limbs >= 1.
  Value v = Value::shl(Value(seed ? seed : 1), 64 * limbs);
  return Value::add(v, Value(seed));
}

}  // namespace

TEST_CASE("small arithmetic agrees with native 128-bit arithmetic") {
  auto vs = sample_values();
  for (uint64_t a : vs) {
    for (uint64_t b : vs) {
      unsigned __int128 wa = a, wb = b;
      unsigned __int128 sum = wa + wb;
      Value s = Value::add(Value(a), Value(b));
      if ((sum >> 64) == 0) {
        REQUIRE(s == Value(static_cast<uint64_t>(sum)));
      } else {
        REQUIRE(s.bit_length() == 65);
        REQUIRE(Value::shr(s, 64) == Value(1));
      }
      REQUIRE(Value::sub(Value(a), Value(b)) == Value(a > b ? a - b : 0));
      unsigned __int128 prod = wa * wb;
      Value p = Value::mul(Value(a), Value(b));
      REQUIRE(Value::shr(p, 64) == Value(static_cast<uint64_t>(prod >> 64)));
      REQUIRE(Value::sub(p, Value::shl(Value::shr(p, 64), 64)) ==
              Value(static_cast<uint64_t>(prod)));
      if (b != 0) {
        REQUIRE(Value::div(Value(a), Value(b)) == Value(a / b));
        REQUIRE(Value::mod(Value(a), Value(b)) == Value(a % b));
      }
      int c = Value::cmp(Value(a), Value(b));
      REQUIRE(c == (a < b ? -1 : a > b ? 1 : 0));
    }
  }
}

TEST_CASE("multi-limb divmod satisfies the Euclidean identity") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    Value a = big_of(rng(), 1 + iter % 4);
    Value b = iter % 3 == 0 ? Value(rng() | 1) : big_of(rng(), 1 + iter % 2);
    Value q, r;
    Value::divmod(a, b, q, r);
    REQUIRE(r < b);
    REQUIRE(Value::add(Value::mul(q, b), r) == a);
  }
  REQUIRE_THROWS_AS(Value::div(Value(5), Value(0)), DivByZero);
  REQUIRE_THROWS_AS(Value::mod(big_of(9, 2), Value(0)), DivByZero);
}

TEST_CASE("shifts and bit access") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    uint64_t seed = rng();
    unsigned k = static_cast<unsigned>(rng() % 200);
    Value v(seed);
    Value shifted = Value::shl(v, k);
    REQUIRE(Value::shr(shifted, k) == v);
    REQUIRE(shifted.bit_length() == (seed ? v.bit_length() + k : 0));
    for (unsigned bit = 0; bit < 64; ++bit)
      REQUIRE(shifted.get_bit(bit + k) == (((seed >> bit) & 1) != 0));
    if (k > 0)
      for (unsigned bit = 0; bit < std::min(k, 64u); ++bit)
        REQUIRE_FALSE(shifted.get_bit(bit));
  }
  REQUIRE(Value::set_bit(Value(0), 100).bit_length() == 101);
  REQUIRE(Value::set_bit(Value(5), 1) == Value(7));
}

TEST_CASE("isqrt is the floor square root") {
  for (uint64_t n = 0; n <= 4096; ++n) {
    uint64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    REQUIRE(Value::isqrt(Value(n)) == Value(r));
  }
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 25; ++iter) {
    Value x = big_of(rng(), 1 + iter % 3);
    Value sq = Value::mul(x, x);
    REQUIRE(Value::isqrt(sq) == x);
    REQUIRE(Value::isqrt(Value::sub(sq, Value(1))) == Value::sub(x, Value(1)));
    REQUIRE(Value::isqrt(Value::add(sq, Value(1))) == x);
  }
}

TEST_CASE("decimal conversion round-trips") {
  REQUIRE(Value(0).to_string() == "0");
  REQUIRE(Value(18446744073709551615ull).to_string() == "18446744073709551615");
  REQUIRE(Value::shl(Value(1), 100).to_string() ==
          "1267650600228229401496703205376");
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    Value v = big_of(rng(), 1 + iter % 5);
    REQUIRE(Value::parse(v.to_string()) == v);
  }
  REQUIRE_THROWS(Value::parse("12x4"));
}

TEST_CASE("values past the size cap raise overflow instead of wrapping") {
  Value near = Value::shl(Value(1), Value::kMaxBits - 1);
  REQUIRE(near.bit_length() == Value::kMaxBits);
  REQUIRE_THROWS_AS(Value::shl(near, 1), ValueOverflow);
  REQUIRE_THROWS_AS(Value::mul(near, Value(2)), ValueOverflow);
  REQUIRE_THROWS_AS(Value::set_bit(Value(0), Value::kMaxBits), ValueOverflow);
  REQUIRE_THROWS_AS(Value::add(near, near), ValueOverflow);
  // Addition staying at the cap is fine.
  REQUIRE(Value::add(near, Value(1)).bit_length() == Value::kMaxBits);
}

TEST_CASE("hashing is representation-independent") {
  Value a(12345);
  Value b = Value::shr(Value::shl(Value(12345), 100), 100);
  REQUIRE(a == b);
  REQUIRE(a.hash() == b.hash());
  REQUIRE(b.is_small());
}
