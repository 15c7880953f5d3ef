#pragma once
// Two codings of finite sequences of naturals.
//
// 1. Pair-fold ("nested") codes: code(<>) = 0, code(s + [a]) = pair(code(s),a)+1.
//    Canonical and order-free, but the code length doubles per element, so it
//    is only used where sequences stay short.
//
// 2. Flat codes: concatenate Elias-gamma(v_i + 1) over the elements, then read
//    the bit string b as the number (2^|b| + b) - 1. Linear in total element
//    bits, so deep tree nodes stay machine-word sized when entries are small.
//    Every sequence has exactly one flat code; not every natural decodes.

#include <optional>
#include <vector>

#include "wlab/pairing.hpp"
#include "wlab/value.hpp"

namespace wlab {

// ---- pair-fold ----

inline Value nested_encode(const std::vector<Value>& xs) {
  Value c(0);
  for (const Value& x : xs) c = Value::add(pair(c, x), 1);
  return c;
}

inline std::vector<Value> nested_decode(const Value& code) {
  std::vector<Value> rev;
  Value c = code;
  while (!c.is_zero()) {
    Value rest, last;
    unpair(Value::sub(c, 1), rest, last);
    rev.push_back(last);
    c = rest;
  }
  return {rev.rbegin(), rev.rend()};
}

inline std::size_t nested_length(const Value& code) {
  std::size_t n = 0;
  Value c = code;
  while (!c.is_zero()) {
    c = unpair_left(Value::sub(c, 1));
    ++n;
  }
  return n;
}

// ---- flat ----

namespace detail {
// Appends gamma(m), m >= 1, to bits (most significant first).
inline void gamma_append(const Value& m, std::vector<bool>& bits) {
  std::size_t len = m.bit_length();
  for (std::size_t i = 0; i + 1 < len; ++i) bits.push_back(false);
  for (std::size_t i = len; i-- > 0;) bits.push_back(m.get_bit(i));
}
}  // namespace detail

inline Value flat_encode(const std::vector<Value>& xs) {
  std::vector<bool> bits;
  for (const Value& x : xs) detail::gamma_append(Value::add(x, 1), bits);
  Value v(1);
  for (bool b : bits) {
    v = Value::shl(v, 1);
    if (b) v = Value::add(v, 1);
  }
  return Value::sub(v, 1);
}

// Returns nullopt when n is not the code of any sequence.
inline std::optional<std::vector<Value>> flat_decode(const Value& n) {
  Value v = Value::add(n, 1);
  std::size_t len = v.bit_length();  // >= 1; leading 1 is a sentinel
  std::vector<Value> out;
  std::size_t i = len - 1;  // bits below the sentinel, MSB-first
  while (i > 0) {
    std::size_t zeros = 0;
    while (i > 0 && !v.get_bit(i - 1)) {
      ++zeros;
      --i;
    }
    if (i < zeros + 1) return std::nullopt;  // zero run hit the end
    Value m(0);
    for (std::size_t k = 0; k < zeros + 1; ++k) {
      m = Value::shl(m, 1);
      if (v.get_bit(i - 1)) m = Value::add(m, 1);
      --i;
    }
    out.push_back(Value::sub(m, 1));
  }
  return out;
}

inline std::vector<Value> flat_decode_or_throw(const Value& n) {
  auto d = flat_decode(n);
  if (!d) throw std::runtime_error("malformed flat sequence code");
  return *d;
}

// Small-vector conveniences used by generators and tests.
inline Value flat_encode_u64(const std::vector<uint64_t>& xs) {
  std::vector<Value> v(xs.begin(), xs.end());
  return flat_encode(v);
}
inline Value nested_encode_u64(const std::vector<uint64_t>& xs) {
  std::vector<Value> v(xs.begin(), xs.end());
  return nested_encode(v);
}

}  // namespace wlab
