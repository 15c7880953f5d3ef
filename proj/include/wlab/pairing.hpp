#pragma once
// Cantor pairing on naturals: pair(a,b) = (a+b)(a+b+1)/2 + b.
// pair(0,0)=0, pair(1,0)=1, pair(0,1)=2. Inverse goes through isqrt(8n+1).

#include "wlab/value.hpp"

namespace wlab {

inline Value pair(const Value& a, const Value& b) {
  Value s = Value::add(a, b);
  Value tri = Value::div(Value::mul(s, Value::add(s, 1)), 2);
  return Value::add(tri, b);
}

inline void unpair(const Value& n, Value& a, Value& b) {
  // w = floor((sqrt(8n+1)-1)/2) is the diagonal index.
  Value disc = Value::add(Value::mul(n, 8), 1);
  Value w = Value::div(Value::sub(Value::isqrt(disc), 1), 2);
  Value tri = Value::div(Value::mul(w, Value::add(w, 1)), 2);
  b = Value::sub(n, tri);
  a = Value::sub(w, b);
}

inline Value unpair_left(const Value& n) {
  Value a, b;
  unpair(n, a, b);
  return a;
}
inline Value unpair_right(const Value& n) {
  Value a, b;
  unpair(n, a, b);
  return b;
}

// u64 conveniences for host-side loops over small indices.
inline uint64_t pair_u64(uint64_t a, uint64_t b) {
  uint64_t p;
  if (!Value(pair(Value(a), Value(b))).try_u64(p))
    throw ValueOverflow();
  return p;
}
inline void unpair_u64(uint64_t n, uint64_t& a, uint64_t& b) {
  Value va, vb;
  unpair(Value(n), va, vb);
  va.try_u64(a);
  vb.try_u64(b);
}

}  // namespace wlab
