#pragma once
// Unbounded natural numbers with a machine-word fast path.
//
// All stream values, cell contents and coding arithmetic in the lab use Value.
// Small values (< 2^64) never allocate. Large values are immutable shared limb
// vectors, so copies are cheap. Results beyond kMaxBits raise ValueOverflow,
// which callers surface as an explicit trap, never as a wrong answer.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlab {

struct ValueOverflow : std::runtime_error {
  ValueOverflow() : std::runtime_error("value overflow") {}
};
struct DivByZero : std::runtime_error {
  DivByZero() : std::runtime_error("division by zero") {}
};

class Value {
 public:
  static constexpr std::size_t kMaxBits = 32768;

  Value() = default;
  Value(uint64_t v) : lo_(v) {}  // NOLINT: implicit by design, used pervasively

  bool is_small() const { return big_ == nullptr; }
  // Valid only when is_small(); callers use try_u64 otherwise.
  uint64_t small() const { return lo_; }
  bool try_u64(uint64_t& out) const {
    if (big_) return false;
    out = lo_;
    return true;
  }
  bool is_zero() const { return !big_ && lo_ == 0; }

  static int cmp(const Value& a, const Value& b) {
    if (!a.big_ && !b.big_) return a.lo_ < b.lo_ ? -1 : (a.lo_ > b.lo_ ? 1 : 0);
    std::vector<uint64_t> sa, sb;
    const std::vector<uint64_t>&la = limbs_of(a, sa), &lb = limbs_of(b, sb);
    if (la.size() != lb.size()) return la.size() < lb.size() ? -1 : 1;
    for (std::size_t i = la.size(); i-- > 0;)
      if (la[i] != lb[i]) return la[i] < lb[i] ? -1 : 1;
    return 0;
  }
  friend bool operator==(const Value& a, const Value& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return cmp(a, b) >= 0; }

  static Value add(const Value& a, const Value& b) {
    if (!a.big_ && !b.big_) {
      uint64_t s;
      if (!__builtin_add_overflow(a.lo_, b.lo_, &s)) return Value(s);
    }
    std::vector<uint64_t> r = a.limbs_copy(), sb;
    const std::vector<uint64_t>& lb = limbs_of(b, sb);
    if (r.size() < lb.size()) r.resize(lb.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned __int128 s = carry + r[i] + (i < lb.size() ? lb[i] : 0);
      r[i] = static_cast<uint64_t>(s);
      carry = s >> 64;
    }
    if (carry) r.push_back(static_cast<uint64_t>(carry));
    return from_limbs(std::move(r));
  }

  // Truncated subtraction: max(a - b, 0).
  static Value sub(const Value& a, const Value& b) {
    if (cmp(a, b) <= 0) return Value(0);
    if (!a.big_) return Value(a.lo_ - b.lo_);
    std::vector<uint64_t> r = a.limbs_copy(), sb;
    const std::vector<uint64_t>& lb = limbs_of(b, sb);
    unsigned __int128 borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned __int128 d = (unsigned __int128)r[i] - (i < lb.size() ? lb[i] : 0) - borrow;
      r[i] = static_cast<uint64_t>(d);
      borrow = (d >> 64) ? 1 : 0;
    }
    return from_limbs(std::move(r));
  }

  static Value mul(const Value& a, const Value& b) {
    if (!a.big_ && !b.big_) {
      unsigned __int128 p = (unsigned __int128)a.lo_ * b.lo_;
      if ((p >> 64) == 0) return Value(static_cast<uint64_t>(p));
    }
    if (a.is_zero() || b.is_zero()) return Value(0);
    std::vector<uint64_t> sa, sb;
    const std::vector<uint64_t>&la = limbs_of(a, sa), &lb = limbs_of(b, sb);
    if (la.size() + lb.size() > kMaxBits / 64 + 1) throw ValueOverflow();
    std::vector<uint64_t> r(la.size() + lb.size(), 0);
    for (std::size_t i = 0; i < la.size(); ++i) {
      unsigned __int128 carry = 0;
      for (std::size_t j = 0; j < lb.size(); ++j) {
        unsigned __int128 cur = (unsigned __int128)la[i] * lb[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
      }
      std::size_t k = i + lb.size();
      while (carry) {
        unsigned __int128 cur = carry + r[k];
        r[k] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
        ++k;
      }
    }
    return from_limbs(std::move(r));
  }

  static void divmod(const Value& a, const Value& b, Value& q, Value& r) {
    if (b.is_zero()) throw DivByZero();
    if (!a.big_ && !b.big_) {
      q = Value(a.lo_ / b.lo_);
      r = Value(a.lo_ % b.lo_);
      return;
    }
    if (cmp(a, b) < 0) {
      q = Value(0);
      r = a;
      return;
    }
    uint64_t bs;
    if (b.try_u64(bs)) {  // big / small: one pass from the top limb
      std::vector<uint64_t> sa;
      const std::vector<uint64_t>& la = limbs_of(a, sa);
      std::vector<uint64_t> ql(la.size(), 0);
      unsigned __int128 rem = 0;
      for (std::size_t i = la.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | la[i];
        ql[i] = static_cast<uint64_t>(cur / bs);
        rem = cur % bs;
      }
      q = from_limbs(std::move(ql));
      r = Value(static_cast<uint64_t>(rem));
      return;
    }
    // big / big: binary long division (rare; operands stay desk-scale).
    Value quot(0), rem(0);
    std::size_t n = a.bit_length();
    for (std::size_t i = n; i-- > 0;) {
      rem = shl(rem, 1);
      if (a.get_bit(i)) rem = add(rem, Value(1));
      if (cmp(rem, b) >= 0) {
        rem = sub(rem, b);
        quot = set_bit(quot, i);
      }
    }
    q = quot;
    r = rem;
  }
  static Value div(const Value& a, const Value& b) {
    Value q, r;
    divmod(a, b, q, r);
    return q;
  }
  static Value mod(const Value& a, const Value& b) {
    Value q, r;
    divmod(a, b, q, r);
    return r;
  }

  static Value shl(const Value& a, std::size_t k) {
    if (a.is_zero()) return a;
    if (!a.big_ && k < 64 && (k == 0 || (a.lo_ >> (64 - k)) == 0))
      return Value(a.lo_ << k);
    if (a.bit_length() + k > kMaxBits) throw ValueOverflow();
    std::vector<uint64_t> sa;
    const std::vector<uint64_t>& la = limbs_of(a, sa);
    std::size_t limb_shift = k / 64, bit_shift = k % 64;
    std::vector<uint64_t> r(la.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < la.size(); ++i) {
      r[i + limb_shift] |= bit_shift ? (la[i] << bit_shift) : la[i];
      if (bit_shift) r[i + limb_shift + 1] |= la[i] >> (64 - bit_shift);
    }
    return from_limbs(std::move(r));
  }

  static Value shr(const Value& a, std::size_t k) {
    if (!a.big_) return k >= 64 ? Value(0) : Value(a.lo_ >> k);
    const std::vector<uint64_t>& la = *a.big_;
    std::size_t limb_shift = k / 64, bit_shift = k % 64;
    if (limb_shift >= la.size()) return Value(0);
    std::vector<uint64_t> r(la.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = la[i + limb_shift] >> bit_shift;
      if (bit_shift && i + limb_shift + 1 < la.size())
        r[i] |= la[i + limb_shift + 1] << (64 - bit_shift);
    }
    return from_limbs(std::move(r));
  }

  std::size_t bit_length() const {
    if (!big_) return lo_ ? 64 - __builtin_clzll(lo_) : 0;
    const std::vector<uint64_t>& l = *big_;
    return (l.size() - 1) * 64 + (64 - __builtin_clzll(l.back()));
  }

  bool get_bit(std::size_t i) const {
    if (!big_) return i < 64 && ((lo_ >> i) & 1);
    std::size_t limb = i / 64;
    if (limb >= big_->size()) return false;
    return ((*big_)[limb] >> (i % 64)) & 1;
  }

  static Value set_bit(const Value& a, std::size_t i) {
    if (i + 1 > kMaxBits) throw ValueOverflow();
    if (!a.big_ && i < 63) return Value(a.lo_ | (uint64_t{1} << i));
    std::vector<uint64_t> r = a.limbs_copy();
    if (r.size() <= i / 64) r.resize(i / 64 + 1, 0);
    r[i / 64] |= uint64_t{1} << (i % 64);
    return from_limbs(std::move(r));
  }

  // Floor of the square root, by the classic bit-pair method (shift/sub only).
  static Value isqrt(const Value& n) {
    if (!n.big_) {
      uint64_t x = n.lo_;
      if (x == 0) return Value(0);
      uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
      while (r > 0 && (unsigned __int128)r * r > x) --r;
      while ((unsigned __int128)(r + 1) * (r + 1) <= x) ++r;
      return Value(r);
    }
    std::size_t shift = n.bit_length();
    shift += shift & 1;
    Value res(0), rem(0);
    // Digit-by-digit in base 4.
    for (std::size_t i = shift; i >= 2; i -= 2) {
      rem = shl(rem, 2);
      if (n.get_bit(i - 1)) rem = add(rem, Value(2));
      if (n.get_bit(i - 2)) rem = add(rem, Value(1));
      Value cand = add(shl(res, 2), Value(1));
      res = shl(res, 1);
      if (cmp(rem, cand) >= 0) {
        rem = sub(rem, cand);
        res = add(res, Value(1));
      }
    }
    return res;
  }

  std::string to_string() const {
    if (!big_) return std::to_string(lo_);
    Value cur = *this;
    std::string out;
    const Value chunk(10000000000000000000ull);  // 10^19
    while (!cur.is_zero()) {
      Value q, r;
      divmod(cur, chunk, q, r);
      std::string part = std::to_string(r.small());
      if (!q.is_zero()) part = std::string(19 - part.size(), '0') + part;
      out = part + out;
      cur = q;
    }
    return out.empty() ? "0" : out;
  }

  static Value parse(const std::string& s) {
    Value acc(0);
    const Value ten(10);
    for (char c : s) {
      if (c < '0' || c > '9') throw std::runtime_error("bad number literal");
      acc = add(mul(acc, ten), Value(static_cast<uint64_t>(c - '0')));
    }
    return acc;
  }

  std::size_t hash() const {
    if (!big_) return std::hash<uint64_t>{}(lo_);
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t limb : *big_) h = (h ^ limb) * 0x100000001b3ull;
    return h;
  }

 private:
  uint64_t lo_ = 0;
  std::shared_ptr<const std::vector<uint64_t>> big_;

  static const std::vector<uint64_t>& limbs_of(const Value& v,
                                               std::vector<uint64_t>& stash) {
    if (v.big_) return *v.big_;
    stash.assign(1, v.lo_);
    return stash;
  }
  std::vector<uint64_t> limbs_copy() const {
    if (big_) return *big_;
    return {lo_};
  }
  static Value from_limbs(std::vector<uint64_t> l) {
    while (!l.empty() && l.back() == 0) l.pop_back();
    if (l.empty()) return Value(0);
    if (l.size() == 1) return Value(l[0]);
    if (l.size() > kMaxBits / 64) throw ValueOverflow();
    Value v;
    v.big_ = std::make_shared<const std::vector<uint64_t>>(std::move(l));
    return v;
  }
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace wlab
