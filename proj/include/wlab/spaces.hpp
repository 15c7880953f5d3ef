#pragma once
// Stream encodings of the object kinds instances range over.
//
// Conventions, used consistently by generators, witness programs and checkers:
//
//  * Linear / quasi orders on naturals: the name q has q(pair(a,b)) nonzero
//    iff a <= b. Strictness is "a <= b and not b <= a"; for linear orders
//    antisymmetry makes that "a <= b and a != b".
//  * Enumeration streams (open sets / c.e. sets): value 0 pads, value v+1
//    enumerates v. A co-enumeration stream enumerates the complement.
//  * Limit streams: q(pair(t,k)) is entry k of the t-th approximation; the
//    named point is the pointwise limit over t, when it exists.
//  * Trees: the name is the characteristic stream of the node set under flat
//    sequence codes; indices that decode to no sequence read 0. A tree-family
//    name packs tree n at row n: member(n, node) = q(pair(n, flat(node))).
//  * Node order ("kb"): descendants sit below ancestors, siblings' subtrees
//    are ordered by the first differing entry. Codes that are not well-formed
//    nodes sit above all well-formed ones, ordered among themselves by value.
//
// Host-side mirrors here are the reference implementations that witness
// bytecode is tested against.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/codes.hpp"
#include "wlab/point.hpp"

namespace wlab {

// 0 equal, 1 first difference favors a, 2 favors b, 3 a proper prefix of b,
// 4 b proper prefix of a.
inline int seq_compare(const std::vector<Value>& a,
                       const std::vector<Value>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return 1;
    if (b[i] < a[i]) return 2;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? 3 : 4;
}

inline bool kb_leq_seqs(const std::vector<Value>& s,
                        const std::vector<Value>& t) {
  int c = seq_compare(s, t);
  return c == 0 || c == 1 || c == 4;
}

inline bool kb_leq_codes(const Value& s, const Value& t) {
  auto ds = flat_decode(s), dt = flat_decode(t);
  if (!ds) return dt ? false : s <= t;
  if (!dt) return true;
  return kb_leq_seqs(*ds, *dt);
}

// ---- name constructors ----

inline PointPtr lo_name_point(std::function<bool(const Value&, const Value&)> leq,
                              std::string label = "lo") {
  return make_point(
      [leq = std::move(leq)](const Value& i) -> Value {
        Value a, b;
        unpair(i, a, b);
        return leq(a, b) ? Value(1) : Value(0);
      },
      std::move(label));
}

inline PointPtr tree_name_point(
    std::function<bool(const std::vector<Value>&)> member,
    std::string label = "tree") {
  return make_point(
      [member = std::move(member)](const Value& i) -> Value {
        auto seq = flat_decode(i);
        if (!seq) return Value(0);
        return member(*seq) ? Value(1) : Value(0);
      },
      std::move(label));
}

// Tree family: row n is the tree of family member n.
inline PointPtr tree_family_point(
    std::function<bool(const Value&, const std::vector<Value>&)> member,
    std::string label = "trees") {
  return make_point(
      [member = std::move(member)](const Value& i) -> Value {
        Value n, j;
        unpair(i, n, j);
        auto seq = flat_decode(j);
        if (!seq) return Value(0);
        return member(n, *seq) ? Value(1) : Value(0);
      },
      std::move(label));
}

// ---- name accessors ----

inline bool lo_leq(Point& name, const Value& a, const Value& b) {
  return !name.at(pair(a, b)).is_zero();
}
inline bool lo_less(Point& name, const Value& a, const Value& b) {
  return lo_leq(name, a, b) && !lo_leq(name, b, a);
}
inline bool tree_contains(Point& name, const std::vector<Value>& node) {
  return !name.at(flat_encode(node)).is_zero();
}
inline bool tree_family_contains(Point& name, const Value& n,
                                 const std::vector<Value>& node) {
  return !name.at(pair(n, flat_encode(node))).is_zero();
}

// Values enumerated within the first `budget` entries of an enumeration
// stream (0 pads, v+1 enumerates v).
inline std::set<uint64_t> enumerated_prefix(Point& name, uint64_t budget) {
  std::set<uint64_t> out;
  for (uint64_t i = 0; i < budget; ++i) {
    Value v = name.at(i);
    if (v.is_zero()) continue;
    uint64_t u;
    if (v.try_u64(u)) out.insert(u - 1);
  }
  return out;
}

// The domain of an order name is the set of reflexive elements.
inline bool lo_in_domain(Point& name, const Value& a) {
  return lo_leq(name, a, a);
}

// ---- window validators ----
// Checks run over a finite element set restricted to the name's domain and
// report the first violated axiom with its witnesses.

inline std::optional<std::string> lo_check(Point& name,
                                           const std::vector<Value>& window) {
  std::vector<Value> dom;
  for (const Value& x : window)
    if (lo_in_domain(name, x)) dom.push_back(x);
  for (const Value& x : dom)
    for (const Value& y : dom) {
      if (x == y) continue;
      bool xy = lo_leq(name, x, y), yx = lo_leq(name, y, x);
      if (!xy && !yx)
        return "totality fails on (" + x.to_string() + "," + y.to_string() + ")";
      if (xy && yx)
        return "antisymmetry fails on (" + x.to_string() + "," + y.to_string() +
               ")";
    }
  for (const Value& x : dom)
    for (const Value& y : dom)
      for (const Value& z : dom)
        if (lo_leq(name, x, y) && lo_leq(name, y, z) && !lo_leq(name, x, z))
          return "transitivity fails on (" + x.to_string() + "," +
                 y.to_string() + "," + z.to_string() + ")";
  return std::nullopt;
}

inline std::optional<std::string> qo_check(Point& name,
                                           const std::vector<Value>& window) {
  std::vector<Value> dom;
  for (const Value& x : window)
    if (lo_in_domain(name, x)) dom.push_back(x);
  for (const Value& x : dom)
    for (const Value& y : dom)
      for (const Value& z : dom)
        if (lo_leq(name, x, y) && lo_leq(name, y, z) && !lo_leq(name, x, z))
          return "transitivity fails on (" + x.to_string() + "," +
                 y.to_string() + "," + z.to_string() + ")";
  return std::nullopt;
}

inline std::vector<Value> index_window(uint64_t n) {
  std::vector<Value> w;
  w.reserve(n);
  for (uint64_t i = 0; i < n; ++i) w.emplace_back(i);
  return w;
}

inline std::optional<std::string> lo_check_window(Point& name, uint64_t n) {
  return lo_check(name, index_window(n));
}
inline std::optional<std::string> qo_check_window(Point& name, uint64_t n) {
  return qo_check(name, index_window(n));
}

// Four-way comparison in a quasi-order.
enum class QoRel { Below, Above, Equivalent, Incomparable };
inline QoRel qo_classify(Point& name, const Value& a, const Value& b) {
  bool ab = lo_leq(name, a, b), ba = lo_leq(name, b, a);
  if (ab && ba) return QoRel::Equivalent;
  if (ab) return QoRel::Below;
  if (ba) return QoRel::Above;
  return QoRel::Incomparable;
}

}  // namespace wlab
