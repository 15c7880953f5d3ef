#pragma once
// Points of Baire space: infinite Value streams, lazily computed and memoized.
//
// Every name that flows through the lab (instance names, oracle answers,
// transducer outputs) is a Point. Each Point carries a process-unique id so
// query transcripts can attribute reads. Generators must be deterministic:
// at(i) is memoized and a benign recompute returns the same value.

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlab/pairing.hpp"
#include "wlab/value.hpp"

namespace wlab {

// Raised when a stream cannot produce the requested index.
struct StreamBudget : std::runtime_error {
  explicit StreamBudget(const std::string& what) : std::runtime_error(what) {}
};
struct StreamTrap : std::runtime_error {
  explicit StreamTrap(const std::string& what) : std::runtime_error(what) {}
};

class Point;
using PointPtr = std::shared_ptr<Point>;

class Point : public std::enable_shared_from_this<Point> {
 public:
  using Fn = std::function<Value(const Value&)>;

  explicit Point(Fn fn, std::string label = "")
      : id_(next_id()), fn_(std::move(fn)), label_(std::move(label)) {}
  virtual ~Point() = default;

  uint64_t id() const { return id_; }
  const std::string& label() const { return label_; }

  Value at(const Value& i) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = memo_.find(i);
      if (it != memo_.end()) return it->second;
    }
    Value v = compute(i);
    std::lock_guard<std::mutex> g(mu_);
    return memo_.emplace(i, v).first->second;
  }
  Value at(uint64_t i) { return at(Value(i)); }

 protected:
  Point() : id_(next_id()) {}
  virtual Value compute(const Value& i) {
    if (!fn_) throw std::logic_error("point has no generator");
    return fn_(i);
  }

 private:
  static uint64_t next_id() {
    static std::atomic<uint64_t> counter{1};
    return counter.fetch_add(1);
  }
  uint64_t id_;
  Fn fn_;
  std::string label_;
  std::mutex mu_;
  std::unordered_map<Value, Value, ValueHash> memo_;
};

inline PointPtr make_point(Point::Fn fn, std::string label = "") {
  return std::make_shared<Point>(std::move(fn), std::move(label));
}

inline PointPtr const_point(const Value& v, std::string label = "const") {
  return make_point([v](const Value&) { return v; }, std::move(label));
}

// Finite prefix, then a fixed tail value.
inline PointPtr prefix_point(std::vector<Value> prefix, Value tail = Value(0),
                             std::string label = "prefix") {
  return make_point(
      [prefix = std::move(prefix), tail](const Value& i) {
        uint64_t k;
        if (!i.try_u64(k) || k >= prefix.size()) return tail;
        return prefix[k];
      },
      std::move(label));
}

// join(p,q)(2i) = p(i), join(p,q)(2i+1) = q(i).
inline PointPtr join_point(PointPtr p, PointPtr q, std::string label = "join") {
  return make_point(
      [p, q](const Value& i) {
        Value half = Value::shr(i, 1);
        return i.get_bit(0) ? q->at(half) : p->at(half);
      },
      std::move(label));
}

inline PointPtr even_part(PointPtr p, std::string label = "even") {
  return make_point(
      [p](const Value& i) { return p->at(Value::shl(i, 1)); },
      std::move(label));
}
inline PointPtr odd_part(PointPtr p, std::string label = "odd") {
  return make_point(
      [p](const Value& i) {
        return p->at(Value::add(Value::shl(i, 1), 1));
      },
      std::move(label));
}

// Row n of a pair-indexed stream: row(p,n)(i) = p(pair(n,i)).
inline PointPtr row_point(PointPtr p, const Value& n, std::string label = "row") {
  return make_point(
      [p, n](const Value& i) { return p->at(pair(n, i)); }, std::move(label));
}

// Tuple join: t(pair(k,i)) = parts[k](i) for k < parts.size(); rows past the
// end read as constant 0.
inline PointPtr tuple_point(std::vector<PointPtr> parts,
                            std::string label = "tuple") {
  return make_point(
      [parts = std::move(parts)](const Value& i) -> Value {
        Value k, j;
        unpair(i, k, j);
        uint64_t ks;
        if (!k.try_u64(ks) || ks >= parts.size()) return Value(0);
        return parts[ks]->at(j);
      },
      std::move(label));
}

}  // namespace wlab
