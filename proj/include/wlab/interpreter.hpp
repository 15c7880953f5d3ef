#pragma once
// Resumable interpreter for transducer programs.
//
// A Machine runs one Program against a vector of input Points under a Budget.
// It can be driven until it has emitted any number of outputs and resumed
// later; emitted outputs are never retracted. Every READ is charged against
// the query budget and appended to the run's Transcript.
//
// Terminal conditions are kept distinct so the harness can report honestly:
// budget exhaustion and value-size overflow are resource outcomes, while
// division by zero, address/pc violations and premature halts are defects of
// the program under test.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlab/pairing.hpp"
#include "wlab/point.hpp"
#include "wlab/program.hpp"
#include "wlab/value.hpp"

namespace wlab {

struct Budget {
  uint64_t max_steps = 1'000'000;
  uint64_t max_queries = 100'000;
};

struct QueryRecord {
  uint64_t point_id = 0;
  Value index;
  Value value;
};

struct Transcript {
  std::vector<QueryRecord> queries;
};

enum class RunState : uint8_t {
  Running,
  Halted,
  BudgetSteps,
  BudgetQueries,
  Trapped,
};

enum class TrapKind : uint8_t {
  None,
  ValueOverflow,
  DivZero,
  PcRange,
  AddrRange,
};

inline const char* trap_name(TrapKind k) {
  switch (k) {
    case TrapKind::None: return "none";
    case TrapKind::ValueOverflow: return "value-overflow";
    case TrapKind::DivZero: return "div-zero";
    case TrapKind::PcRange: return "pc-range";
    case TrapKind::AddrRange: return "addr-range";
  }
  return "?";
}

class Machine {
 public:
  Machine(Program prog, std::vector<PointPtr> inputs, Budget budget,
          Transcript* transcript = nullptr)
      : prog_(std::move(prog)),
        inputs_(std::move(inputs)),
        budget_(budget),
        transcript_(transcript),
        lo_(kDenseCells) {
    prog_.validate();
    if (inputs_.size() != prog_.arity)
      throw std::logic_error("machine input count does not match program arity");
  }

  RunState state() const { return state_; }
  TrapKind trap() const { return trap_; }
  uint64_t steps_used() const { return steps_; }
  uint64_t queries_used() const { return queries_; }
  const std::vector<Value>& outputs() const { return outputs_; }
  const Program& program() const { return prog_; }

  // Advance until at least `want` outputs exist or the machine stops.
  RunState run_until_outputs(std::size_t want) {
    while (state_ == RunState::Running && outputs_.size() < want) step_once();
    return state_;
  }

  RunState run_to_end() {
    while (state_ == RunState::Running) step_once();
    return state_;
  }

  // Inspection hook for tests.
  const Value& cell(uint32_t addr) const {
    static const Value zero(0);
    if (addr < lo_.size()) return lo_[addr];
    auto it = hi_.find(addr);
    return it == hi_.end() ? zero : it->second;
  }

 private:
  static constexpr std::size_t kDenseCells = 4096;

  Program prog_;
  std::vector<PointPtr> inputs_;
  Budget budget_;
  Transcript* transcript_;
  std::vector<Value> lo_;
  std::unordered_map<uint32_t, Value> hi_;
  std::vector<Value> outputs_;
  uint64_t pc_ = 0;
  uint64_t steps_ = 0;
  uint64_t queries_ = 0;
  RunState state_ = RunState::Running;
  TrapKind trap_ = TrapKind::None;

  const Value& get(uint32_t addr) const { return cell(addr); }
  void set(uint32_t addr, Value v) {
    if (addr < lo_.size())
      lo_[addr] = std::move(v);
    else
      hi_[addr] = std::move(v);
  }

  void halt(RunState s, TrapKind k = TrapKind::None) {
    state_ = s;
    trap_ = k;
  }

  // c[a] as a cell address.
  bool addr_of(uint32_t a, uint32_t& out) {
    uint64_t v;
    if (!get(a).try_u64(v) || v > 0xffffffffull) {
      halt(RunState::Trapped, TrapKind::AddrRange);
      return false;
    }
    out = static_cast<uint32_t>(v);
    return true;
  }

  void step_once() {
    if (state_ != RunState::Running) return;
    if (pc_ >= prog_.code.size()) {
      halt(RunState::Halted);
      return;
    }
    if (steps_ >= budget_.max_steps) {
      halt(RunState::BudgetSteps);
      return;
    }
    const Instr& in = prog_.code[pc_];
    ++steps_;
    uint64_t next = pc_ + 1;
    try {
      switch (in.op) {
        case Op::HALT:
          halt(RunState::Halted);
          return;
        case Op::CONST:
          set(in.a, Value(in.b));
          break;
        case Op::MOV:
          set(in.a, get(in.b));
          break;
        case Op::ADD:
          set(in.a, Value::add(get(in.b), get(in.c)));
          break;
        case Op::SUB:
          set(in.a, Value::sub(get(in.b), get(in.c)));
          break;
        case Op::MUL:
          set(in.a, Value::mul(get(in.b), get(in.c)));
          break;
        case Op::DIV:
          set(in.a, Value::div(get(in.b), get(in.c)));
          break;
        case Op::MOD:
          set(in.a, Value::mod(get(in.b), get(in.c)));
          break;
        case Op::PAIR:
          set(in.a, pair(get(in.b), get(in.c)));
          break;
        case Op::UNL:
          set(in.a, unpair_left(get(in.b)));
          break;
        case Op::UNR:
          set(in.a, unpair_right(get(in.b)));
          break;
        case Op::LOAD: {
          uint32_t src;
          if (!addr_of(in.b, src)) return;
          set(in.a, get(src));
          break;
        }
        case Op::STORE: {
          uint32_t dst;
          if (!addr_of(in.a, dst)) return;
          set(dst, get(in.b));
          break;
        }
        case Op::READ: {
          if (queries_ >= budget_.max_queries) {
            halt(RunState::BudgetQueries);
            return;
          }
          ++queries_;
          Point& src = *inputs_[in.b];
          Value idx = get(in.c);
          Value v = src.at(idx);
          if (transcript_)
            transcript_->queries.push_back({src.id(), idx, v});
          set(in.a, std::move(v));
          break;
        }
        case Op::WRITE:
          outputs_.push_back(get(in.a));
          break;
        case Op::JMP:
          next = in.a;
          break;
        case Op::JEQ:
          if (get(in.a) == get(in.b)) next = in.c;
          break;
        case Op::JNE:
          if (get(in.a) != get(in.b)) next = in.c;
          break;
        case Op::JLT:
          if (get(in.a) < get(in.b)) next = in.c;
          break;
        case Op::JGE:
          if (get(in.a) >= get(in.b)) next = in.c;
          break;
        case Op::JIND: {
          uint64_t t;
          if (!get(in.a).try_u64(t) || t > prog_.code.size()) {
            halt(RunState::Trapped, TrapKind::PcRange);
            return;
          }
          next = t;
          break;
        }
      }
    } catch (const ValueOverflow&) {
      halt(RunState::Trapped, TrapKind::ValueOverflow);
      return;
    } catch (const DivByZero&) {
      halt(RunState::Trapped, TrapKind::DivZero);
      return;
    }
    pc_ = next;
  }
};

// The output stream of a machine, as a Point. Reading index i drives the
// machine until output i exists. A machine that stops first raises:
// budget and overflow outcomes as StreamBudget, defects as StreamTrap.
class TransducerPoint : public Point {
 public:
  TransducerPoint(std::shared_ptr<Machine> m, std::string label = "transducer")
      : machine_(std::move(m)) {
    (void)label;
  }

  std::shared_ptr<Machine> machine() const { return machine_; }

 protected:
  Value compute(const Value& i) override {
    uint64_t k;
    if (!i.try_u64(k)) throw StreamBudget("output index beyond machine scale");
    RunState st = machine_->run_until_outputs(k + 1);
    const std::vector<Value>& out = machine_->outputs();
    if (out.size() > k) return out[k];
    switch (st) {
      case RunState::BudgetSteps:
        throw StreamBudget("step budget exhausted");
      case RunState::BudgetQueries:
        throw StreamBudget("query budget exhausted");
      case RunState::Trapped:
        if (machine_->trap() == TrapKind::ValueOverflow)
          throw StreamBudget("value overflow");
        throw StreamTrap(std::string("machine trap: ") +
                         trap_name(machine_->trap()));
      case RunState::Halted:
        throw StreamTrap("output stream ended early");
      default:
        throw StreamTrap("machine did not progress");
    }
  }

 private:
  std::shared_ptr<Machine> machine_;
};

inline PointPtr transducer_point(std::shared_ptr<Machine> m,
                                 std::string label = "transducer") {
  return std::make_shared<TransducerPoint>(std::move(m), std::move(label));
}

}  // namespace wlab
