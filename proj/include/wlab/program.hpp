#pragma once
// Register bytecode for monotone stream transducers.
//
// A program owns an unbounded cell array c[0..] of Values (reads of untouched
// cells yield 0), reads from a fixed arity of input streams, and appends to a
// write-once output stream. Output monotonicity is structural: there is no way
// to retract an emitted value.
//
//   op    operands        effect
//   HALT                  stop
//   CONST d, imm          c[d] := imm                (imm is a u32 literal)
//   MOV   d, a            c[d] := c[a]
//   ADD   d, a, b         c[d] := c[a] + c[b]
//   SUB   d, a, b         c[d] := max(c[a] - c[b], 0)
//   MUL   d, a, b         c[d] := c[a] * c[b]
//   DIV   d, a, b         c[d] := c[a] / c[b]        (c[b]=0 traps)
//   MOD   d, a, b         c[d] := c[a] mod c[b]      (c[b]=0 traps)
//   PAIR  d, a, b         c[d] := pair(c[a], c[b])
//   UNL   d, a            c[d] := left component of unpair(c[a])
//   UNR   d, a            c[d] := right component of unpair(c[a])
//   LOAD  d, a            c[d] := c[c[a]]            (address must fit u32)
//   STORE a, s            c[c[a]] := c[s]            (address must fit u32)
//   READ  d, slot, i      c[d] := input_slot(c[i])   (counted, transcripted)
//   WRITE s               emit c[s]
//   JMP   t               pc := t
//   JEQ   a, b, t         if c[a] =  c[b] then pc := t
//   JNE   a, b, t         if c[a] != c[b] then pc := t
//   JLT   a, b, t         if c[a] <  c[b] then pc := t
//   JGE   a, b, t         if c[a] >= c[b] then pc := t
//   JIND  a               pc := c[a]                 (pc must fit and be <= n)
//
// Jump target n (one past the last instruction) is a plain halt.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlab/value.hpp"

namespace wlab {

enum class Op : uint8_t {
  HALT = 0,
  CONST = 1,
  MOV = 2,
  ADD = 3,
  SUB = 4,
  MUL = 5,
  DIV = 6,
  MOD = 7,
  PAIR = 8,
  UNL = 9,
  UNR = 10,
  LOAD = 11,
  STORE = 12,
  READ = 13,
  WRITE = 14,
  JMP = 15,
  JEQ = 16,
  JNE = 17,
  JLT = 18,
  JGE = 19,
  JIND = 20,
};
constexpr uint8_t kMaxOp = 20;

inline const char* op_name(Op op) {
  static const char* names[] = {"HALT", "CONST", "MOV",  "ADD",  "SUB",  "MUL",
                                "DIV",  "MOD",   "PAIR", "UNL",  "UNR",  "LOAD",
                                "STORE", "READ", "WRITE", "JMP", "JEQ",  "JNE",
                                "JLT",  "JGE",   "JIND"};
  return names[static_cast<uint8_t>(op)];
}

struct Instr {
  Op op = Op::HALT;
  uint32_t a = 0, b = 0, c = 0;
};

// Which operand fields name cells directly (bit 0 = a, 1 = b, 2 = c), and
// which field is a jump target. Splicing relies on this metadata to relocate.
inline unsigned op_cell_mask(Op op) {
  switch (op) {
    case Op::HALT: return 0;
    case Op::CONST: return 0b001;
    case Op::MOV: return 0b011;
    case Op::ADD:
    case Op::SUB:
    case Op::MUL:
    case Op::DIV:
    case Op::MOD:
    case Op::PAIR: return 0b111;
    case Op::UNL:
    case Op::UNR:
    case Op::LOAD:
    case Op::STORE: return 0b011;
    case Op::READ: return 0b101;  // b is a slot number
    case Op::WRITE: return 0b001;
    case Op::JMP: return 0;
    case Op::JEQ:
    case Op::JNE:
    case Op::JLT:
    case Op::JGE: return 0b011;
    case Op::JIND: return 0b001;
  }
  return 0;
}

// -1 when the op has no direct jump target field (0 = a, 2 = c).
inline int op_jump_field(Op op) {
  switch (op) {
    case Op::JMP: return 0;
    case Op::JEQ:
    case Op::JNE:
    case Op::JLT:
    case Op::JGE: return 2;
    default: return -1;
  }
}

struct ProgramDecodeError : std::runtime_error {
  explicit ProgramDecodeError(const std::string& what)
      : std::runtime_error("program decode: " + what) {}
};

struct Program {
  uint32_t arity = 1;
  std::vector<Instr> code;

  // Static checks; dynamic address and indirect-jump checks happen at runtime.
  void validate() const {
    for (std::size_t i = 0; i < code.size(); ++i) {
      const Instr& in = code[i];
      if (static_cast<uint8_t>(in.op) > kMaxOp)
        throw ProgramDecodeError("bad opcode at " + std::to_string(i));
      switch (in.op) {
        case Op::JMP:
          if (in.a > code.size()) throw ProgramDecodeError("jump target out of range");
          break;
        case Op::JEQ:
        case Op::JNE:
        case Op::JLT:
        case Op::JGE:
          if (in.c > code.size()) throw ProgramDecodeError("jump target out of range");
          break;
        case Op::READ:
          if (in.b >= arity) throw ProgramDecodeError("read slot out of range");
          break;
        default:
          break;
      }
    }
  }

  // Value-stream form: [arity, n, then op,a,b,c per instruction].
  std::vector<Value> serialize() const {
    std::vector<Value> out;
    out.reserve(2 + 4 * code.size());
    out.emplace_back(arity);
    out.emplace_back(code.size());
    for (const Instr& in : code) {
      out.emplace_back(static_cast<uint64_t>(in.op));
      out.emplace_back(in.a);
      out.emplace_back(in.b);
      out.emplace_back(in.c);
    }
    return out;
  }

  static Program deserialize(const std::vector<Value>& vs) {
    std::size_t pos = 0;
    auto next = [&]() -> const Value& {
      if (pos >= vs.size()) throw ProgramDecodeError("truncated stream");
      return vs[pos++];
    };
    auto next_u32 = [&]() -> uint32_t {
      uint64_t v;
      if (!next().try_u64(v) || v > 0xffffffffull)
        throw ProgramDecodeError("field exceeds 32 bits");
      return static_cast<uint32_t>(v);
    };
    Program p;
    p.arity = next_u32();
    uint64_t n = next_u32();
    p.code.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
      Instr in;
      uint32_t op = next_u32();
      if (op > kMaxOp) throw ProgramDecodeError("bad opcode");
      in.op = static_cast<Op>(op);
      in.a = next_u32();
      in.b = next_u32();
      in.c = next_u32();
      p.code.push_back(in);
    }
    p.validate();
    return p;
  }

  std::string disassemble() const {
    std::string out;
    for (std::size_t i = 0; i < code.size(); ++i) {
      const Instr& in = code[i];
      out += std::to_string(i) + ": " + op_name(in.op) + " " +
             std::to_string(in.a) + ", " + std::to_string(in.b) + ", " +
             std::to_string(in.c) + "\n";
    }
    return out;
  }
};

}  // namespace wlab
