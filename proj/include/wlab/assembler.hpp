#pragma once
// Structured assembler for transducer programs.
//
// Witness programs are built through this EDSL rather than raw instruction
// lists: named cells, named constants, and properly nested loop/if blocks with
// break/continue. The assembler never stores a pc into a cell, so a finished
// program can be relocated by adding a fixed offset to every jump field.
//
// Addressing ABI: cell 0 holds the arena base, set by the mandatory first
// instruction CONST 0, <base>. All computed LOAD/STORE addresses are formed as
// c[0] + offset (use load_arena/store_arena), never from other constants, so
// relocating a program is: shift direct cell operands, shift jump targets,
// and bump the first instruction's immediate.
//
// finish() emits that leading CONST plus one CONST per registered constant
// cell, shifts all jump targets accordingly, then validates.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlab/program.hpp"

namespace wlab {

using Cell = uint32_t;

class Asm {
 public:
  explicit Asm(uint32_t arity) : arity_(arity) {}

  // ---- cells ----

  Cell cell(const std::string& name) {
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    Cell c = next_cell_++;
    named_.emplace(name, c);
    return c;
  }
  Cell tmp() { return next_cell_++; }

  // A cell holding a fixed value, initialized in the prologue.
  Cell konst(uint32_t v) {
    auto it = const_cells_.find(v);
    if (it != const_cells_.end()) return it->second;
    Cell c = next_cell_++;
    const_cells_.emplace(v, c);
    return c;
  }
  Cell zero() { return konst(0); }
  Cell one() { return konst(1); }

  // ---- raw instructions ----

  void halt() { emit(Op::HALT, 0, 0, 0); }
  void const_(Cell d, uint32_t imm) { emit(Op::CONST, d, imm, 0); }
  void mov(Cell d, Cell a) { emit(Op::MOV, d, a, 0); }
  void add(Cell d, Cell a, Cell b) { emit(Op::ADD, d, a, b); }
  void sub(Cell d, Cell a, Cell b) { emit(Op::SUB, d, a, b); }
  void mul(Cell d, Cell a, Cell b) { emit(Op::MUL, d, a, b); }
  void div(Cell d, Cell a, Cell b) { emit(Op::DIV, d, a, b); }
  void mod(Cell d, Cell a, Cell b) { emit(Op::MOD, d, a, b); }
  void pair_(Cell d, Cell a, Cell b) { emit(Op::PAIR, d, a, b); }
  void unl(Cell d, Cell a) { emit(Op::UNL, d, a, 0); }
  void unr(Cell d, Cell a) { emit(Op::UNR, d, a, 0); }
  void load(Cell d, Cell addr) { emit(Op::LOAD, d, addr, 0); }
  void store(Cell addr, Cell s) { emit(Op::STORE, addr, s, 0); }
  void read(Cell d, uint32_t slot, Cell idx) { emit(Op::READ, d, slot, idx); }
  void write(Cell s) { emit(Op::WRITE, s, 0, 0); }

  void inc(Cell x) { add(x, x, one()); }
  void dec(Cell x) { sub(x, x, one()); }  // truncated at 0

  // ---- arena access ----
  // The arena is the open-ended cell region starting at c[0]. Offsets are held
  // in cells; witness code manages its own sub-regions by offset arithmetic.

  Cell arena_base() { return 0; }
  void load_arena(Cell d, Cell off) {
    Cell t = addr_scratch();
    add(t, 0, off);
    load(d, t);
  }
  void store_arena(Cell off, Cell s) {
    Cell t = addr_scratch();
    add(t, 0, off);
    store(t, s);
  }

  // ---- structured control ----

  // Infinite loop; leave with break_().
  void loop_() { blocks_.push_back({BlockKind::Loop, code_.size(), {}, {}}); }
  void end_loop() {
    Block b = pop(BlockKind::Loop);
    emit(Op::JMP, static_cast<uint32_t>(b.head), 0, 0);
    patch_to_here(b.breaks);
  }

  // while c[a] <cond> c[b].
  void while_lt(Cell a, Cell b) { open_while(Op::JGE, a, b); }
  void while_ge(Cell a, Cell b) { open_while(Op::JLT, a, b); }
  void while_eq(Cell a, Cell b) { open_while(Op::JNE, a, b); }
  void while_ne(Cell a, Cell b) { open_while(Op::JEQ, a, b); }
  void end_while() {
    Block b = pop(BlockKind::While);
    emit(Op::JMP, static_cast<uint32_t>(b.head), 0, 0);
    patch_to_here(b.exits);
    patch_to_here(b.breaks);
  }

  void break_() {
    Block& b = innermost_breakable();
    b.breaks.push_back(code_.size());
    emit(Op::JMP, 0, 0, 0);
  }
  void continue_() {
    Block& b = innermost_breakable();
    emit(Op::JMP, static_cast<uint32_t>(b.head), 0, 0);
  }

  // if c[a] <cond> c[b] { ... } else_() { ... } end_if().
  void if_eq(Cell a, Cell b) { open_if(Op::JNE, a, b); }
  void if_ne(Cell a, Cell b) { open_if(Op::JEQ, a, b); }
  void if_lt(Cell a, Cell b) { open_if(Op::JGE, a, b); }
  void if_ge(Cell a, Cell b) { open_if(Op::JLT, a, b); }
  void else_() {
    if (blocks_.empty() || blocks_.back().kind != BlockKind::If)
      throw std::logic_error("else outside if");
    Block& b = blocks_.back();
    std::size_t over_else = code_.size();
    emit(Op::JMP, 0, 0, 0);
    patch_to_here(b.exits);
    b.exits = {over_else};
  }
  void end_if() {
    Block b = pop(BlockKind::If);
    patch_to_here(b.exits);
  }

  // ---- finish ----

  Program finish() {
    if (!blocks_.empty()) throw std::logic_error("unclosed block");
    Program p;
    p.arity = arity_;
    uint32_t prologue = 1 + static_cast<uint32_t>(const_cells_.size());
    p.code.push_back({Op::CONST, 0, next_cell_ + 16, 0});  // arena base
    for (const auto& [v, c] : const_cells_)
      p.code.push_back({Op::CONST, c, v, 0});
    for (Instr in : code_) {
      switch (in.op) {
        case Op::JMP:
          in.a += prologue;
          break;
        case Op::JEQ:
        case Op::JNE:
        case Op::JLT:
        case Op::JGE:
          in.c += prologue;
          break;
        default:
          break;
      }
      p.code.push_back(in);
    }
    p.validate();
    return p;
  }

 private:
  enum class BlockKind { Loop, While, If };
  struct Block {
    BlockKind kind;
    std::size_t head;                // loop/while entry pc
    std::vector<std::size_t> exits;  // sites jumping past the block
    std::vector<std::size_t> breaks;
  };

  uint32_t arity_;
  Cell next_cell_ = 1;  // cell 0 is the arena base pointer
  std::unordered_map<std::string, Cell> named_;
  std::map<uint32_t, Cell> const_cells_;  // ordered: deterministic prologue
  std::vector<Instr> code_;
  std::vector<Block> blocks_;
  Cell addr_scratch_ = 0;

  Cell addr_scratch() {
    if (addr_scratch_ == 0) addr_scratch_ = next_cell_++;
    return addr_scratch_;
  }

  void emit(Op op, uint32_t a, uint32_t b, uint32_t c) {
    code_.push_back({op, a, b, c});
  }

  void open_while(Op exit_jump, Cell a, Cell b) {
    Block blk{BlockKind::While, code_.size(), {}, {}};
    blk.exits.push_back(code_.size());
    emit(exit_jump, a, b, 0);
    blocks_.push_back(std::move(blk));
  }
  void open_if(Op skip_jump, Cell a, Cell b) {
    Block blk{BlockKind::If, code_.size(), {}, {}};
    blk.exits.push_back(code_.size());
    emit(skip_jump, a, b, 0);
    blocks_.push_back(std::move(blk));
  }

  Block pop(BlockKind want) {
    if (blocks_.empty() || blocks_.back().kind != want)
      throw std::logic_error("mismatched block nesting");
    Block b = std::move(blocks_.back());
    blocks_.pop_back();
    return b;
  }

  Block& innermost_breakable() {
    for (std::size_t i = blocks_.size(); i-- > 0;)
      if (blocks_[i].kind != BlockKind::If) return blocks_[i];
    throw std::logic_error("break outside loop");
  }

  void patch_to_here(const std::vector<std::size_t>& sites) {
    for (std::size_t s : sites) {
      Instr& in = code_[s];
      if (in.op == Op::JMP)
        in.a = static_cast<uint32_t>(code_.size());
      else
        in.c = static_cast<uint32_t>(code_.size());
    }
  }
};

}  // namespace wlab
