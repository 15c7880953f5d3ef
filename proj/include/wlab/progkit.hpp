#pragma once
// Reusable emission helpers for witness programs.
//
// These inline straight into the caller's instruction stream (there are no
// runtime subroutines, keeping programs relocatable). Decoded sequences live
// in caller-chosen arena regions; regions must not overlap between helpers
// that are live at the same time.

#include "wlab/assembler.hpp"

namespace wlab {

// c[out] := min(c[x], 1): normalizes a characteristic-stream value to a bit.
inline void emit_to_bit(Asm& a, Cell out, Cell x) {
  a.if_eq(x, a.zero());
  a.mov(out, a.zero());
  a.else_();
  a.mov(out, a.one());
  a.end_if();
}

// Decode the flat sequence code in c[code] into the arena region starting at
// offset `region`: element j lands at arena[region + j]. c[len] gets the
// element count, c[ok] gets 1, or 0 with len 0 when the code is malformed.
inline void emit_flat_decode(Asm& a, Cell code, uint32_t region, Cell len,
                             Cell ok) {
  Cell two = a.konst(2);
  Cell v = a.tmp(), pw = a.tmp(), cursor = a.tmp(), zeros = a.tmp();
  Cell m = a.tmp(), cnt = a.tmp(), bit = a.tmp(), t = a.tmp(), off = a.tmp();
  Cell need = a.tmp();

  a.mov(len, a.zero());
  a.mov(ok, a.one());
  a.add(v, code, a.one());
  // pw := highest power of two <= v; cursor := its exponent.
  a.const_(pw, 1);
  a.mov(cursor, a.zero());
  a.loop_();
  a.mul(t, pw, two);
  a.if_lt(v, t);
  a.break_();
  a.end_if();
  a.mov(pw, t);
  a.inc(cursor);
  a.end_loop();
  // Bits below the sentinel: positions cursor-1 .. 0; pw tracks 2^(cursor-1).
  a.div(pw, pw, two);
  a.while_lt(a.zero(), cursor);
  {
    // Count the zero run.
    a.mov(zeros, a.zero());
    a.loop_();
    a.if_eq(cursor, a.zero());
    a.break_();
    a.end_if();
    a.div(bit, v, pw);
    a.mod(bit, bit, two);
    a.if_ne(bit, a.zero());
    a.break_();
    a.end_if();
    a.inc(zeros);
    a.dec(cursor);
    a.div(pw, pw, two);
    a.end_loop();
    // Need zeros+1 bits from cursor.
    a.add(need, zeros, a.one());
    a.if_lt(cursor, need);
    a.mov(ok, a.zero());
    a.mov(len, a.zero());
    a.break_();
    a.end_if();
    // Read them MSB-first into m.
    a.mov(m, a.zero());
    a.mov(cnt, a.zero());
    a.while_lt(cnt, need);
    a.mul(m, m, two);
    a.div(bit, v, pw);
    a.mod(bit, bit, two);
    a.add(m, m, bit);
    a.dec(cursor);
    a.div(pw, pw, two);
    a.inc(cnt);
    a.end_while();
    a.const_(off, region);
    a.add(off, off, len);
    a.sub(m, m, a.one());
    a.store_arena(off, m);
    a.inc(len);
  }
  a.end_while();
}

// c[out] := flat code of (sequence coded by c[code]) extended by c[val].
inline void emit_flat_append(Asm& a, Cell code, Cell val, Cell out) {
  Cell two = a.konst(2);
  Cell m = a.tmp(), q = a.tmp(), t = a.tmp(), scale = a.tmp();
  a.add(m, val, a.one());
  // q := highest power of two <= m, so gamma(m) has 2*log2(m)+1 bits and the
  // appended bit block reads as the integer m.
  a.const_(q, 1);
  a.loop_();
  a.mul(t, q, two);
  a.if_lt(m, t);
  a.break_();
  a.end_if();
  a.mov(q, t);
  a.end_loop();
  a.mul(scale, q, q);
  a.mul(scale, scale, two);
  a.add(out, code, a.one());
  a.mul(out, out, scale);
  a.add(out, out, m);
  a.sub(out, out, a.one());
}

// Compare two decoded arena sequences A (region ra, length la) and B.
// c[out]: 0 equal, 1 first difference favors A, 2 favors B,
//         3 A is a proper prefix of B, 4 B is a proper prefix of A.
inline void emit_seq_compare(Asm& a, uint32_t ra, Cell la, uint32_t rb,
                             Cell lb, Cell out) {
  Cell i = a.tmp(), ea = a.tmp(), eb = a.tmp(), off = a.tmp();
  Cell minlen = a.tmp();
  a.mov(minlen, la);
  a.if_lt(lb, la);
  a.mov(minlen, lb);
  a.end_if();
  a.mov(out, a.zero());
  a.mov(i, a.zero());
  a.while_lt(i, minlen);
  a.const_(off, ra);
  a.add(off, off, i);
  a.load_arena(ea, off);
  a.const_(off, rb);
  a.add(off, off, i);
  a.load_arena(eb, off);
  a.if_lt(ea, eb);
  a.const_(out, 1);
  a.break_();
  a.end_if();
  a.if_lt(eb, ea);
  a.const_(out, 2);
  a.break_();
  a.end_if();
  a.inc(i);
  a.end_while();
  a.if_eq(out, a.zero());
  a.if_lt(la, lb);
  a.const_(out, 3);
  a.end_if();
  a.if_lt(lb, la);
  a.const_(out, 4);
  a.end_if();
  a.end_if();
}

// c[out] := 1 iff c[x] <= c[y] (plain value order).
inline void emit_leq_u(Asm& a, Cell x, Cell y, Cell out) {
  a.if_ge(y, x);
  a.mov(out, a.one());
  a.else_();
  a.mov(out, a.zero());
  a.end_if();
}

// Tree-order comparison of two flat node codes: c[out] := 1 iff s <= t in the
// order that puts descendants below their ancestors and otherwise compares
// lexicographically at the first difference. Malformed codes compare above
// everything well-formed, among themselves by numeric code.
// Uses arena regions [r, r+1000) and [r+1000, r+2000).
inline void emit_kb_leq(Asm& a, Cell s, Cell t, uint32_t r, Cell out) {
  Cell la = a.tmp(), lb = a.tmp(), oka = a.tmp(), okb = a.tmp();
  Cell c = a.tmp();
  emit_flat_decode(a, s, r, la, oka);
  emit_flat_decode(a, t, r + 1000, lb, okb);
  a.if_eq(oka, a.zero());
  {
    a.if_eq(okb, a.zero());  // both malformed: numeric order
    emit_leq_u(a, s, t, out);
    a.else_();               // s malformed, t fine: s above
    a.mov(out, a.zero());
    a.end_if();
  }
  a.else_();
  {
    a.if_eq(okb, a.zero());  // t malformed: s below
    a.mov(out, a.one());
    a.else_();
    emit_seq_compare(a, r, la, r + 1000, lb, c);
    // s <= t iff equal, s lex-first, or t a proper prefix of s.
    a.mov(out, a.zero());
    a.if_eq(c, a.zero());
    a.mov(out, a.one());
    a.end_if();
    a.if_eq(c, a.one());
    a.mov(out, a.one());
    a.end_if();
    a.if_eq(c, a.konst(4));
    a.mov(out, a.one());
    a.end_if();
    a.end_if();
  }
  a.end_if();
}

}  // namespace wlab
