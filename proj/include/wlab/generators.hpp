#pragma once
// Seeded instance generators with ground-truth certificates.
//
// A generator is a closed-form rule: the 64-bit seed fixes the instance
// completely, and the certificate records exactly the facts checkers and
// solution oracles need (relations, planted chains and paths, moduli, member
// lists, occurrence ledgers). Element values stay small enough for the
// machine word fast path; relabeling masks keep instances from accidentally
// aligning with index order.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlab/problems.hpp"

namespace wlab {

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(a ^ mix64(b)); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) {
  return mix64(mix64(a, b), c);
}

// Seeded bijection on the machine-word range; larger values stay put.
inline Value xor_label(const Value& v, uint64_t r) {
  uint64_t u;
  if (!v.try_u64(u)) return v;
  return Value(u ^ r);
}

struct GeneratorDescriptor {
  std::string id;
  std::string problem;
  std::string summary;
  std::function<Instance(uint64_t)> make;
};

namespace gen {

inline Instance base(std::string problem, std::string gen_id, uint64_t seed,
                     PointPtr name, Cert cert) {
  Instance I;
  I.problem = std::move(problem);
  I.name = std::move(name);
  I.cert = std::move(cert);
  I.generator = std::move(gen_id);
  I.seed = seed;
  return I;
}

// ---- linear orders ----

inline Instance lo_omega_star(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  auto leq = [r](const Value& a, const Value& b) {
    return Value::cmp(xor_label(a, r), xor_label(b, r)) >= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value(i ^ r); };
  return base("DS", "lo_omega_star", seed, lo_name_point(leq), c);
}

inline Instance lo_omega_plus_omega_star(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  // Relabeled evens climb from the bottom, relabeled odds descend at the top.
  auto cls = [r](const Value& v, int& block, Value& mag) {
    uint64_t u;
    if (!v.try_u64(u)) {
      block = 1;
      mag = v;
      return;
    }
    uint64_t x = u ^ r;
    block = static_cast<int>(x % 2);
    mag = Value(x / 2);
  };
  auto leq = [cls](const Value& a, const Value& b) {
    int ba, bb;
    Value ma, mb;
    cls(a, ba, ma);
    cls(b, bb, mb);
    if (ba != bb) return ba < bb;
    return ba == 0 ? Value::cmp(ma, mb) <= 0 : Value::cmp(ma, mb) >= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value((2 * i + 1) ^ r); };
  return base("DS", "lo_omega_plus_omega_star", seed, lo_name_point(leq), c);
}

inline Instance lo_zeta(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  // Relabeled evens are the nonnegative integers, odds the negative ones.
  auto sign_mag = [r](const Value& v, bool& neg, Value& mag) {
    uint64_t u;
    if (!v.try_u64(u)) {
      neg = false;
      mag = v;
      return;
    }
    uint64_t x = u ^ r;
    neg = x % 2 == 1;
    mag = Value(neg ? x / 2 + 1 : x / 2);
  };
  auto leq = [sign_mag](const Value& a, const Value& b) {
    bool na, nb;
    Value ma, mb;
    sign_mag(a, na, ma);
    sign_mag(b, nb, mb);
    if (na != nb) return na;
    return na ? Value::cmp(ma, mb) >= 0 : Value::cmp(ma, mb) <= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value((2 * i + 1) ^ r); };
  return base("DS", "lo_zeta", seed, lo_name_point(leq), c);
}

inline Instance lo_lex_sum(uint64_t seed) {
  // Pair codes ordered by descending block, ascending within a block.
  auto leq = [](const Value& a, const Value& b) {
    Value ua, wa, ub, wb;
    unpair(a, ua, wa);
    unpair(b, ub, wb);
    int c = Value::cmp(ua, ub);
    if (c != 0) return c > 0;
    return Value::cmp(wa, wb) <= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [seed](uint64_t i) {
    return pair(Value(i), Value(mix64(seed, i) % 7));
  };
  return base("DS", "lo_lex_sum", seed, lo_name_point(leq), c);
}

inline Instance lo_kb_planted(uint64_t seed) {
  auto pval = [seed](uint64_t d) { return mix64(seed, d) % 2; };
  // Prefixes of the planted path plus one shallow right leaf per level.
  auto member = [pval, seed](const std::vector<Value>& node) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (node[i] == Value(pval(i))) continue;
      if (i + 1 != node.size() || i >= 6) return false;
      uint64_t side = pval(i) + 1 + mix64(seed, 77, i) % 2;
      return node[i] == Value(side);
    }
    return true;
  };
  auto leq = [member](const Value& a, const Value& b) {
    auto da = flat_decode(a), db = flat_decode(b);
    if (!da || !db || !member(*da) || !member(*db)) return false;
    return kb_leq_seqs(*da, *db);
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [member](const Value& a) {
    auto d = flat_decode(a);
    return d && member(*d);
  };
  c.chain = [pval](uint64_t i) {
    std::vector<Value> prefix;
    for (uint64_t d = 0; d < i; ++d) prefix.emplace_back(pval(d));
    return flat_encode(prefix);
  };
  return base("DS", "lo_kb_planted", seed, lo_name_point(leq), c);
}

// ---- quasi-orders ----

inline Instance qo_antichain(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  auto leq = [](const Value& a, const Value& b) { return a == b; };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value(i ^ r); };
  return base("BS", "qo_antichain", seed, lo_name_point(leq), c);
}

inline Instance qo_parallel_chains(uint64_t seed) {
  uint64_t k = 2 + mix64(seed) % 3;
  uint64_t c0 = mix64(seed, 1) % k;
  // k descending chains, one per residue; distinct residues never compare.
  auto leq = [k](const Value& a, const Value& b) {
    if (Value::mod(a, Value(k)) != Value::mod(b, Value(k))) return false;
    return Value::cmp(a, b) >= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [k, c0](uint64_t i) { return Value(k * i + c0); };
  return base("BS", "qo_parallel_chains", seed, lo_name_point(leq), c);
}

inline Instance qo_with_collapse(uint64_t seed) {
  uint64_t g = 2 + mix64(seed) % 3;
  // Blocks of g collapse to one class; blocks descend as they grow.
  auto leq = [g](const Value& a, const Value& b) {
    return Value::cmp(Value::div(a, Value(g)), Value::div(b, Value(g))) >= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [g, seed](uint64_t i) {
    return Value(g * i + mix64(seed, i) % g);
  };
  return base("BS", "qo_with_collapse", seed, lo_name_point(leq), c);
}

// ---- convergent rows ----

inline PointPtr rows_point(std::function<Value(uint64_t, uint64_t)> entry,
                           std::string label = "rows") {
  return make_point(
      [entry = std::move(entry)](const Value& i) -> Value {
        Value t, k;
        unpair(i, t, k);
        uint64_t tu, ku;
        if (!t.try_u64(tu) || !k.try_u64(ku)) return Value(0);
        return entry(tu, ku);
      },
      std::move(label));
}

inline Instance jump_constant(uint64_t seed) {
  auto val = [seed](uint64_t k) { return mix64(seed, k) % 5; };
  Cert c;
  c.modulus = [](uint64_t) { return 0; };
  c.limit = [val](const Value& k) {
    uint64_t ku;
    if (!k.try_u64(ku)) return Value(0);
    return Value(val(ku));
  };
  return base("lim", "jump_constant", seed,
              rows_point([val](uint64_t, uint64_t k) { return Value(val(k)); }),
              c);
}

inline Instance jump_fires(uint64_t seed) {
  // Coordinate k bumps its value at up to two seeded stages below 16.
  auto nf = [seed](uint64_t k) { return mix64(seed, k, 1) % 3; };
  auto stage = [seed](uint64_t k, uint64_t j) {
    return 1 + mix64(seed, k, 10 + j) % 15;
  };
  auto val = [seed](uint64_t k, uint64_t fired) {
    return mix64(seed, k, 20 + fired) % 5;
  };
  auto fired_by = [nf, stage](uint64_t k, uint64_t t) {
    uint64_t n = 0;
    for (uint64_t j = 0; j < nf(k); ++j)
      if (stage(k, j) <= t) ++n;
    return n;
  };
  Cert c;
  c.modulus = [nf, stage](uint64_t k) {
    uint64_t m = 0;
    for (uint64_t j = 0; j < nf(k); ++j) m = std::max(m, stage(k, j));
    return m;
  };
  c.limit = [nf, val](const Value& k) {
    uint64_t ku;
    if (!k.try_u64(ku)) return Value(0);
    return Value(val(ku, nf(ku)));
  };
  return base("lim", "jump_fires", seed,
              rows_point([val, fired_by](uint64_t t, uint64_t k) {
                return Value(val(k, fired_by(k, t)));
              }),
              c);
}

inline Instance jump_resets(uint64_t seed) {
  // Row t spikes at coordinate t only: pointwise limit is zero everywhere,
  // but no row is ever final in sup norm.
  uint64_t amp = 1 + mix64(seed) % 3;
  Cert c;
  c.modulus = [](uint64_t k) { return k + 1; };
  c.limit = [](const Value&) { return Value(0); };
  return base("lim", "jump_resets", seed,
              rows_point([amp](uint64_t t, uint64_t k) {
                return Value(t == k ? amp : 0);
              }),
              c);
}

inline Instance jump_bounded(uint64_t seed) {
  uint64_t k = 2 + mix64(seed) % 3;
  auto nf = [seed](uint64_t j) { return mix64(seed, j, 2) % 3; };
  auto stage = [seed](uint64_t j, uint64_t f) {
    return 1 + mix64(seed, j, 30 + f) % 12;
  };
  auto val = [seed, k](uint64_t j, uint64_t fired) {
    return mix64(seed, j, 40 + fired) % k;
  };
  auto fired_by = [nf, stage](uint64_t j, uint64_t t) {
    uint64_t n = 0;
    for (uint64_t f = 0; f < nf(j); ++f)
      if (stage(j, f) <= t) ++n;
    return n;
  };
  Cert c;
  c.modulus = [nf, stage](uint64_t j) {
    uint64_t m = 0;
    for (uint64_t f = 0; f < nf(j); ++f) m = std::max(m, stage(j, f));
    return m;
  };
  c.limit = [nf, val](const Value& j) {
    uint64_t ju;
    if (!j.try_u64(ju)) return Value(0);
    return Value(val(ju, nf(ju)));
  };
  Instance I = base("lim_k", "jump_bounded", seed,
                    rows_point([val, fired_by](uint64_t t, uint64_t j) {
                      return Value(val(j, fired_by(j, t)));
                    }),
                    c);
  I.param = k;
  return I;
}

// ---- zero tests ----

inline Instance lpo_allzero(uint64_t seed) {
  Cert c;
  c.answer = 0;
  return base("LPO", "lpo_allzero", seed, const_point(Value(0)), c);
}

inline Instance lpo_spike(uint64_t seed) {
  uint64_t pos = mix64(seed) % 12;
  uint64_t amp = 1 + mix64(seed, 1) % 3;
  Cert c;
  c.answer = 1;
  return base("LPO", "lpo_spike", seed,
              make_point([pos, amp](const Value& i) {
                return i == Value(pos) ? Value(amp) : Value(0);
              }),
              c);
}

inline Instance lpo_jump_allzero(uint64_t seed) {
  Cert c;
  c.answer = 0;
  c.limit = [](const Value&) { return Value(0); };
  c.modulus = [](uint64_t) { return 0; };
  return base("LPO_jump_1", "lpo_jump_allzero", seed,
              rows_point([](uint64_t, uint64_t) { return Value(0); }), c);
}

inline Instance lpo_jump_stable(uint64_t seed) {
  // Rows converge to a spike; early rows carry fading noise elsewhere.
  uint64_t pos = mix64(seed) % 10;
  uint64_t s0 = 1 + mix64(seed, 1) % 8;
  uint64_t noise = 10 + mix64(seed, 2) % 5;
  Cert c;
  c.answer = 1;
  c.limit = [pos](const Value& k) {
    return k == Value(pos) ? Value(1) : Value(0);
  };
  c.modulus = [pos, s0, noise](uint64_t k) {
    if (k == pos || k == noise) return s0;
    return uint64_t{0};
  };
  return base("LPO_jump_1", "lpo_jump_stable", seed,
              rows_point([pos, s0, noise](uint64_t t, uint64_t k) {
                if (k == pos) return Value(t >= s0 ? 1 : 0);
                if (k == noise) return Value(t < s0 ? 2 : 0);
                return Value(0);
              }),
              c);
}

inline Instance lpo_jump_resets(uint64_t seed) {
  // The first-nonzero position never stabilizes, yet the limit is zero.
  uint64_t amp = 1 + mix64(seed) % 2;
  Cert c;
  c.answer = 0;
  c.limit = [](const Value&) { return Value(0); };
  c.modulus = [](uint64_t k) { return k + 1; };
  return base("LPO_jump_1", "lpo_jump_resets", seed,
              rows_point([amp](uint64_t t, uint64_t k) {
                return Value(t == k ? amp : 0);
              }),
              c);
}

// ---- choices and bounds ----

inline Instance cn_cofinite(uint64_t seed) {
  // Exclude a small seeded set; everything else is a member.
  std::set<uint64_t> excl;
  uint64_t n = 1 + mix64(seed) % 4;
  for (uint64_t j = 0; excl.size() < n; ++j) excl.insert(mix64(seed, j) % 12);
  std::vector<uint64_t> listed(excl.begin(), excl.end());
  Cert c;
  c.in_set = [excl](uint64_t v) { return excl.count(v) == 0; };
  uint64_t a = 0;
  while (excl.count(a)) ++a;
  c.answer = a;
  return base("C_N", "cn_cofinite", seed,
              make_point([listed](const Value& i) {
                uint64_t u;
                if (!i.try_u64(u) || u % 2 == 0) return Value(0);
                uint64_t j = u / 2;
                if (j >= listed.size()) return Value(0);
                return Value(listed[j] + 1);
              }),
              c);
}

inline Instance ucn_singleton(uint64_t seed) {
  uint64_t x = mix64(seed) % 9;
  Cert c;
  c.in_set = [x](uint64_t v) { return v == x; };
  c.answer = x;
  return base("UC_N", "ucn_singleton", seed,
              make_point([x](const Value& i) {
                uint64_t u;
                if (!i.try_u64(u)) return Value(0);
                return Value((u < x ? u : u + 1) + 1);
              }),
              c);
}

inline Instance bound_finite_enum(uint64_t seed) {
  std::set<uint64_t> mem;
  uint64_t n = 1 + mix64(seed) % 5;
  for (uint64_t j = 0; mem.size() < n; ++j) mem.insert(mix64(seed, j) % 15);
  std::vector<uint64_t> listed(mem.begin(), mem.end());
  Cert c;
  c.members = listed;
  c.answer = listed.back() + 1;
  return base("Bound_Sigma01", "bound_finite_enum", seed,
              make_point([listed](const Value& i) {
                uint64_t u;
                if (!i.try_u64(u) || u % 3 != 1) return Value(0);
                uint64_t j = u / 3;
                if (j >= listed.size()) return Value(0);
                return Value(listed[j] + 1);
              }),
              c);
}

// Tree-row helpers shared by the coded-set generators. A planted row holds
// exactly the prefixes of its path; a finite row holds the root and one leaf.
inline bool finite_row_member(const std::vector<Value>& node) {
  if (node.empty()) return true;
  return node.size() == 1 && node[0].is_zero();
}
inline bool planted_row_member(const std::vector<Value>& node,
                               const std::function<uint64_t(uint64_t)>& path) {
  for (std::size_t i = 0; i < node.size(); ++i)
    if (node[i] != Value(path(i))) return false;
  return true;
}

inline Instance pi11_rows_mixed(uint64_t seed) {
  // Rows below 5 may be finite trees; all others carry a planted path.
  auto wf = [seed](uint64_t n) { return n < 5 && mix64(seed, n) % 3 == 0; };
  auto path = [seed](uint64_t n, uint64_t i) {
    return mix64(seed, n, i) % 2;
  };
  std::vector<uint64_t> members;
  for (uint64_t n = 0; n < 5; ++n)
    if (wf(n)) members.push_back(n);
  Cert c;
  c.members = members;
  c.answer = members.empty() ? 0 : members.back() + 1;
  c.row_path = [path](const Value& n, uint64_t i) {
    uint64_t nu = 0;
    n.try_u64(nu);
    return Value(path(nu, i));
  };
  return base("Bound_Pi11", "pi11_rows_mixed", seed,
              tree_family_point([wf, path](const Value& n,
                                           const std::vector<Value>& node) {
                uint64_t nu;
                if (!n.try_u64(nu)) return false;
                if (wf(nu)) return finite_row_member(node);
                return planted_row_member(
                    node, [&](uint64_t i) { return path(nu, i); });
              }),
              c);
}

inline Instance sigma11_rows_nonempty(uint64_t seed) {
  uint64_t forced = mix64(seed, 9) % 8;
  auto in = [seed, forced](uint64_t n) {
    return n < 8 && (n == forced || mix64(seed, n) % 2 == 0);
  };
  auto path = [seed](uint64_t n, uint64_t i) {
    return mix64(seed, n, i) % 2;
  };
  Cert c;
  c.in_set = in;
  uint64_t a = 0;
  while (!in(a)) ++a;
  c.answer = a;
  c.row_path = [path](const Value& n, uint64_t i) {
    uint64_t nu = 0;
    n.try_u64(nu);
    return Value(path(nu, i));
  };
  return base("Sigma11_CN", "sigma11_rows_nonempty", seed,
              tree_family_point([in, path](const Value& n,
                                           const std::vector<Value>& node) {
                uint64_t nu;
                if (!n.try_u64(nu)) return false;
                if (!in(nu)) return finite_row_member(node);
                return planted_row_member(
                    node, [&](uint64_t i) { return path(nu, i); });
              }),
              c);
}

inline Instance par_sigma11_rows(uint64_t seed) {
  // Component n: a tree-row family whose ill-founded rows form A_n.
  auto in = [seed](uint64_t n, uint64_t m) {
    uint64_t forced = mix64(seed, n, 7) % 6;
    return m < 6 && (m == forced || mix64(seed, n, m) % 2 == 0);
  };
  auto path = [seed](uint64_t n, uint64_t m, uint64_t i) {
    return mix64(seed, mix64(n, m), i) % 2;
  };
  Cert c;
  c.in_row_set = in;
  c.row_answer = [in](uint64_t n) {
    uint64_t a = 0;
    while (!in(n, a)) ++a;
    return a;
  };
  auto name = make_point([in, path](const Value& idx) -> Value {
    Value n, rest;
    unpair(idx, n, rest);
    Value m, nodecode;
    unpair(rest, m, nodecode);
    uint64_t nu, mu;
    if (!n.try_u64(nu) || !m.try_u64(mu)) return Value(0);
    auto node = flat_decode(nodecode);
    if (!node) return Value(0);
    bool member =
        in(nu, mu)
            ? planted_row_member(
                  *node, [&](uint64_t i) { return path(nu, mu, i); })
            : finite_row_member(*node);
    return Value(member ? 1 : 0);
  });
  return base("par_Sigma11_CN", "par_sigma11_rows", seed, name, c);
}

// ---- colorings ----

inline Instance coloring_recurring(uint64_t seed) {
  uint64_t k = 2 + mix64(seed) % 3;
  uint64_t mask = 1 + mix64(seed, 5) % ((1ull << k) - 1);
  std::vector<uint64_t> infinite;
  for (uint64_t j = 0; j < k; ++j)
    if (mask >> j & 1) infinite.push_back(j);
  uint64_t cut = 3 + mix64(seed, 6) % 5;
  auto color = [seed, k, infinite, cut](uint64_t i) {
    if (i < cut) return mix64(seed, 100 + i) % k;
    return infinite[(i - cut) % infinite.size()];
  };
  Cert c;
  c.infinite_colors = std::set<uint64_t>(infinite.begin(), infinite.end());
  c.gap_bound = cut + infinite.size();
  c.answer = infinite.front();
  Instance I = base("RT1_k", "coloring_recurring", seed,
                    make_point([color](const Value& i) {
                      uint64_t u;
                      if (!i.try_u64(u)) return Value(0);
                      return Value(color(u));
                    }),
                    c);
  I.param = k;
  return I;
}

inline Instance coloring_periodic(uint64_t seed) {
  uint64_t k = 2 + mix64(seed) % 3;
  uint64_t m = 2 + mix64(seed, 1) % 3;
  std::vector<uint64_t> per;
  for (uint64_t j = 0; j < m; ++j) per.push_back(mix64(seed, 10 + j) % k);
  Cert c;
  c.infinite_colors = std::set<uint64_t>(per.begin(), per.end());
  c.gap_bound = m;
  c.answer = *c.infinite_colors->begin();
  Instance I = base("RT1_k", "coloring_periodic", seed,
                    make_point([per](const Value& i) {
                      uint64_t u;
                      if (!i.try_u64(u)) return Value(0);
                      return Value(per[u % per.size()]);
                    }),
                    c);
  I.param = k;
  return I;
}

inline Instance crt_recurring(uint64_t seed) {
  Instance I = coloring_recurring(seed);
  I.problem = "cRT1_k";
  I.generator = "crt_recurring";
  return I;
}

inline Instance coloring_range_n(uint64_t seed) {
  // Finitely many distinct colors, but their values are large naturals.
  uint64_t b = 10 + mix64(seed) % 90;
  std::vector<uint64_t> colors{b, b + 3 + mix64(seed, 1) % 5, b + 11};
  uint64_t mask = 1 + mix64(seed, 5) % 7;
  std::vector<uint64_t> infinite;
  for (uint64_t j = 0; j < 3; ++j)
    if (mask >> j & 1) infinite.push_back(colors[j]);
  uint64_t cut = 3 + mix64(seed, 6) % 5;
  auto color = [seed, colors, infinite, cut](uint64_t i) {
    if (i < cut) return colors[mix64(seed, 100 + i) % colors.size()];
    return infinite[(i - cut) % infinite.size()];
  };
  Cert c;
  c.infinite_colors = std::set<uint64_t>(infinite.begin(), infinite.end());
  c.gap_bound = cut + infinite.size();
  c.answer = infinite.front();
  return base("RT1_N", "coloring_range_n", seed,
              make_point([color](const Value& i) {
                uint64_t u;
                if (!i.try_u64(u)) return Value(0);
                return Value(color(u));
              }),
              c);
}

// ---- tagged and one-switch chains ----

inline Instance finds_ascending(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  auto leq = [r](const Value& a, const Value& b) {
    return Value::cmp(xor_label(a, r), xor_label(b, r)) <= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.answer = 0;
  c.chain = [r](uint64_t i) { return Value(i ^ r); };
  return base("findS", "finds_ascending", seed, lo_name_point(leq), c);
}

inline Instance finds_stable(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  uint64_t n0 = 1 + mix64(seed, 1) % 4;
  // n0 ranks at the bottom ascend; all later ranks descend above them.
  auto leq = [r, n0](const Value& a, const Value& b) {
    Value ra = xor_label(a, r), rb = xor_label(b, r);
    bool la = Value::cmp(ra, Value(n0)) < 0, lb = Value::cmp(rb, Value(n0)) < 0;
    if (la != lb) return la;
    return la ? Value::cmp(ra, rb) <= 0 : Value::cmp(ra, rb) >= 0;
  };
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.answer = 1;
  c.chain = [r, n0](uint64_t i) { return Value((n0 + i) ^ r); };
  return base("findS", "finds_stable", seed, lo_name_point(leq), c);
}

inline Instance findc_omega_star(uint64_t seed) {
  Instance I = lo_omega_star(seed);
  I.problem = "findC";
  I.generator = "findc_omega_star";
  return I;
}

inline Instance findc_peak(uint64_t seed) {
  Instance I = lo_zeta(seed);
  I.problem = "findC";
  I.generator = "findc_peak";
  uint64_t r = mix64(seed) & 0x3ff;
  uint64_t up = mix64(seed, 3) % 3;
  // Ascend through a few nonnegatives, then descend through the negatives.
  I.cert.chain = [r, up](uint64_t i) {
    if (i < up) return Value((2 * i) ^ r);
    return Value((2 * (i - up) + 1) ^ r);
  };
  return I;
}

// ---- trees ----

inline Instance tree_single_path(uint64_t seed) {
  auto pval = [seed](uint64_t i) { return mix64(seed, i) % 3; };
  Cert c;
  c.path = [pval](uint64_t i) { return Value(pval(i)); };
  return base("UC_Baire_desk", "tree_single_path", seed,
              tree_name_point([pval](const std::vector<Value>& node) {
                return planted_row_member(node, pval);
              }),
              c);
}

inline Instance tree_clutter_leftmost(uint64_t seed) {
  auto pval = [seed](uint64_t i) { return mix64(seed, i) % 2; };
  auto side = [seed, pval](uint64_t d) {
    return pval(d) + 1 + mix64(seed, 50, d) % 2;
  };
  // Planted path plus short branches strictly to its right at shallow depth.
  auto member = [pval, side](const std::vector<Value>& node) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (node[i] == Value(pval(i))) continue;
      if (i >= 8 || node[i] != Value(side(i))) return false;
      // Off-path step allowed, then at most one trailing zero.
      std::size_t rest = node.size() - i - 1;
      if (rest > 1) return false;
      if (rest == 1 && !node[i + 1].is_zero()) return false;
      return true;
    }
    return true;
  };
  Cert c;
  c.path = [pval](uint64_t i) { return Value(pval(i)); };
  return base("Pi11CA_leftmost", "tree_clutter_leftmost", seed,
              tree_name_point(member), c);
}

inline Instance tree_two_path(uint64_t seed) {
  auto pval = [seed](uint64_t i) { return mix64(seed, i) % 2; };
  uint64_t d0 = mix64(seed, 4) % 4;
  auto qval = [seed, pval, d0](uint64_t i) {
    if (i < d0) return pval(i);
    if (i == d0) return pval(i) + 1;
    return mix64(seed, 44, i) % 2;
  };
  auto member = [pval, qval](const std::vector<Value>& node) {
    return planted_row_member(node, pval) || planted_row_member(node, qval);
  };
  Cert c;
  c.path = [pval](uint64_t i) { return Value(pval(i)); };
  return base("Pi11CA_leftmost", "tree_two_path", seed,
              tree_name_point(member), c);
}

// ---- coded orders ----

inline Instance sigma01_order(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  auto leq = [r](const Value& a, const Value& b) {
    return Value::cmp(xor_label(a, r), xor_label(b, r)) >= 0;
  };
  // Step s decides relation code s: enumerate it iff the pair is related.
  auto name = make_point([leq](const Value& s) -> Value {
    Value a, b;
    unpair(s, a, b);
    if (!leq(a, b)) return Value(0);
    return Value::add(s, Value(1));
  });
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value(i ^ r); };
  return base("DS_Sigma01", "sigma01_order", seed, name, c);
}

inline Instance delta02_order(uint64_t seed) {
  uint64_t r = mix64(seed) & 0x3ff;
  auto leq = [r](const Value& a, const Value& b) {
    return Value::cmp(xor_label(a, r), xor_label(b, r)) >= 0;
  };
  // Relation bit for code s settles at a seeded stage below 6; earlier rows
  // carry seeded noise.
  auto settle = [seed](uint64_t s) { return mix64(seed, s, 99) % 6; };
  auto name = make_point([leq, settle, seed](const Value& i) -> Value {
    Value t, s;
    unpair(i, t, s);
    uint64_t tu, su;
    if (!t.try_u64(tu)) return Value(0);
    Value a, b;
    unpair(s, a, b);
    bool truth = leq(a, b);
    if (!s.try_u64(su)) return Value(truth ? 1 : 0);
    if (tu >= settle(su)) return Value(truth ? 1 : 0);
    return Value(mix64(seed, su, tu) % 2);
  });
  Cert c;
  c.leq = leq;
  c.in_domain = [](const Value&) { return true; };
  c.chain = [r](uint64_t i) { return Value(i ^ r); };
  c.modulus = settle;
  return base("DS_Delta02", "delta02_order", seed, name, c);
}

}  // namespace gen

// ---- oracle solutions ----

// The planted solution a certified instance carries, as a stream. Regression
// contract: this stream passes the instance's checker at every depth tried.
inline PointPtr oracle_solution(Instance& I) {
  const auto& d = problem(I.problem);
  const std::string& out = d.output_kind;
  auto from_index = [](std::function<Value(uint64_t)> f, std::string label) {
    return make_point(
        [f = std::move(f)](const Value& i) -> Value {
          uint64_t u;
          if (!i.try_u64(u)) return Value(0);
          return f(u);
        },
        std::move(label));
  };

  if (out == "descending_chain" || out == "bad_chain" ||
      out == "one_switch_chain") {
    if (!I.cert.chain) throw std::logic_error("instance lacks a chain");
    return from_index(I.cert.chain, "oracle_chain");
  }
  if (out == "path") {
    if (!I.cert.path) throw std::logic_error("instance lacks a path");
    return from_index(I.cert.path, "oracle_path");
  }
  if (out == "tagged_chain") {
    if (!I.cert.answer || !I.cert.chain)
      throw std::logic_error("instance lacks a tagged chain");
    uint64_t tag = *I.cert.answer;
    auto chain = I.cert.chain;
    return from_index(
        [tag, chain](uint64_t i) {
          return i == 0 ? Value(tag) : chain(i - 1);
        },
        "oracle_tagged");
  }
  if (out == "bit" || out == "number") {
    if (!I.cert.answer) throw std::logic_error("instance lacks an answer");
    return const_point(Value(*I.cert.answer), "oracle_answer");
  }
  if (out == "char_stream") {
    if (!I.cert.infinite_colors)
      throw std::logic_error("instance lacks an occurrence ledger");
    uint64_t j0 = *I.cert.infinite_colors->begin();
    auto name = I.name;
    return make_point(
        [name, j0](const Value& i) {
          return name->at(i) == Value(j0) ? Value(1) : Value(0);
        },
        "oracle_set");
  }
  if (out == "stream") {
    if (I.cert.row_answer) {
      auto ra = I.cert.row_answer;
      return from_index([ra](uint64_t n) { return Value(ra(n)); },
                        "oracle_rows");
    }
    if (I.cert.row_members) {
      auto rm = I.cert.row_members;
      return from_index(
          [rm](uint64_t n) {
            auto m = rm(n);
            return Value(m.empty() ? 0 : m.back() + 1);
          },
          "oracle_row_bounds");
    }
    if (I.cert.limit) return make_point(I.cert.limit, "oracle_limit");
    throw std::logic_error("instance lacks a limit");
  }
  throw std::logic_error("no oracle for output kind " + out);
}

// ---- catalog ----

inline const std::map<std::string, GeneratorDescriptor>& generator_catalog() {
  static const std::map<std::string, GeneratorDescriptor> cat = [] {
    std::map<std::string, GeneratorDescriptor> m;
    auto add = [&m](GeneratorDescriptor d) { m.emplace(d.id, std::move(d)); };
    add({"lo_omega_star", "DS", "naturals reversed under a seeded relabel",
         gen::lo_omega_star});
    add({"lo_omega_plus_omega_star", "DS",
         "an ascending copy of the naturals below a descending one",
         gen::lo_omega_plus_omega_star});
    add({"lo_zeta", "DS", "the integers under a seeded relabel",
         gen::lo_zeta});
    add({"lo_lex_sum", "DS",
         "pair codes ordered by descending block then ascending offset",
         gen::lo_lex_sum});
    add({"lo_kb_planted", "DS",
         "descent order of a planted-path tree, domain restricted to nodes",
         gen::lo_kb_planted});
    add({"qo_antichain", "BS", "equality only: every injection is bad",
         gen::qo_antichain});
    add({"qo_parallel_chains", "BS",
         "descending chains per residue class, incomparable across classes",
         gen::qo_parallel_chains});
    add({"qo_with_collapse", "BS",
         "total quasi-order collapsing blocks to equivalent elements",
         gen::qo_with_collapse});
    add({"jump_constant", "lim", "rows frozen from the start",
         gen::jump_constant});
    add({"jump_fires", "lim", "each coordinate bumps at a few seeded stages",
         gen::jump_fires});
    add({"jump_resets", "lim",
         "row t spikes at coordinate t: pointwise limit zero, no final row",
         gen::jump_resets});
    add({"jump_bounded", "lim_k", "seeded bumps with values below the bound",
         gen::jump_bounded});
    add({"lpo_allzero", "LPO", "the zero stream", gen::lpo_allzero});
    add({"lpo_spike", "LPO", "zero except one seeded position",
         gen::lpo_spike});
    add({"lpo_jump_allzero", "LPO_jump_1", "rows identically zero",
         gen::lpo_jump_allzero});
    add({"lpo_jump_stable", "LPO_jump_1",
         "rows converge to a spiked stream after fading noise",
         gen::lpo_jump_stable});
    add({"lpo_jump_resets", "LPO_jump_1",
         "moving spike: zero limit reached by no single row",
         gen::lpo_jump_resets});
    add({"cn_cofinite", "C_N", "enumerate a small excluded set",
         gen::cn_cofinite});
    add({"ucn_singleton", "UC_N", "enumerate everything except one value",
         gen::ucn_singleton});
    add({"bound_finite_enum", "Bound_Sigma01",
         "enumerate a finite set with padding", gen::bound_finite_enum});
    add({"pi11_rows_mixed", "Bound_Pi11",
         "finitely many finite rows among planted ones",
         gen::pi11_rows_mixed});
    add({"sigma11_rows_nonempty", "Sigma11_CN",
         "a nonempty seeded set of planted rows", gen::sigma11_rows_nonempty});
    add({"par_sigma11_rows", "par_Sigma11_CN",
         "a sequence of nonempty coded sets", gen::par_sigma11_rows});
    add({"coloring_recurring", "RT1_k",
         "finite noise, then a recurring cycle of colors",
         gen::coloring_recurring});
    add({"coloring_periodic", "RT1_k", "a purely periodic coloring",
         gen::coloring_periodic});
    add({"crt_recurring", "cRT1_k",
         "recurring-cycle coloring, color output flavor",
         gen::crt_recurring});
    add({"coloring_range_n", "RT1_N",
         "recurring cycle over large color values", gen::coloring_range_n});
    add({"finds_ascending", "findS", "ascending order under a seeded relabel",
         gen::finds_ascending});
    add({"finds_stable", "findS",
         "a short ascending run below a descending tail", gen::finds_stable});
    add({"findc_omega_star", "findC", "naturals reversed: descend forever",
         gen::findc_omega_star});
    add({"findc_peak", "findC",
         "integers: climb a few steps, then descend forever",
         gen::findc_peak});
    add({"tree_single_path", "UC_Baire_desk",
         "exactly the prefixes of one planted path", gen::tree_single_path});
    add({"tree_clutter_leftmost", "Pi11CA_leftmost",
         "planted path plus short branches strictly to its right",
         gen::tree_clutter_leftmost});
    add({"tree_two_path", "Pi11CA_leftmost",
         "two paths: the planted one is leftmost", gen::tree_two_path});
    add({"sigma01_order", "DS_Sigma01",
         "enumerated relation codes of a reversed relabeled order",
         gen::sigma01_order});
    add({"delta02_order", "DS_Delta02",
         "relation bits settle after seeded noisy stages",
         gen::delta02_order});
    return m;
  }();
  return cat;
}

inline const GeneratorDescriptor& generator(const std::string& id) {
  const auto& cat = generator_catalog();
  auto it = cat.find(id);
  if (it == cat.end()) throw std::out_of_range("unknown generator: " + id);
  return it->second;
}

inline Instance make_instance(const std::string& gen_id, uint64_t seed) {
  return generator(gen_id).make(seed);
}

inline std::vector<std::string> generators_for(const std::string& problem_id) {
  std::vector<std::string> ids;
  for (const auto& [id, d] : generator_catalog())
    if (d.problem == problem_id) ids.push_back(id);
  return ids;
}

}  // namespace wlab
