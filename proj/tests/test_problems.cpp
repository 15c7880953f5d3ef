#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "wlab/problems.hpp"

using namespace wlab;

namespace {

Instance inst(std::string prob, PointPtr name, Cert cert = {}) {
  Instance I;
  I.problem = std::move(prob);
  I.name = std::move(name);
  I.cert = std::move(cert);
  return I;
}

PointPtr stream(std::function<Value(uint64_t)> f) {
  return make_point([f = std::move(f)](const Value& i) {
    uint64_t u = 0;
    i.try_u64(u);
    return f(u);
  });
}

PointPtr nat_order() {
  return lo_name_point(
      [](const Value& a, const Value& b) { return Value::cmp(a, b) <= 0; });
}
PointPtr reversed_order() {
  return lo_name_point(
      [](const Value& a, const Value& b) { return Value::cmp(a, b) >= 0; });
}

}  // namespace

TEST_CASE("descending-sequence checker") {
  auto rev = inst("DS", reversed_order());
  auto identity = stream([](uint64_t i) { return Value(i); });
  CHECK(check_ds(rev, *identity, 25).ok());

  auto nat = inst("DS", nat_order());
  auto up = stream([](uint64_t i) { return Value(5 + i); });
  auto r = check_ds(nat, *up, 2);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("at 0") != std::string::npos);

  // Domain gaps are violations for solutions, not for the order.
  auto evens = inst("DS", lo_name_point([](const Value& a, const Value& b) {
                      if (!Value::mod(a, Value(2)).is_zero()) return false;
                      if (!Value::mod(b, Value(2)).is_zero()) return false;
                      return Value::cmp(a, b) >= 0;
                    }));
  auto odd = stream([](uint64_t i) { return Value(2 * i + 1); });
  CHECK(check_ds(evens, *odd, 3).kind == Check::Violation);
  auto even = stream([](uint64_t i) { return Value(2 * i); });
  CHECK(check_ds(evens, *even, 25).ok());
}

TEST_CASE("bad-sequence checker") {
  auto antichain = inst("BS", lo_name_point([](const Value& a, const Value& b) {
                          return a == b;
                        }));
  auto identity = stream([](uint64_t i) { return Value(i); });
  CHECK(check_bs(antichain, *identity, 25).ok());

  auto nat = inst("BS", nat_order());
  auto pairup = stream([](uint64_t i) { return Value(i == 0 ? 3 : 5); });
  auto r = check_bs(nat, *pairup, 2);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("(0,1)") != std::string::npos);

  // Repeating an element is itself a violation: it sits below itself.
  auto rep = stream([](uint64_t) { return Value(7); });
  CHECK(check_bs(antichain, *rep, 2).kind == Check::Violation);
}

TEST_CASE("descending implies bad on every sampled linear order") {
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<uint64_t> rank(10);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    auto leq = [rank](const Value& a, const Value& b) {
      uint64_t x = 0, y = 0;
      if (!a.try_u64(x) || !b.try_u64(y) || x >= 10 || y >= 10) return false;
      return rank[x] <= rank[y];
    };
    auto I = inst("DS", lo_name_point(leq));
    // Enumerate elements by strictly decreasing rank.
    std::vector<Value> desc(10);
    for (uint64_t e = 0; e < 10; ++e) desc[9 - rank[e]] = Value(e);
    auto sol = stream([desc](uint64_t i) { return desc[i % 10]; });
    // Only the honest prefix length: past 10 the chain would repeat.
    REQUIRE(check_ds(I, *sol, 10).ok());
    CHECK(check_bs(I, *sol, 10).ok());
  }
}

TEST_CASE("limit checker compares at the certified modulus") {
  // Rows change coordinate k once, at stage k+1, from k to k+10.
  auto rows = make_point([](const Value& i) {
    Value t, k;
    unpair(i, t, k);
    if (Value::cmp(t, Value::add(k, Value(1))) >= 0)
      return Value::add(k, Value(10));
    return k;
  });
  Cert c;
  c.modulus = [](uint64_t k) { return k + 1; };
  auto I = inst("lim", rows, c);
  auto good = stream([](uint64_t k) { return Value(k + 10); });
  CHECK(check_lim(I, *good, 20).ok());
  auto stale = stream([](uint64_t k) { return Value(k); });
  auto r = check_lim(I, *stale, 20);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("coordinate 0") != std::string::npos);

  auto uncert = inst("lim", rows);
  CHECK(check_lim(uncert, *good, 20).kind == Check::Inconclusive);

  // Bounded-alphabet variant flags out-of-range coordinates.
  auto constant = make_point([](const Value& i) {
    Value t, k;
    unpair(i, t, k);
    return Value(5);
  });
  Cert c2;
  c2.modulus = [](uint64_t) { return 0; };
  auto J = inst("lim_k", constant, c2);
  J.param = 3;
  auto five = stream([](uint64_t) { return Value(5); });
  CHECK(check_lim(J, *five, 4).kind == Check::Violation);
  J.param = 6;
  CHECK(check_lim(J, *five, 4).ok());
}

TEST_CASE("zero-test checker") {
  Cert zero_cert;
  zero_cert.answer = 0;
  auto zeros = inst("LPO", const_point(Value(0)), zero_cert);
  auto yes = const_point(Value(1));
  auto no = const_point(Value(0));
  CHECK(check_lpo(zeros, *no, 10).ok());
  auto r = check_lpo(zeros, *yes, 10);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("certified all-zero") != std::string::npos);

  auto spike = inst("LPO", stream([](uint64_t i) {
                      return Value(i == 3 ? 1 : 0);
                    }));
  CHECK(check_lpo(spike, *yes, 10).ok());
  CHECK(check_lpo(spike, *no, 10).kind == Check::Violation);
  // Window too small to see the spike.
  CHECK(check_lpo(spike, *yes, 3).kind == Check::Inconclusive);
  CHECK(check_lpo(spike, *no, 3).kind == Check::Inconclusive);

  auto two = const_point(Value(2));
  CHECK(check_lpo(spike, *two, 10).kind == Check::Violation);
}

TEST_CASE("choice checkers against a co-enumeration") {
  // Exclusions 1,2,3,...: the set is {0}.
  auto excl = stream([](uint64_t i) { return Value(i + 2); });
  Cert c;
  c.in_set = [](uint64_t n) { return n == 0; };
  auto I = inst("C_N", excl, c);
  CHECK(check_cn(I, *const_point(Value(0)), 10).ok());
  auto r = check_cn(I, *const_point(Value(2)), 10);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("enumerated as excluded") != std::string::npos);
  // Beyond the window, the certificate still rules.
  CHECK(check_cn(I, *const_point(Value(99)), 10).kind == Check::Violation);

  auto uncert = inst("C_N", excl);
  CHECK(check_cn(uncert, *const_point(Value(99)), 10).ok());

  Cert u;
  u.in_set = [](uint64_t n) { return n == 4; };
  u.answer = 4;
  auto pads = const_point(Value(0));
  auto J = inst("UC_N", pads, u);
  CHECK(check_ucn(J, *const_point(Value(4)), 10).ok());
  CHECK(check_ucn(J, *const_point(Value(5)), 10).kind == Check::Violation);
}

TEST_CASE("bound checkers") {
  // Enumeration presents 3 and 7 with padding.
  auto en = prefix_point({Value(0), Value(4), Value(0), Value(8)});
  Cert c;
  c.members = std::vector<uint64_t>{3, 7};
  auto I = inst("Bound_Sigma01", en, c);
  CHECK(check_bound_enumerated(I, *const_point(Value(8)), 10).ok());
  CHECK(check_bound_enumerated(I, *const_point(Value(7)), 10).kind ==
        Check::Violation);
  auto uncert = inst("Bound_Sigma01", en);
  CHECK(check_bound_enumerated(uncert, *const_point(Value(5)), 10).kind ==
        Check::Violation);
  CHECK(check_bound_enumerated(uncert, *const_point(Value(100)), 10).ok());

  Cert wf;
  wf.members = std::vector<uint64_t>{0, 1};
  auto rows = inst("Bound_Pi11", const_point(Value(0)), wf);
  CHECK(check_bound_wf_rows(rows, *const_point(Value(2)), 10).ok());
  CHECK(check_bound_wf_rows(rows, *const_point(Value(1)), 10).kind ==
        Check::Violation);
  Cert empty;
  empty.members = std::vector<uint64_t>{};
  auto planted = inst("Bound_Pi11", const_point(Value(0)), empty);
  CHECK(check_bound_wf_rows(planted, *const_point(Value(0)), 10).ok());
  auto nocert = inst("Bound_Pi11", const_point(Value(0)));
  CHECK(check_bound_wf_rows(nocert, *const_point(Value(5)), 10).kind ==
        Check::Inconclusive);
}

TEST_CASE("coloring checkers") {
  // Five zeros, then ones forever.
  auto coloring = stream([](uint64_t i) { return Value(i < 5 ? 0 : 1); });
  Cert c;
  c.infinite_colors = std::set<uint64_t>{1};
  auto I = inst("cRT1_k", coloring, c);
  I.param = 2;
  CHECK(check_color_choice(I, *const_point(Value(1)), 10).ok());
  CHECK(check_color_choice(I, *const_point(Value(0)), 10).kind ==
        Check::Violation);
  CHECK(check_color_choice(I, *const_point(Value(5)), 10).kind ==
        Check::Violation);
  auto nocert = inst("cRT1_k", coloring);
  CHECK(check_color_choice(nocert, *const_point(Value(1)), 10).kind ==
        Check::Inconclusive);

  auto J = inst("RT1_k", coloring, c);
  auto tail = stream([](uint64_t i) { return Value(i >= 5 ? 1 : 0); });
  CHECK(check_homogeneous_set(J, *tail, 12).ok());
  auto all = const_point(Value(1));
  auto r = check_homogeneous_set(J, *all, 12);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("different colors") != std::string::npos);
  auto zeros = stream([](uint64_t i) { return Value(i < 5 ? 1 : 0); });
  CHECK(check_homogeneous_set(J, *zeros, 12).kind == Check::Violation);
  CHECK(check_homogeneous_set(J, *const_point(Value(0)), 12).kind ==
        Check::Inconclusive);
}

TEST_CASE("tagged-chain checker") {
  Cert asc;
  asc.answer = 0;
  auto nat = inst("findS", nat_order(), asc);
  auto up = stream([](uint64_t i) { return Value(i == 0 ? 0 : i - 1); });
  CHECK(check_finds(nat, *up, 10).ok());
  // A certified ascending order rejects the descending tag outright.
  auto down = stream([](uint64_t i) { return Value(i == 0 ? 1 : 100 - i); });
  CHECK(check_finds(nat, *down, 3).kind == Check::Violation);

  Cert desc;
  desc.answer = 1;
  auto rev = inst("findS", reversed_order(), desc);
  auto dn = stream([](uint64_t i) { return Value(i == 0 ? 1 : i - 1); });
  CHECK(check_finds(rev, *dn, 10).ok());
  auto bad_tag = const_point(Value(7));
  CHECK(check_finds(rev, *bad_tag, 3).kind == Check::Violation);
  // Broken chain: repeats an element.
  auto stuck = stream([](uint64_t i) { return Value(i == 0 ? 1 : 5); });
  auto r = check_finds(rev, *stuck, 4);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("chain breaks") != std::string::npos);
}

TEST_CASE("one-switch-chain checker") {
  auto nat = inst("findC", nat_order());
  auto up = stream([](uint64_t i) { return Value(i); });
  CHECK(check_findc(nat, *up, 20).ok());
  auto down = stream([](uint64_t i) { return Value(100 - i); });
  CHECK(check_findc(nat, *down, 20).ok());
  auto peak = stream([](uint64_t i) { return Value(i < 3 ? i : 103 - i); });
  CHECK(check_findc(nat, *peak, 20).ok());
  auto valley = stream([](uint64_t i) { return Value(i < 3 ? 10 - i : i); });
  auto r = check_findc(nat, *valley, 20);
  CHECK(r.kind == Check::Violation);
  CHECK(r.detail.find("turns upward") != std::string::npos);
  auto flat = const_point(Value(4));
  CHECK(check_findc(nat, *flat, 3).kind == Check::Violation);
}

TEST_CASE("planted-path checker") {
  auto zero_tree = tree_name_point([](const std::vector<Value>& node) {
    for (const auto& v : node)
      if (!v.is_zero()) return false;
    return true;
  });
  Cert c;
  c.path = [](uint64_t) { return Value(0); };
  auto I = inst("Pi11CA_leftmost", zero_tree, c);
  CHECK(check_planted_path(I, *const_point(Value(0)), 10).ok());

  // Two paths, leftmost goes through 0.
  auto two = tree_name_point([](const std::vector<Value>& node) {
    if (node.empty()) return true;
    if (node[0] != Value(0) && node[0] != Value(1)) return false;
    for (std::size_t i = 1; i < node.size(); ++i)
      if (!node[i].is_zero()) return false;
    return true;
  });
  auto J = inst("Pi11CA_leftmost", two, c);
  auto right = stream([](uint64_t i) { return Value(i == 0 ? 1 : 0); });
  CHECK(check_planted_path(J, *right, 10).kind == Check::Violation);

  auto nocert = inst("Pi11CA_leftmost", zero_tree);
  CHECK(check_planted_path(nocert, *const_point(Value(0)), 10).kind ==
        Check::Inconclusive);
  // Certificate pointing outside the tree is an instance defect, not a
  // solution violation.
  Cert off;
  off.path = [](uint64_t) { return Value(9); };
  auto K = inst("UC_Baire_desk", zero_tree, off);
  CHECK(check_planted_path(K, *const_point(Value(9)), 10).kind ==
        Check::Inconclusive);
}

TEST_CASE("certified membership choice") {
  Cert c;
  c.in_set = [](uint64_t n) { return n % 2 == 0; };
  auto I = inst("Sigma11_CN", const_point(Value(0)), c);
  CHECK(check_certified_choice(I, *const_point(Value(4)), 5).ok());
  CHECK(check_certified_choice(I, *const_point(Value(3)), 5).kind ==
        Check::Violation);
  auto nocert = inst("Sigma11_CN", const_point(Value(0)));
  CHECK(check_certified_choice(nocert, *const_point(Value(4)), 5).kind ==
        Check::Inconclusive);
}

TEST_CASE("coded orders demand a relation certificate") {
  auto& ds_coded = problem("DS_Sigma01");
  auto I = inst("DS_Sigma01", const_point(Value(0)));
  auto sol = stream([](uint64_t i) { return Value(i); });
  CHECK(ds_coded.check(I, *sol, 5).kind == Check::Inconclusive);
  Cert c;
  c.leq = [](const Value& a, const Value& b) { return Value::cmp(a, b) >= 0; };
  auto J = inst("DS_Sigma01", const_point(Value(0)), c);
  CHECK(ds_coded.check(J, *sol, 10).ok());
}

TEST_CASE("jump descriptor solves on the certified limit") {
  auto& lpoj = problem("LPO_jump_1");
  CHECK(lpoj.id == "LPO_jump_1");
  // Rows converge to a stream with a spike at 2.
  Cert c;
  c.limit = [](const Value& k) { return Value(k == Value(2) ? 7 : 0); };
  auto I = inst("LPO_jump_1", const_point(Value(0)), c);
  CHECK(lpoj.check(I, *const_point(Value(1)), 10).ok());
  CHECK(lpoj.check(I, *const_point(Value(0)), 10).kind == Check::Violation);
  auto nocert = inst("LPO_jump_1", const_point(Value(0)));
  CHECK(lpoj.check(nocert, *const_point(Value(1)), 10).kind ==
        Check::Inconclusive);
}

TEST_CASE("first-order restriction is certificate-only") {
  auto fo_ds = fo_part(problem("DS"));
  CHECK(fo_ds.id == "fo_DS");
  CHECK(fo_ds.output_kind == "number");
  Cert c;
  c.in_set = [](uint64_t n) { return n >= 3; };
  auto I = inst("fo_DS", reversed_order(), c);
  CHECK(fo_ds.check(I, *const_point(Value(5)), 10).ok());
  CHECK(fo_ds.check(I, *const_point(Value(2)), 10).kind == Check::Violation);
  auto nocert = inst("fo_DS", reversed_order());
  CHECK(fo_ds.check(nocert, *const_point(Value(5)), 10).kind ==
        Check::Inconclusive);
}

TEST_CASE("activity-flag wrapper") {
  auto maybe_lpo = maybe_wrap(problem("LPO"));
  CHECK(maybe_lpo.id == "maybe_LPO");

  auto quiet = inst("maybe_LPO", const_point(Value(0)));
  CHECK(maybe_lpo.check(quiet, *const_point(Value(0)), 10).ok());
  auto eager = stream([](uint64_t i) { return Value(i == 3 ? 1 : 0); });
  CHECK(maybe_lpo.check(quiet, *eager, 10).kind == Check::Violation);

  // Flag at 2, inner stream has a spike at 3: inner answer is 1.
  auto flagged = inst("maybe_LPO", stream([](uint64_t i) {
                        if (i == 2) return Value(1);
                        if (i == 6) return Value(9);  // inner index 3
                        return Value(0);
                      }));
  auto good = stream([](uint64_t i) {
    if (i == 2) return Value(1);
    if (i == 3) return Value(1);  // inner answer
    return Value(0);
  });
  CHECK(maybe_lpo.check(flagged, *good, 10).ok());
  // Unflagged output on a flagged input.
  CHECK(maybe_lpo.check(flagged, *const_point(Value(0)), 10).kind ==
        Check::Violation);
  // Flag at the wrong position.
  auto early = stream([](uint64_t i) { return Value(i == 1 ? 1 : 0); });
  CHECK(maybe_lpo.check(flagged, *early, 10).kind == Check::Violation);
  // Malformed input flag: not the literal 1.
  auto odd_flag = inst("maybe_LPO", stream([](uint64_t i) {
                         return Value(i == 2 ? 3 : 0);
                       }));
  CHECK(maybe_lpo.check(odd_flag, *good, 10).kind == Check::Inconclusive);
}

TEST_CASE("catalog integrity") {
  const auto& cat = problem_catalog();
  CHECK(cat.size() >= 25);
  for (const auto& [id, d] : cat) {
    CHECK(id == d.id);
    CHECK(d.check != nullptr);
    CHECK_FALSE(d.input_kind.empty());
    CHECK_FALSE(d.output_kind.empty());
    CHECK_FALSE(d.summary.empty());
  }
  CHECK(problem("DS").output_kind == "descending_chain");
  CHECK_THROWS_AS(problem("no_such_problem"), std::out_of_range);
}

TEST_CASE("verdicts are monotone in depth") {
  // Ok at depth d stays non-Violation at every smaller depth; a Violation
  // stays a Violation as the depth grows.
  auto rev = inst("DS", reversed_order());
  auto identity = stream([](uint64_t i) { return Value(i); });
  REQUIRE(check_ds(rev, *identity, 30).ok());
  for (uint64_t d = 0; d < 30; ++d)
    CHECK(check_ds(rev, *identity, d).kind != Check::Violation);

  auto nat = inst("DS", nat_order());
  auto up = stream([](uint64_t i) { return Value(i); });
  REQUIRE(check_ds(nat, *up, 2).kind == Check::Violation);
  for (uint64_t d = 2; d < 30; ++d)
    CHECK(check_ds(nat, *up, d).kind == Check::Violation);

  auto spike = inst("LPO", stream([](uint64_t i) {
                      return Value(i == 7 ? 2 : 0);
                    }));
  auto no = const_point(Value(0));
  REQUIRE(check_lpo(spike, *no, 8).kind == Check::Violation);
  for (uint64_t d = 8; d < 20; ++d)
    CHECK(check_lpo(spike, *no, d).kind == Check::Violation);
  for (uint64_t d = 0; d < 8; ++d)
    CHECK(check_lpo(spike, *no, d).kind == Check::Inconclusive);
}
