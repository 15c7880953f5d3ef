#include <catch2/catch_amalgamated.hpp>

#include "wlab/generators.hpp"

using namespace wlab;

static std::vector<uint64_t> kSeeds{1, 2, 3, 4, 5};

TEST_CASE("generator catalog is well formed") {
  const auto& cat = generator_catalog();
  REQUIRE(cat.size() >= 30);
  for (const auto& [id, d] : cat) {
    CAPTURE(id);
    REQUIRE(d.id == id);
    REQUIRE(d.make != nullptr);
    REQUIRE_NOTHROW(problem(d.problem));
    REQUIRE_FALSE(d.summary.empty());
  }
  REQUIRE(generators_for("DS").size() == 5);
  REQUIRE(generators_for("BS").size() == 3);
  REQUIRE(generators_for("RT1_k") ==
          std::vector<std::string>{"coloring_periodic", "coloring_recurring"});
  REQUIRE_THROWS_AS(generator("no_such"), std::out_of_range);
}

TEST_CASE("planted solutions satisfy their checkers") {
  for (const auto& [id, d] : generator_catalog()) {
    for (uint64_t seed : kSeeds) {
      CAPTURE(id, seed);
      Instance I = d.make(seed);
      REQUIRE(I.problem == d.problem);
      REQUIRE(I.generator == id);
      REQUIRE(I.seed == seed);
      PointPtr sol = oracle_solution(I);
      const auto& checker = problem(I.problem).check;
      for (uint64_t depth : {10, 25, 50}) {
        CAPTURE(depth);
        CheckResult r = checker(I, *sol, depth);
        CAPTURE(r.detail);
        REQUIRE(r.kind != Check::Violation);
        if (depth == 50) REQUIRE(r.kind == Check::Ok);
      }
    }
  }
}

TEST_CASE("certified relations satisfy order axioms on windows") {
  for (const auto& [id, d] : generator_catalog()) {
    bool linear = d.problem == "DS" || d.problem == "findS" ||
                  d.problem == "findC" || d.problem == "DS_Sigma01" ||
                  d.problem == "DS_Delta02";
    bool quasi = d.problem == "BS";
    if (!linear && !quasi) continue;
    for (uint64_t seed : kSeeds) {
      CAPTURE(id, seed);
      Instance I = d.make(seed);
      REQUIRE(I.cert.leq);
      auto name = lo_name_point(I.cert.leq);
      auto bad = linear ? lo_check_window(*name, 16) : qo_check_window(*name, 16);
      CAPTURE(bad.value_or(""));
      REQUIRE_FALSE(bad.has_value());
    }
  }
}

TEST_CASE("planted chains descend pairwise, not just adjacently") {
  for (const auto& [id, d] : generator_catalog()) {
    bool desc = d.problem == "DS" || d.problem == "DS_Sigma01" ||
                d.problem == "DS_Delta02";
    bool bad = d.problem == "BS";
    if (!desc && !bad) continue;
    for (uint64_t seed : kSeeds) {
      CAPTURE(id, seed);
      Instance I = d.make(seed);
      for (uint64_t i = 0; i < 12; ++i) {
        for (uint64_t j = i + 1; j < 12; ++j) {
          CAPTURE(i, j);
          Value lo = I.cert.chain(j), hi = I.cert.chain(i);
          if (desc) {
            REQUIRE(I.cert.leq(lo, hi));
            REQUIRE_FALSE(I.cert.leq(hi, lo));
          } else {
            REQUIRE_FALSE(I.cert.leq(hi, lo));
          }
        }
      }
    }
  }
}

TEST_CASE("recurring colors appear within every ledgered gap") {
  for (const char* id :
       {"coloring_recurring", "coloring_periodic", "crt_recurring",
        "coloring_range_n"}) {
    for (uint64_t seed : kSeeds) {
      CAPTURE(id, seed);
      Instance I = make_instance(id, seed);
      REQUIRE(I.cert.infinite_colors);
      REQUIRE(I.cert.gap_bound);
      uint64_t g = *I.cert.gap_bound;
      for (uint64_t c : *I.cert.infinite_colors) {
        for (uint64_t start = 0; start < 60; ++start) {
          bool found = false;
          for (uint64_t i = start; i < start + g && !found; ++i)
            found = I.name->at(i) == Value(c);
          CAPTURE(c, start);
          REQUIRE(found);
        }
      }
    }
  }
}

TEST_CASE("row sequences are frozen from their settling stage on") {
  for (const char* id : {"jump_constant", "jump_fires", "jump_resets",
                         "jump_bounded", "lpo_jump_allzero", "lpo_jump_stable",
                         "lpo_jump_resets", "delta02_order"}) {
    for (uint64_t seed : kSeeds) {
      CAPTURE(id, seed);
      Instance I = make_instance(id, seed);
      REQUIRE(I.cert.modulus);
      bool has_limit = static_cast<bool>(I.cert.limit);
      for (uint64_t k = 0; k < 8; ++k) {
        uint64_t m = I.cert.modulus(k);
        Value settled = I.name->at(pair(Value(m), Value(k)));
        for (uint64_t t = m; t < m + 5; ++t) {
          CAPTURE(k, t);
          REQUIRE(I.name->at(pair(Value(t), Value(k))) == settled);
        }
        if (has_limit) REQUIRE(I.cert.limit(Value(k)) == settled);
      }
    }
  }
}

TEST_CASE("instances are reproducible from their seed") {
  for (const auto& [id, d] : generator_catalog()) {
    CAPTURE(id);
    Instance a = d.make(7), b = d.make(7), c = d.make(8);
    bool differs = false;
    for (uint64_t i = 0; i < 48; ++i) {
      REQUIRE(a.name->at(i) == b.name->at(i));
      differs = differs || a.name->at(i) != c.name->at(i);
    }
    PointPtr sa = oracle_solution(a), sb = oracle_solution(b);
    for (uint64_t i = 0; i < 16; ++i) REQUIRE(sa->at(i) == sb->at(i));
  }
}

TEST_CASE("bounded-value generators respect their parameter") {
  for (uint64_t seed : kSeeds) {
    Instance I = make_instance("jump_bounded", seed);
    REQUIRE(I.param);
    for (uint64_t i = 0; i < 60; ++i) {
      Value v = I.name->at(i);
      REQUIRE(Value::cmp(v, Value(*I.param)) < 0);
    }
    Instance C = make_instance("coloring_recurring", seed);
    REQUIRE(C.param);
    for (uint64_t i = 0; i < 60; ++i)
      REQUIRE(Value::cmp(C.name->at(i), Value(*C.param)) < 0);
  }
}

TEST_CASE("enumerated order codes decode to the certified relation") {
  for (uint64_t seed : kSeeds) {
    Instance I = make_instance("sigma01_order", seed);
    auto enumd = enumerated_prefix(*I.name, 200);
    for (uint64_t s = 0; s < 200; ++s) {
      Value a, b;
      unpair(Value(s), a, b);
      CAPTURE(seed, s);
      REQUIRE(enumd.count(s) == (I.cert.leq(a, b) ? 1 : 0));
    }
  }
}
