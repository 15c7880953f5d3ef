#pragma once
// Problem catalog: multi-valued problems with depth-bounded solution checkers.
//
// A checker inspects a finite window of the instance name and a prefix of a
// proposed solution stream and returns Ok, Violation (with a witness), or
// Inconclusive when the window cannot settle the matter. Checkers are
// prefix-sound: a Violation is genuine, never an artifact of the window, and
// an Ok at depth d can never turn into a Violation at a smaller depth.
//
// Instances carry certificates: ground-truth ledgers recorded by generators.
// Semi-decidable predicates (exhaustive zero tests, well-foundedness, limits)
// are settled by certificate, never by unbounded search; without the relevant
// certificate those checkers answer Inconclusive. Certificates also stand in
// for relation queries on elements too large for a name's reachable window.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlab/spaces.hpp"

namespace wlab {

enum class Check { Ok, Violation, Inconclusive };

struct CheckResult {
  Check kind = Check::Ok;
  std::string detail;

  bool ok() const { return kind == Check::Ok; }
  static CheckResult pass() { return {Check::Ok, {}}; }
  static CheckResult violation(std::string d) {
    return {Check::Violation, std::move(d)};
  }
  static CheckResult inconclusive(std::string d) {
    return {Check::Inconclusive, std::move(d)};
  }
};

inline const char* check_name(Check k) {
  switch (k) {
    case Check::Ok: return "Ok";
    case Check::Violation: return "Violation";
    case Check::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// Ground truth a generator records beside the name it emits. All fields are
// optional; each checker documents what it consumes. Functions must be pure.
struct Cert {
  // Orders and quasi-orders: the exact relation and its domain.
  std::function<bool(const Value&, const Value&)> leq;
  std::function<bool(const Value&)> in_domain;
  // Planted solution sequence (descending / bad / chain), index -> element.
  std::function<Value(uint64_t)> chain;

  // Convergent rows: pointwise limit and a settling stage per coordinate.
  std::function<Value(const Value&)> limit;
  std::function<uint64_t(uint64_t)> modulus;

  // Scalar problems: the exact answer, or exact membership of valid answers.
  std::optional<uint64_t> answer;
  std::function<bool(uint64_t)> in_set;
  // Finite-set problems: the full member list (present and empty = certified
  // empty; absent = uncertified).
  std::optional<std::vector<uint64_t>> members;

  // Colorings: which colors occur infinitely often, and a gap bound within
  // which oracle solutions always present a member (used to size windows).
  std::optional<std::set<uint64_t>> infinite_colors;
  std::optional<uint64_t> gap_bound;

  // Trees: planted path (leftmost or unique), and per-row planted paths.
  std::function<Value(uint64_t)> path;
  std::function<Value(const Value&, uint64_t)> row_path;

  // Parallelized instances: per-component ground truth.
  std::function<bool(uint64_t, uint64_t)> in_row_set;
  std::function<std::vector<uint64_t>(uint64_t)> row_members;
  std::function<uint64_t(uint64_t)> row_answer;

  // Flagged instances: whether the input ever signals activity.
  std::optional<bool> active;
};

struct Instance {
  std::string problem;
  PointPtr name;
  Cert cert;
  std::optional<uint64_t> param;  // family parameter (colors, value bound)
  std::string generator;          // provenance for reports
  uint64_t seed = 0;
};

using Checker = std::function<CheckResult(Instance&, Point&, uint64_t)>;

struct ProblemDescriptor {
  std::string id;
  std::string input_kind;
  std::string output_kind;
  std::string summary;
  Checker check;
};

// ---- relation access ----
// Prefer the certified relation: it is exact and reaches elements the name
// may not (coded orders, elements beyond a transducer's output window).

inline bool inst_leq(Instance& I, const Value& a, const Value& b) {
  if (I.cert.leq) return I.cert.leq(a, b);
  return lo_leq(*I.name, a, b);
}
inline bool inst_less(Instance& I, const Value& a, const Value& b) {
  return inst_leq(I, a, b) && !inst_leq(I, b, a);
}
inline bool inst_in_domain(Instance& I, const Value& a) {
  if (I.cert.in_domain) return I.cert.in_domain(a);
  if (I.cert.leq) return I.cert.leq(a, a);
  return lo_in_domain(*I.name, a);
}

inline std::vector<Value> solution_prefix(Point& sol, uint64_t m) {
  std::vector<Value> xs;
  xs.reserve(m);
  for (uint64_t i = 0; i < m; ++i) xs.push_back(sol.at(i));
  return xs;
}

// ---- checkers ----

// Descending sequence: every element in the domain, each strictly below its
// predecessor.
inline CheckResult check_ds(Instance& I, Point& sol, uint64_t depth) {
  auto x = solution_prefix(sol, depth);
  for (uint64_t i = 0; i < x.size(); ++i)
    if (!inst_in_domain(I, x[i]))
      return CheckResult::violation("element " + std::to_string(i) +
                                    " outside the order's domain");
  for (uint64_t i = 0; i + 1 < x.size(); ++i)
    if (!inst_less(I, x[i + 1], x[i]))
      return CheckResult::violation("not strictly descending at " +
                                    std::to_string(i));
  return CheckResult::pass();
}

// Bad sequence: no earlier element sits at or below a later one.
inline CheckResult check_bs(Instance& I, Point& sol, uint64_t depth) {
  auto x = solution_prefix(sol, depth);
  for (uint64_t i = 0; i < x.size(); ++i)
    if (!inst_in_domain(I, x[i]))
      return CheckResult::violation("element " + std::to_string(i) +
                                    " outside the order's domain");
  for (uint64_t i = 0; i < x.size(); ++i)
    for (uint64_t j = i + 1; j < x.size(); ++j)
      if (inst_leq(I, x[i], x[j]))
        return CheckResult::violation("pair (" + std::to_string(i) + "," +
                                      std::to_string(j) +
                                      ") ordered upward");
  return CheckResult::pass();
}

// Pointwise limit of convergent rows, compared at the certified modulus.
inline CheckResult check_lim(Instance& I, Point& sol, uint64_t depth) {
  if (!I.cert.modulus)
    return CheckResult::inconclusive("limit comparison needs a modulus");
  for (uint64_t k = 0; k < depth; ++k) {
    Value want = I.name->at(pair(Value(I.cert.modulus(k)), Value(k)));
    Value got = sol.at(k);
    if (got != want)
      return CheckResult::violation("coordinate " + std::to_string(k) +
                                    " is " + got.to_string() +
                                    ", settled row has " + want.to_string());
    if (I.param && !(got < Value(*I.param)))
      return CheckResult::violation("coordinate " + std::to_string(k) +
                                    " exceeds the value bound");
  }
  return CheckResult::pass();
}

// Zero test: answer 1 must be witnessed by a nonzero entry in the window;
// answer 0 is only certifiable, never observable.
inline CheckResult check_lpo(Instance& I, Point& sol, uint64_t depth) {
  Value a = sol.at(0);
  if (a != Value(0) && a != Value(1))
    return CheckResult::violation("answer must be 0 or 1");
  std::optional<uint64_t> nonzero;
  for (uint64_t i = 0; i < depth; ++i)
    if (!I.name->at(i).is_zero()) {
      nonzero = i;
      break;
    }
  if (a == Value(1)) {
    if (nonzero) return CheckResult::pass();
    if (I.cert.answer && *I.cert.answer == 0)
      return CheckResult::violation(
          "claims a nonzero entry on a certified all-zero stream");
    return CheckResult::inconclusive("no nonzero entry within depth");
  }
  if (nonzero)
    return CheckResult::violation("claims all-zero but entry " +
                                  std::to_string(*nonzero) + " is nonzero");
  if (I.cert.answer && *I.cert.answer == 0) return CheckResult::pass();
  return CheckResult::inconclusive("all-zero claim needs a certificate");
}

// Choice against a co-enumeration: the answer must never be enumerated as
// excluded; with ground truth, membership is exact.
inline CheckResult check_cn(Instance& I, Point& sol, uint64_t depth) {
  Value a = sol.at(0);
  uint64_t n;
  if (!a.try_u64(n))
    return CheckResult::inconclusive("answer beyond the ledger range");
  auto excluded = enumerated_prefix(*I.name, depth);
  if (excluded.count(n))
    return CheckResult::violation("chosen value " + std::to_string(n) +
                                  " is enumerated as excluded");
  if (I.cert.in_set)
    return I.cert.in_set(n)
               ? CheckResult::pass()
               : CheckResult::violation("chosen value " + std::to_string(n) +
                                        " is not a member");
  return CheckResult::pass();
}

inline CheckResult check_ucn(Instance& I, Point& sol, uint64_t depth) {
  CheckResult base = check_cn(I, sol, depth);
  if (base.kind != Check::Ok) return base;
  if (I.cert.answer) {
    uint64_t n;
    if (sol.at(0).try_u64(n) && n != *I.cert.answer)
      return CheckResult::violation("unique member is " +
                                    std::to_string(*I.cert.answer));
  }
  return base;
}

// Strict upper bound for an enumerated finite set.
inline CheckResult check_bound_enumerated(Instance& I, Point& sol,
                                          uint64_t depth) {
  Value b = sol.at(0);
  for (uint64_t e : enumerated_prefix(*I.name, depth))
    if (!(Value(e) < b))
      return CheckResult::violation("enumerated member " + std::to_string(e) +
                                    " not below the bound");
  if (I.cert.members) {
    for (uint64_t m : *I.cert.members)
      if (!(Value(m) < b))
        return CheckResult::violation("member " + std::to_string(m) +
                                      " not below the bound");
    return CheckResult::pass();
  }
  return CheckResult::pass();
}

// Strict upper bound for the certified finite set of well-founded rows.
inline CheckResult check_bound_wf_rows(Instance& I, Point& sol,
                                       uint64_t depth) {
  (void)depth;
  Value b = sol.at(0);
  if (!I.cert.members)
    return CheckResult::inconclusive(
        "well-foundedness is settled by certificate only");
  for (uint64_t m : *I.cert.members)
    if (!(Value(m) < b))
      return CheckResult::violation("well-founded row " + std::to_string(m) +
                                    " not below the bound");
  return CheckResult::pass();
}

// Color choice: the chosen color must occur infinitely often per the ledger.
inline CheckResult check_color_choice(Instance& I, Point& sol,
                                      uint64_t depth) {
  (void)depth;
  Value a = sol.at(0);
  uint64_t j;
  if (!a.try_u64(j))
    return CheckResult::inconclusive("color beyond the ledger range");
  if (I.param && j >= *I.param)
    return CheckResult::violation("color " + std::to_string(j) +
                                  " out of range");
  if (!I.cert.infinite_colors)
    return CheckResult::inconclusive("no occurrence ledger");
  return I.cert.infinite_colors->count(j)
             ? CheckResult::pass()
             : CheckResult::violation("color " + std::to_string(j) +
                                      " occurs only finitely often");
}

// Homogeneous set, presented as a characteristic stream. Sampled members must
// agree in color; the gap bound only sizes the window, sparsity is never a
// violation.
inline CheckResult check_homogeneous_set(Instance& I, Point& sol,
                                         uint64_t depth) {
  std::vector<uint64_t> members;
  for (uint64_t i = 0; i < depth; ++i)
    if (!sol.at(i).is_zero()) members.push_back(i);
  if (members.empty())
    return CheckResult::inconclusive("no member sampled within depth");
  Value color = I.name->at(members[0]);
  for (uint64_t m : members) {
    Value c = I.name->at(m);
    if (c != color)
      return CheckResult::violation(
          "members " + std::to_string(members[0]) + " and " +
          std::to_string(m) + " have different colors");
  }
  uint64_t j;
  if (color.try_u64(j) && I.cert.infinite_colors &&
      !I.cert.infinite_colors->count(j))
    return CheckResult::violation("homogeneous color " + std::to_string(j) +
                                  " occurs only finitely often");
  return CheckResult::pass();
}

// Tagged chain: first value picks the direction, the rest must form a strict
// chain that way. A certified direction makes the tag exact.
inline CheckResult check_finds(Instance& I, Point& sol, uint64_t depth) {
  Value b = sol.at(0);
  if (b != Value(0) && b != Value(1))
    return CheckResult::violation("direction tag must be 0 or 1");
  if (I.cert.answer && b != Value(*I.cert.answer))
    return CheckResult::violation("tag contradicts the certified direction");
  std::vector<Value> x;
  for (uint64_t i = 0; i + 1 < depth; ++i) x.push_back(sol.at(1 + i));
  for (uint64_t i = 0; i < x.size(); ++i)
    if (!inst_in_domain(I, x[i]))
      return CheckResult::violation("element " + std::to_string(i) +
                                    " outside the order's domain");
  for (uint64_t i = 0; i + 1 < x.size(); ++i) {
    bool ok = b.is_zero() ? inst_less(I, x[i], x[i + 1])
                          : inst_less(I, x[i + 1], x[i]);
    if (!ok)
      return CheckResult::violation("chain breaks at " + std::to_string(i));
  }
  return CheckResult::pass();
}

// Chain with at most one reversal, downward only: ascending then descending.
inline CheckResult check_findc(Instance& I, Point& sol, uint64_t depth) {
  auto x = solution_prefix(sol, depth);
  for (uint64_t i = 0; i < x.size(); ++i)
    if (!inst_in_domain(I, x[i]))
      return CheckResult::violation("element " + std::to_string(i) +
                                    " outside the order's domain");
  bool descending = false;
  for (uint64_t i = 0; i + 1 < x.size(); ++i) {
    bool up = inst_less(I, x[i], x[i + 1]);
    bool down = inst_less(I, x[i + 1], x[i]);
    if (!up && !down)
      return CheckResult::violation("adjacent elements " + std::to_string(i) +
                                    "," + std::to_string(i + 1) +
                                    " not strictly comparable");
    if (descending && up)
      return CheckResult::violation("chain turns upward at " +
                                    std::to_string(i));
    if (down) descending = true;
  }
  return CheckResult::pass();
}

// Path prefix against a planted path certificate (leftmost or unique).
inline CheckResult check_planted_path(Instance& I, Point& sol,
                                      uint64_t depth) {
  if (!I.cert.path)
    return CheckResult::inconclusive("no planted path certificate");
  std::vector<Value> prefix;
  for (uint64_t i = 0; i < depth; ++i) {
    Value want = I.cert.path(i);
    Value got = sol.at(i);
    if (got != want)
      return CheckResult::violation("diverges from the certified path at " +
                                    std::to_string(i));
    prefix.push_back(got);
    if (!tree_contains(*I.name, prefix))
      return CheckResult::inconclusive(
          "certificate inconsistent with the tree name at length " +
          std::to_string(i + 1));
  }
  return CheckResult::pass();
}

// Componentwise membership choice: entry n must belong to the n-th set.
inline CheckResult check_row_choice(Instance& I, Point& sol, uint64_t depth) {
  if (!I.cert.in_row_set)
    return CheckResult::inconclusive("membership needs a certificate");
  for (uint64_t n = 0; n < depth; ++n) {
    uint64_t v;
    if (!sol.at(n).try_u64(v))
      return CheckResult::inconclusive("answer beyond the ledger range");
    if (!I.cert.in_row_set(n, v))
      return CheckResult::violation("entry " + std::to_string(n) + " = " +
                                    std::to_string(v) +
                                    " is not a member of set " +
                                    std::to_string(n));
  }
  return CheckResult::pass();
}

// Componentwise strict bounds for certified finite row sets.
inline CheckResult check_row_bounds(Instance& I, Point& sol, uint64_t depth) {
  if (!I.cert.row_members)
    return CheckResult::inconclusive(
        "well-foundedness is settled by certificate only");
  for (uint64_t n = 0; n < depth; ++n) {
    Value b = sol.at(n);
    for (uint64_t m : I.cert.row_members(n))
      if (!(Value(m) < b))
        return CheckResult::violation("component " + std::to_string(n) +
                                      ": member " + std::to_string(m) +
                                      " not below the bound");
  }
  return CheckResult::pass();
}

// Membership choice where truth lives in the certificate (coded set names).
inline CheckResult check_certified_choice(Instance& I, Point& sol,
                                          uint64_t depth) {
  (void)depth;
  Value a = sol.at(0);
  uint64_t n;
  if (!a.try_u64(n))
    return CheckResult::inconclusive("answer beyond the ledger range");
  if (!I.cert.in_set)
    return CheckResult::inconclusive("membership needs a certificate");
  return I.cert.in_set(n)
             ? CheckResult::pass()
             : CheckResult::violation("chosen value " + std::to_string(n) +
                                      " is not a member");
}

// ---- descriptor transformers ----

// Requires the exact relation certificate before running an order checker:
// coded orders cannot be read off their names pointwise.
inline Checker require_relation_cert(Checker inner) {
  return [inner = std::move(inner)](Instance& I, Point& sol,
                                    uint64_t depth) -> CheckResult {
    if (!I.cert.leq)
      return CheckResult::inconclusive(
          "coded order needs a relation certificate");
    return inner(I, sol, depth);
  };
}

// Solve f on the limit of a convergent row sequence. The limit certificate
// supplies the settled input; without it nothing is checkable.
inline ProblemDescriptor jump_problem(const ProblemDescriptor& f) {
  ProblemDescriptor d;
  d.id = f.id + "_jump_1";
  d.input_kind = "convergent_rows(" + f.input_kind + ")";
  d.output_kind = f.output_kind;
  d.summary = "solve " + f.id + " on the limit of a convergent row sequence";
  d.check = [inner = f.check](Instance& I, Point& sol,
                              uint64_t depth) -> CheckResult {
    if (!I.cert.limit)
      return CheckResult::inconclusive("no limit certificate");
    Instance J = I;
    J.name = make_point(I.cert.limit, "limit(" + I.problem + ")");
    return inner(J, sol, depth);
  };
  return d;
}

// First-order restriction: same instances, answers collapsed to a single
// natural. Validity is certificate-only.
inline ProblemDescriptor fo_part(const ProblemDescriptor& f) {
  ProblemDescriptor d;
  d.id = "fo_" + f.id;
  d.input_kind = f.input_kind;
  d.output_kind = "number";
  d.summary = "single-natural answers for " + f.id + " instances";
  d.check = [](Instance& I, Point& sol, uint64_t) -> CheckResult {
    Value a = sol.at(0);
    uint64_t n;
    if (!a.try_u64(n))
      return CheckResult::inconclusive("answer beyond the ledger range");
    if (I.cert.in_set)
      return I.cert.in_set(n)
                 ? CheckResult::pass()
                 : CheckResult::violation("answer " + std::to_string(n) +
                                          " not accepted by the ledger");
    if (I.cert.answer)
      return n == *I.cert.answer
                 ? CheckResult::pass()
                 : CheckResult::violation("certified answer is " +
                                          std::to_string(*I.cert.answer));
    return CheckResult::inconclusive("scalar answers need a certificate");
  };
  return d;
}

// Activity-flagged wrapper: input and output stay all-zero together, or both
// flag at the same position and the tails form an inner instance/solution.
inline ProblemDescriptor maybe_wrap(const ProblemDescriptor& f) {
  ProblemDescriptor d;
  d.id = "maybe_" + f.id;
  d.input_kind = "flagged(" + f.input_kind + ")";
  d.output_kind = "flagged(" + f.output_kind + ")";
  d.summary = "solve " + f.id + " only when the input signals activity";
  d.check = [inner = f.check](Instance& I, Point& sol,
                              uint64_t depth) -> CheckResult {
    std::optional<uint64_t> flag;
    for (uint64_t i = 0; i < depth; ++i)
      if (!I.name->at(i).is_zero()) {
        flag = i;
        break;
      }
    if (!flag) {
      // Output may not flag where the input provably does not.
      for (uint64_t i = 0; i < depth; ++i)
        if (!sol.at(i).is_zero())
          return CheckResult::violation(
              "output flags activity at " + std::to_string(i) +
              " where the input is silent");
      return CheckResult::pass();
    }
    uint64_t n = *flag;
    if (I.name->at(n) != Value(1))
      return CheckResult::inconclusive("malformed activity flag");
    for (uint64_t i = 0; i < n; ++i)
      if (!sol.at(i).is_zero())
        return CheckResult::violation("output flags activity at " +
                                      std::to_string(i) +
                                      " before the input flag");
    if (sol.at(n) != Value(1))
      return CheckResult::violation("output not flagged at the input's flag");
    Instance J = I;
    J.name = make_point(
        [base = I.name, n](const Value& i) {
          return base->at(Value::add(i, Value(n + 1)));
        },
        "unflagged");
    auto tail = make_point(
        [base = sol.shared_from_this(), n](const Value& i) {
          return base->at(Value::add(i, Value(n + 1)));
        },
        "unflagged_solution");
    return inner(J, *tail, depth);
  };
  return d;
}

// ---- catalog ----

inline std::map<std::string, ProblemDescriptor> build_problem_catalog() {
  std::map<std::string, ProblemDescriptor> m;
  auto add = [&m](ProblemDescriptor d) { m.emplace(d.id, std::move(d)); };

  add({"DS", "linear_order", "descending_chain",
       "find an infinite descending sequence in an ill-founded linear order",
       check_ds});
  add({"BS", "quasi_order", "bad_chain",
       "find an infinite bad sequence in a non-well quasi-order", check_bs});
  add({"lim", "convergent_rows", "stream",
       "compute the pointwise limit of a convergent row sequence", check_lim});
  add({"lim_k", "convergent_rows_bounded", "stream",
       "pointwise limit of rows over a bounded value alphabet", check_lim});
  add({"LPO", "stream", "bit",
       "decide whether a stream has a nonzero entry", check_lpo});
  add({"C_N", "co_enumeration", "number",
       "choose a natural avoiding an enumerated exclusion list", check_cn});
  add({"UC_N", "co_enumeration", "number",
       "choose the unique natural avoiding an enumerated exclusion list",
       check_ucn});
  add({"Bound_Sigma01", "enumeration", "number",
       "bound an enumerated finite set strictly from above",
       check_bound_enumerated});
  add({"Bound_Pi11", "tree_rows", "number",
       "bound the finite set of well-founded rows strictly from above",
       check_bound_wf_rows});
  add({"RT1_k", "coloring", "char_stream",
       "find an infinite homogeneous set for a k-coloring",
       check_homogeneous_set});
  add({"RT1_N", "coloring_unbounded", "char_stream",
       "find an infinite homogeneous set for a finitely-ranged coloring",
       check_homogeneous_set});
  add({"cRT1_k", "coloring", "number",
       "name a color occurring infinitely often", check_color_choice});
  add({"findS", "linear_order", "tagged_chain",
       "exhibit an infinite ascending or descending chain, tagged by kind",
       check_finds});
  add({"findC", "linear_order", "one_switch_chain",
       "exhibit a chain that ascends then descends at most once",
       check_findc});
  add({"DS_Sigma01", "enumerated_order", "descending_chain",
       "descending sequence in an order given by relation enumeration",
       require_relation_cert(check_ds)});
  add({"DS_Pi01", "co_enumerated_order", "descending_chain",
       "descending sequence in an order given by relation co-enumeration",
       require_relation_cert(check_ds)});
  add({"DS_Delta02", "converging_order", "descending_chain",
       "descending sequence in an order given by converging relation rows",
       require_relation_cert(check_ds)});
  add({"DS_Sigma11", "tree_rows_order_illfounded", "descending_chain",
       "descending sequence in an order whose relation holds on ill-founded "
       "rows",
       require_relation_cert(check_ds)});
  add({"DS_Pi11", "tree_rows_order_wellfounded", "descending_chain",
       "descending sequence in an order whose relation holds on well-founded "
       "rows",
       require_relation_cert(check_ds)});
  add({"BS_Sigma11", "tree_rows_qorder_illfounded", "bad_chain",
       "bad sequence in a quasi-order whose relation holds on ill-founded "
       "rows",
       require_relation_cert(check_bs)});
  add({"BS_Delta02", "converging_qorder", "bad_chain",
       "bad sequence in a quasi-order given by converging relation rows",
       require_relation_cert(check_bs)});
  add({"Sigma11_CN", "tree_rows_set", "number",
       "choose a member of a nonempty set coded by ill-founded rows",
       check_certified_choice});
  add({"par_Sigma11_CN", "tree_rows_set_seq", "stream",
       "choose, for every n at once, a member of the n-th coded set",
       check_row_choice});
  add({"par_Bound_Pi11", "tree_rows_seq", "stream",
       "bound, for every n at once, the n-th finite set of well-founded rows",
       check_row_bounds});
  add({"UC_Baire_desk", "tree", "path",
       "emit the unique path of a certified single-path tree",
       check_planted_path});
  add({"Pi11CA_leftmost", "tree", "path",
       "emit the leftmost path of a certified ill-founded tree",
       check_planted_path});

  add(jump_problem(m.at("LPO")));  // LPO_jump_1
  return m;
}

inline const std::map<std::string, ProblemDescriptor>& problem_catalog() {
  static const std::map<std::string, ProblemDescriptor> catalog =
      build_problem_catalog();
  return catalog;
}

inline const ProblemDescriptor& problem(const std::string& id) {
  const auto& cat = problem_catalog();
  auto it = cat.find(id);
  if (it == cat.end()) throw std::out_of_range("unknown problem: " + id);
  return it->second;
}

}  // namespace wlab
