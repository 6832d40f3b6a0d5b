#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gjsp/error.hpp"
#include "gjsp/instance_io.hpp"
#include "gjsp/objective.hpp"
#include "gjsp/schedule.hpp"
#include "oracles.hpp"

using namespace gjsp;

namespace {

Instance single(std::int64_t p, std::int64_t e) { return oracle::make_instance({{0}}, {{{p}}}, {{{e}}}); }

// Random sequencing: each machine order is a shuffled job list, but we only
// keep the ones that decode (acyclic).
MachineOrders random_orders(const Instance& inst, std::mt19937_64& rng) {
  MachineOrders orders(inst.n_machines);
  for (auto& o : orders) {
    o.resize(inst.n_jobs);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
  }
  return orders;
}

std::vector<int> random_speeds(const Instance& inst, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, inst.n_speeds - 1);
  std::vector<int> v(inst.n_tasks());
  for (auto& s : v) s = d(rng);
  return v;
}

// Decodes some acyclic random sequencing; retries on cycles.
Schedule random_schedule(const Instance& inst, std::mt19937_64& rng) {
  for (;;) {
    try {
      return decode_schedule(inst, random_orders(inst, rng), random_speeds(inst, rng));
    } catch (const CyclicPrecedence&) {
    }
  }
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("validate accepts a well formed 2x2x1 instance") {
  auto inst = oracle::make_instance({{0, 1}, {1, 0}}, {{{3}, {4}}, {{2}, {5}}}, {{{1}, {1}}, {{1}, {1}}});
  CHECK(validate_instance(inst).empty());
}

TEST_CASE("validate flags a duplicate machine in a route") {
  auto inst = oracle::make_instance({{0, 1}, {1, 0}}, {{{3}, {4}}, {{2}, {5}}}, {{{1}, {1}}, {{1}, {1}}});
  inst.routes[0] = {0, 0};
  auto v = validate_instance(inst);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == "route_not_permutation");
  CHECK_THROWS_AS(require_valid(inst), InvalidInstance);
}

TEST_CASE("validate flags a faster speed that takes longer") {
  auto inst = oracle::make_instance({{0}}, {{{5, 6}}}, {{{1, 2}}});
  auto v = validate_instance(inst);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == "speed_monotonicity");
}

TEST_CASE("decode single task") {
  auto inst = single(7, 3);
  auto s = decode_schedule(inst, {{0}}, {0});
  CHECK(s.start_of(0, 0) == 0);
  CHECK(completion_of(inst, s, 0, 0) == 7);
}

TEST_CASE("decode respects a release date") {
  auto inst = single(7, 3);
  inst.rddd_level = WindowLevel::Job;
  inst.job_windows = {{5, 20}};
  auto s = decode_schedule(inst, {{0}}, {0});
  CHECK(s.start_of(0, 0) == 5);
  CHECK(completion_of(inst, s, 0, 0) == 12);
}

TEST_CASE("decode two jobs on one machine") {
  auto inst = oracle::make_instance({{0}, {0}}, {{{3}}, {{4}}}, {{{1}}, {{1}}});
  auto s = decode_schedule(inst, {{0, 1}}, {0, 0});
  CHECK(s.start_of(0, 0) == 0);
  CHECK(s.start_of(1, 0) == 3);
  CHECK(objective_components(inst, s).makespan == 7);
}

TEST_CASE("decode rejects cyclic orders") {
  // job0: m0 then m1; job1: m1 then m0. m0 puts job1 first, m1 puts job0 first.
  auto inst = oracle::make_instance({{0, 1}, {1, 0}}, {{{1}, {1}}, {{1}, {1}}}, {{{0}, {0}}, {{0}, {0}}});
  CHECK_THROWS_AS(decode_schedule(inst, {{1, 0}, {0, 1}}, {0, 0, 0, 0}), CyclicPrecedence);
}

TEST_CASE("decode matches the fixed point oracle") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = oracle::seeded(3, 3, int(seed % 3), 3, seed);
    auto orders = random_orders(inst, rng);
    auto speeds = random_speeds(inst, rng);
    auto expect = oracle::decode(inst, orders, speeds);
    if (expect.empty()) {
      CHECK_THROWS_AS(decode_schedule(inst, orders, speeds), CyclicPrecedence);
      continue;
    }
    CHECK(decode_schedule(inst, orders, speeds).start == expect);
    ++compared;
  }
  CHECK(compared > 10);
}

TEST_CASE("overlapping tasks give one machine overlap") {
  auto inst = oracle::make_instance({{0}, {0}}, {{{3}}, {{4}}}, {{{1}}, {{1}}});
  Schedule s(2, 1);
  s.start = {0, 2};
  auto v = check_feasibility(inst, s);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == "machine_overlap");
}

TEST_CASE("feasibility verdict agrees with the pairwise oracle") {
  std::mt19937_64 rng(5);
  int feasible = 0, infeasible = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = oracle::seeded(3, 3, int(seed % 3), 3, 1000 + seed);
    auto s = random_schedule(inst, rng);
    if (seed % 2 == 1) {
      // nudge one start in either direction
      std::uniform_int_distribution<int> pick(0, inst.n_tasks() - 1), shift(-6, 6);
      auto& st = s.start[pick(rng)];
      st = std::max<Time>(0, st + shift(rng));
    }
    const bool ours = check_feasibility(inst, s).empty();
    CHECK(ours == oracle::feasible(inst, s));
    (ours ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("objective of a single task") {
  auto inst = single(7, 3);
  auto s = decode_schedule(inst, {{0}}, {0});
  CHECK(objective_components(inst, s) == ObjectiveComponents{7, 3, 0});
  CHECK(objective_bounds(inst) == ObjectiveBounds{7, 7, 3, 3});
  CHECK(normalized_objective(inst, s).scalarized == 0.0);
}

TEST_CASE("job due date charged on the last task") {
  auto inst = oracle::make_instance({{0, 1}}, {{{6}, {7}}}, {{{1}, {1}}});
  inst.rddd_level = WindowLevel::Job;
  inst.job_windows = {{0, 10}};
  auto s = decode_schedule(inst, {{0}, {0}}, {0, 0});
  CHECK(objective_components(inst, s).tardiness == 3);
}

TEST_CASE("bounds of two jobs on one machine") {
  auto inst = oracle::make_instance({{0}, {0}}, {{{4}}, {{5}}}, {{{1}}, {{1}}});
  auto b = objective_bounds(inst);
  CHECK(b.mk_ub == 9);
  CHECK(b.mk_lb == 5);
}

TEST_CASE("infeasible schedules are refused") {
  auto inst = oracle::make_instance({{0}, {0}}, {{{3}}, {{4}}}, {{{1}}, {{1}}});
  Schedule s(2, 1);
  CHECK_THROWS_AS(objective_components(inst, s), InfeasibleInput);
  CHECK_THROWS_AS(normalized_objective(inst, s), InfeasibleInput);
}

TEST_CASE("components and scalarized value match the straight line oracle") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = oracle::seeded(2, 2, int(seed % 3), 3, 77 + seed);
    auto s = random_schedule(inst, rng);
    auto want = oracle::components(inst, s);
    auto got = normalized_objective(inst, s);
    CHECK(got.makespan == want.makespan);
    CHECK(got.energy == want.energy);
    CHECK(got.tardiness == want.tardiness);
    CHECK(got.scalarized == doctest::Approx(oracle::scalarized(inst, want)).epsilon(1e-12));
  }
}

TEST_CASE("hand evaluated 2x2x2 value") {
  // job0: m0(4|2) m1(3|2); job1: m1(5|3) m0(2|1); energies grow with speed
  auto inst = oracle::make_instance({{0, 1}, {1, 0}}, {{{4, 2}, {3, 2}}, {{5, 3}, {2, 1}}},
                                    {{{1, 3}, {2, 4}}, {{1, 2}, {1, 5}}});
  REQUIRE(validate_instance(inst).empty());
  auto s = decode_schedule(inst, {{0, 1}, {1, 0}}, {1, 0, 0, 1});
  // job0: t0 [0,2) fast, t1 on m1 after job1 [0,5) -> [5,8); job1: t1 on m0 at 5 -> [5,6)
  CHECK(s.start == std::vector<Time>{0, 5, 0, 5});
  auto b = normalized_objective(inst, s);
  CHECK(b.makespan == 8);
  CHECK(b.energy == 3 + 2 + 1 + 5);
  // mk_ub 14, mk_lb max(4, 4) = 4, en_ub 14, en_lb 5
  CHECK(b.bounds == ObjectiveBounds{14, 4, 14, 5});
  CHECK(b.scalarized == doctest::Approx(4.0 / 10.0 + 6.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("bound properties over seeded instances") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int rd = int(seed % 3);
    auto inst = oracle::seeded(2 + int(seed % 3), 2 + int(seed / 3 % 3), rd, seed % 2 ? 3 : 1, seed);
    auto b = objective_bounds(inst);
    CHECK(b.mk_ub >= b.mk_lb);
    CHECK(b.en_ub >= b.en_lb);
    auto s = random_schedule(inst, rng);
    REQUIRE(check_feasibility(inst, s).empty());
    auto c = objective_components(inst, s);
    CHECK(c.makespan >= b.mk_lb);
    if (rd == 0) CHECK(c.makespan <= b.mk_ub);
    if (b.mk_ub > b.mk_lb) {
      const double first = scalarize({c.makespan, b.en_lb, 0}, b);
      CHECK((first == 0.0) == (c.makespan == b.mk_lb));
    }
  }
}

TEST_CASE("fastest speeds never slow down and never save energy") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = oracle::seeded(3, 3, 0, 3, 500 + seed);
    for (;;) {
      auto orders = random_orders(inst, rng);
      auto speeds = random_speeds(inst, rng);
      try {
        auto a = objective_components(inst, decode_schedule(inst, orders, speeds));
        auto b = objective_components(
            inst, decode_schedule(inst, orders, std::vector<int>(inst.n_tasks(), inst.n_speeds - 1)));
        CHECK(b.makespan <= a.makespan);
        CHECK(b.energy >= a.energy);
        break;
      } catch (const CyclicPrecedence&) {
      }
    }
  }
}

TEST_CASE("instance text round trip") {
  for (int rd = 0; rd < 3; ++rd) {
    auto inst = oracle::seeded(3, 4, rd, 3, 42 + rd);
    auto text = instance_to_text(inst);
    auto back = instance_from_text(text);
    CHECK(back == inst);
    CHECK(instance_to_text(back) == text);
  }
}

TEST_CASE("malformed instance text is a parse error") {
  CHECK_THROWS_AS(instance_from_text("{not json"), ParseError);
}

}  // TEST_SUITE
