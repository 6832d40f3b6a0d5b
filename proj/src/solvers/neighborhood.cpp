#include "gjsp/solvers/neighborhood.hpp"

#include <algorithm>
#include <numeric>

namespace gjsp {

std::vector<Move> list_moves(const SolverContext& ctx, const Candidate& cur) {
  const int M = ctx.n_machines;
  const int n = ctx.n_ops;
  std::vector<Move> moves;

  // Machine successor of every operation.
  std::vector<int> machine_succ(n, -1);
  std::vector<int> task_on(static_cast<std::size_t>(ctx.n_jobs) * M);
  for (int op = 0; op < n; ++op) task_on[(op / M) * M + ctx.machine[op]] = op % M;
  auto op_of = [&](int j, int m) { return j * M + task_on[j * M + m]; };
  for (int m = 0; m < M; ++m) {
    const auto& order = cur.orders[m];
    for (std::size_t k = 1; k < order.size(); ++k) {
      machine_succ[op_of(order[k - 1], m)] = op_of(order[k], m);
    }
  }

  // Tails along a reverse topological order (starts strictly increase along arcs).
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](int a, int b) {
    return std::pair(cur.starts[a], a) < std::pair(cur.starts[b], b);
  });
  std::vector<Time> tail(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int op = *it;
    Time after = 0;
    if (op % M + 1 < M) after = tail[op + 1];
    if (machine_succ[op] >= 0) after = std::max(after, tail[machine_succ[op]]);
    tail[op] = ctx.p(op, cur.speeds[op]) + after;
  }
  const Time makespan = cur.components.makespan;
  auto critical = [&](int op) { return cur.starts[op] + tail[op] == makespan; };

  for (int m = 0; m < M; ++m) {
    const auto& order = cur.orders[m];
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const int a = op_of(order[k], m);
      const int b = op_of(order[k + 1], m);
      if (critical(a) && critical(b) && cur.starts[a] + ctx.p(a, cur.speeds[a]) == cur.starts[b]) {
        Move mv;
        mv.kind = Move::Kind::Swap;
        mv.machine = m;
        mv.position = static_cast<int>(k);
        moves.push_back(mv);
      }
    }
  }
  for (int op = 0; op < n; ++op) {
    for (int delta : {-1, 1}) {
      const int s = cur.speeds[op] + delta;
      if (s < 0 || s >= ctx.n_speeds) continue;
      Move mv;
      mv.kind = Move::Kind::Speed;
      mv.job = op / M;
      mv.task = op % M;
      mv.speed = s;
      moves.push_back(mv);
    }
  }
  return moves;
}

bool apply_move(const SolverContext& ctx, SequenceDecoder& decoder, const Candidate& cur,
                const Move& move, Candidate& out) {
  out.orders = cur.orders;
  out.speeds = cur.speeds;
  if (move.kind == Move::Kind::Swap) {
    auto& order = out.orders[move.machine];
    std::swap(order[move.position], order[move.position + 1]);
  } else {
    out.speeds[move.job * ctx.n_machines + move.task] = move.speed;
  }
  return evaluate_candidate(ctx, decoder, out);
}

Candidate candidate_from_schedule(const SolverContext& ctx, const Schedule& schedule) {
  Candidate c;
  c.orders = machine_orders_of(*ctx.instance, schedule);
  c.speeds = schedule.speed;
  c.starts = schedule.start;
  c.components = evaluate_unchecked(*ctx.instance, schedule);
  c.value = ctx.value(c.components);
  return c;
}

std::vector<Neighbor> enumerate_neighbors(const Instance& instance, const Schedule& schedule) {
  SolverContext ctx(instance);
  SequenceDecoder decoder(instance);
  const Candidate cur = candidate_from_schedule(ctx, schedule);
  std::vector<Neighbor> out;
  Candidate next;
  for (const Move& mv : list_moves(ctx, cur)) {
    if (apply_move(ctx, decoder, cur, mv, next)) out.push_back({mv, to_schedule(ctx, next)});
  }
  return out;
}

}  // namespace gjsp
