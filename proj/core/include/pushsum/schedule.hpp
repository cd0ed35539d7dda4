#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pushsum/digraph.hpp"

namespace pushsum {

/**
 * A deterministic time-indexed sequence of digraphs on a fixed vertex
 * set. `at` must be a pure function of t (t >= 0) so that runs are
 * replayable; when `period` is set, at(t) == at(t mod period).
 * `claimed_L` is the window length for which the schedule is claimed to
 * be uniformly strongly connected (every L consecutive graphs have a
 * strongly connected union).
 */
struct GraphSchedule {
  int n = 0;
  std::function<Digraph(std::int64_t)> at;
  std::optional<std::int64_t> period;
  int claimed_L = 1;
};

/// Union of the graphs at steps t .. t+window-1.
Digraph union_graph(const GraphSchedule& schedule, std::int64_t t, int window);

/**
 * Checks that every length-L window has a strongly connected union.
 * Periodic schedules are checked exhaustively over one period, which
 * certifies all t. Aperiodic schedules are checked for window starts in
 * [0, horizon - L], so the result is a certificate only for that
 * prefix; callers should surface this caveat.
 */
bool verify_uniform_strong_connectivity(const GraphSchedule& schedule, int L,
                                        std::int64_t horizon);

/// Canonical rotating-ring topology: at time t the only non-self arc is
/// (t mod n) -> ((t+1) mod n). Period n, uniformly strongly connected
/// with L = n.
GraphSchedule ring_rotation(int n);

/**
 * Random per-step topology: each non-self arc is present independently
 * with probability p (seeded per step, reproducible), and every step
 * additionally carries the rotating-ring arc for that step so uniform
 * strong connectivity with L = L_patch >= n holds by construction.
 */
GraphSchedule random_schedule(int n, double p, std::uint64_t seed, int L_patch);

/// The same graph at every step (period 1).
GraphSchedule static_schedule(Digraph g, int claimed_L = 1);

} // namespace pushsum
