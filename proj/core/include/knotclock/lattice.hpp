#pragma once

// The state lattice: all states of (universe, stars) with an arrow per
// clockwise transposition.  The clocked state is the unique source, the
// counterclocked state the unique sink, and every state lies on a clockwise
// path between them.

#include <string>
#include <vector>

#include "knotclock/state.hpp"

namespace knotclock {

struct LatticeArrow {
  int from = -1;  // state index
  int to = -1;
  EdgeId edge = -1;

  friend bool operator==(const LatticeArrow&, const LatticeArrow&) = default;
};

struct Lattice {
  std::vector<State> states;  // enumeration order
  std::vector<LatticeArrow> arrows;  // clockwise moves, sorted by (from, edge)
  int clocked_index = -1;
  int counterclocked_index = -1;
  // 1 + shortest clocked-to-counterclocked distance; height treats arrows as
  // undirected, directed_height follows them forward only.
  int height = 0;
  int directed_height = 0;

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

// Builds the lattice and asserts the Clock Theorem shape: clockwise BFS from
// the clocked state must reach every enumerated state, the source and sink
// must be unique.  Violations throw InvariantViolation.  Throws
// std::invalid_argument when no state exists.
Lattice build_lattice(const Universe& u, StarPlacement stars);

// One shortest clocked-to-counterclocked move sequence in the undirected
// move graph, deterministic via lowest-state-index tie-breaking.
std::vector<ClockMove> minimal_path(const Universe& u, const Lattice& lat);

// How many of the path's moves touch each vertex.
std::vector<int> path_move_counts(const Universe& u, const Lattice& lat,
                                  const std::vector<ClockMove>& path);

// Per vertex, the minimum touch count over ALL shortest clocked-to-
// counterclocked paths (undirected).  Lower-bounds every minimal path.
std::vector<int> min_move_counts(const Universe& u, const Lattice& lat);

// "dot" or "json"; anything else throws std::invalid_argument.
std::string export_lattice(const Lattice& lat, const std::string& format);

// Inverse of the JSON export.  Malformed text throws ParseError.
Lattice lattice_from_json(const std::string& text);

}  // namespace knotclock
