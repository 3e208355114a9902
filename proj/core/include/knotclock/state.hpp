#pragma once

// States and marker transpositions.
//
// A state places one marker per vertex, each marker sitting in a corner of
// that vertex, so that vertex -> face-of-corner is a bijection onto the
// non-starred faces.  The canonical encoding is the slot array indexed by
// vertex id; lexicographic order on it fixes the enumeration order.
//
// A transposition rotates two markers one slot in a common sense so that
// they swap faces.  Each marker sweeps across an edge bounding both faces;
// usually the same edge, but a face pair can share several edges (the two
// neck faces of a connected sum) and then the sweeps split across them.
// Slot k -> k+1 is counterclockwise, k -> k-1 clockwise.

#include <string>
#include <vector>

#include "knotclock/diagram.hpp"

namespace knotclock {

struct State {
  std::vector<int> slot;  // slot[v] = corner slot of the marker at vertex v

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;
};

std::string to_string(const State& s);

// Faces occupied by the markers, indexed by vertex.
std::vector<FaceId> marker_faces(const Universe& u, const State& s);

// Throws InvariantViolation when the marker map is not a bijection onto the
// non-starred faces.
void check_state(const Universe& u, StarPlacement stars, const State& s);

enum class MoveDirection { Clockwise, Counterclockwise };

struct ClockMove {
  EdgeId edge = -1;  // lowest-id edge swept by either marker
  MoveDirection direction = MoveDirection::Clockwise;
  VertexId u = -1;  // vertices of the two rotating markers; when both sweep
  VertexId v = -1;  // one edge these are its tail and head

  friend bool operator==(const ClockMove&, const ClockMove&) = default;
};

ClockMove reverse(const ClockMove& m);

// All states, lexicographic in the slot encoding.  May be empty.
std::vector<State> enumerate_states(const Universe& u, StarPlacement stars);

// Moves available in s, ordered by (edge id, direction).  A marker pair
// moves iff rotating both one slot in one sense swaps their faces; each
// marker then sweeps an edge bounding the two faces.  On an edge whose
// endpoint markers flank it in its two faces the rotation senses always
// agree (asserted); a face pair sharing several edges also admits moves
// whose two sweeps hit different edges.
std::vector<ClockMove> available_moves(const Universe& u, const State& s);

// Requires m to be available in s; throws InvariantViolation otherwise.
State apply_move(const Universe& u, const State& s, const ClockMove& m);

// Repeatedly applies the lowest-edge-id move of the given sense until none
// remains.  Terminates on any valid state; a revisited state throws
// InvariantViolation.
State greedy_climb(const Universe& u, const State& start, MoveDirection sense);

// The unique state with no counterclockwise (resp. clockwise) move.  Found
// two ways that must agree: filtering the full enumeration, and greedy
// ascent from the first enumerated state.  Throws InvariantViolation when
// the routes disagree or the filter finds any count other than one; throws
// std::invalid_argument when no state exists.
State find_clocked(const Universe& u, StarPlacement stars);
State find_counterclocked(const Universe& u, StarPlacement stars);

}  // namespace knotclock
