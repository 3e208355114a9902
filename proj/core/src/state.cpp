#include "knotclock/state.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace knotclock {

std::string to_string(const State& s) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < s.slot.size(); ++i) {
    if (i) os << ',';
    os << s.slot[i];
  }
  os << ']';
  return os.str();
}

std::vector<FaceId> marker_faces(const Universe& u, const State& s) {
  std::vector<FaceId> out(u.vertex_count());
  for (VertexId v = 0; v < u.vertex_count(); ++v)
    out[v] = u.face_of_corner(v, s.slot[v]);
  return out;
}

void check_state(const Universe& u, StarPlacement stars, const State& s) {
  if (static_cast<int>(s.slot.size()) != u.vertex_count())
    throw InvariantViolation("state has wrong vertex count");
  std::vector<char> used(u.face_count(), 0);
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    int k = s.slot[v];
    if (k < 0 || k > 3) throw InvariantViolation("marker slot out of range");
    FaceId f = u.face_of_corner(v, k);
    if (f == stars.a || f == stars.b)
      throw InvariantViolation("marker in a starred face");
    if (used[f]) throw InvariantViolation("two markers in one face");
    used[f] = 1;
  }
  // V markers, V non-starred faces, injective: a bijection.
}

ClockMove reverse(const ClockMove& m) {
  ClockMove r = m;
  r.direction = m.direction == MoveDirection::Clockwise
                    ? MoveDirection::Counterclockwise
                    : MoveDirection::Clockwise;
  return r;
}

std::vector<State> enumerate_states(const Universe& u, StarPlacement stars) {
  std::vector<State> out;
  const int n = u.vertex_count();
  std::vector<char> used(u.face_count(), 0);
  State cur;
  cur.slot.assign(n, 0);
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < 4; ++k) {
      FaceId f = u.face_of_corner(v, k);
      if (f == stars.a || f == stars.b || used[f]) continue;
      used[f] = 1;
      cur.slot[v] = k;
      self(self, v + 1);
      used[f] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<ClockMove> available_moves(const Universe& u, const State& s) {
  // A transposition turns two markers a quarter turn in one sense so that
  // they swap faces; each marker sweeps across an edge bounding both faces.
  // The sweeps hit the same edge unless the face pair shares several edges
  // (as the two neck faces of a connected sum do), so the scan runs over
  // marker pairs, not over edges.
  std::vector<ClockMove> out;
  const int n = u.vertex_count();
  for (VertexId a = 0; a < n; ++a) {
    const int ca = s.slot[a];
    const FaceId fa = u.face_of_corner(a, ca);
    for (VertexId b = a + 1; b < n; ++b) {
      const int cb = s.slot[b];
      const FaceId fb = u.face_of_corner(b, cb);
      if (fa == fb) throw InvariantViolation("two markers in one face");
      for (int step : {3, 1}) {
        if (u.face_of_corner(a, (ca + step) % 4) != fb ||
            u.face_of_corner(b, (cb + step) % 4) != fa)
          continue;
        // A clockwise turn sweeps the ray at the marker's own slot, a
        // counterclockwise turn the next one up.
        EdgeId ea = u.edge_at(a, step == 3 ? ca : (ca + 1) % 4);
        EdgeId eb = u.edge_at(b, step == 3 ? cb : (cb + 1) % 4);
        ClockMove m;
        m.direction = step == 3 ? MoveDirection::Clockwise
                                : MoveDirection::Counterclockwise;
        if (ea == eb) {
          m.edge = ea;
          m.u = u.edge(ea).tail.v;
          m.v = u.edge(ea).head.v;
        } else {
          m.edge = std::min(ea, eb);
          m.u = m.edge == ea ? a : b;
          m.v = m.edge == ea ? b : a;
        }
        out.push_back(m);
      }
    }
  }
  auto key = [](const ClockMove& m) {
    return std::tuple(m.edge, m.direction == MoveDirection::Counterclockwise,
                      m.u, m.v);
  };
  std::sort(out.begin(), out.end(),
            [&](const ClockMove& x, const ClockMove& y) { return key(x) < key(y); });

  // Convention cross-check: endpoint markers flanking one edge in its two
  // faces always rotate with one common sense; a mismatch means the corner
  // or rotation convention broke.
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const Edge& ed = u.edge(e);
    if (ed.is_loop()) continue;
    const int su = ed.tail.slot, sv = ed.head.slot;
    const int mt = s.slot[ed.tail.v], mh = s.slot[ed.head.v];
    const bool t_touch = mt == su || mt == (su + 3) % 4;
    const bool h_touch = mh == sv || mh == (sv + 3) % 4;
    if (!t_touch || !h_touch) continue;
    const FaceId ft = u.face_of_corner(ed.tail.v, mt);
    const FaceId fh = u.face_of_corner(ed.head.v, mh);
    // The corner at the tail slot is the edge's left face, one slot back is
    // its right; at the head the sides swap.
    if (ft != (mt == su ? u.face_left(e) : u.face_right(e)))
      throw InvariantViolation("tail corner/face mismatch");
    if (fh != (mh == sv ? u.face_right(e) : u.face_left(e)))
      throw InvariantViolation("head corner/face mismatch");
    if (ft == fh) continue;
    if ((mt == su) != (mh == sv))
      throw InvariantViolation("rotation senses disagree");
  }
  return out;
}

State apply_move(const Universe& u, const State& s, const ClockMove& m) {
  auto avail = available_moves(u, s);
  if (std::find(avail.begin(), avail.end(), m) == avail.end())
    throw InvariantViolation("move not available");
  const int delta = m.direction == MoveDirection::Clockwise ? 3 : 1;
  State next = s;
  next.slot[m.u] = (next.slot[m.u] + delta) % 4;
  next.slot[m.v] = (next.slot[m.v] + delta) % 4;
  return next;
}

State greedy_climb(const Universe& u, const State& start, MoveDirection sense) {
  std::set<State> seen;
  State cur = start;
  for (;;) {
    if (!seen.insert(cur).second)
      throw InvariantViolation("greedy climb revisited a state");
    const ClockMove* pick = nullptr;
    auto avail = available_moves(u, cur);
    for (const ClockMove& m : avail)
      if (m.direction == sense) {
        pick = &m;
        break;
      }
    if (!pick) return cur;
    cur = apply_move(u, cur, *pick);
  }
}

namespace {

State find_extreme(const Universe& u, StarPlacement stars, MoveDirection none_of) {
  auto states = enumerate_states(u, stars);
  if (states.empty()) throw std::invalid_argument("no states for this star placement");
  const State* filtered = nullptr;
  for (const State& s : states) {
    bool has = false;
    for (const ClockMove& m : available_moves(u, s))
      if (m.direction == none_of) {
        has = true;
        break;
      }
    if (!has) {
      if (filtered) throw InvariantViolation("two extreme states in one lattice");
      filtered = &s;
    }
  }
  if (!filtered) throw InvariantViolation("no extreme state found");
  State greedy = greedy_climb(u, states.front(), none_of);
  if (!(greedy == *filtered))
    throw InvariantViolation("filter and greedy extreme states disagree");
  return *filtered;
}

}  // namespace

State find_clocked(const Universe& u, StarPlacement stars) {
  return find_extreme(u, stars, MoveDirection::Counterclockwise);
}

State find_counterclocked(const Universe& u, StarPlacement stars) {
  return find_extreme(u, stars, MoveDirection::Clockwise);
}

}  // namespace knotclock
