#pragma once

// Knot universes as combinatorial maps.
//
// A universe is the 4-valent plane graph underlying a knot projection: V
// crossings, 2V edges, V+2 faces on the sphere.  Each crossing carries four
// darts in counterclockwise rotation order (slots 0..3); the strand entering
// through slot s leaves through slot (s+2)%4.  Faces are the orbits of
// d -> alpha(sigma(d)) where sigma advances a dart one slot counterclockwise
// and alpha jumps to the other end of the dart's edge.  Under that tracing
// rule the corner between rays s and s+1 at a vertex lies in the same face
// as dart (v,s), so corners and darts are identified throughout.
//
// Text format, one X(...) token per crossing:
//   X(a,b,c,d)[;over=k]
// a,b,c,d are edge labels 1..2V in counterclockwise rotation order; labels
// increase along the strand orientation (label k runs into label k%2V+1).
// The optional suffix marks the over-strand dart pair at that crossing and
// is consumed only by the Alexander oracle.  '#' starts a comment.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotclock {

using VertexId = int;
using EdgeId = int;   // 0-based; user-facing label is id+1
using FaceId = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation contradicts a structural guarantee (for
// example a state lattice with two sinks).  Always an implementation bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Dart {
  VertexId v = -1;
  int slot = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Edge {
  Dart tail;  // dart at the vertex the strand leaves through this edge
  Dart head;  // dart at the vertex the strand enters through this edge
  bool is_loop() const { return tail.v == head.v; }
};

struct Face {
  FaceId id = -1;
  std::vector<Dart> corners;  // orbit order of the tracing rule
  std::vector<EdgeId> edges;  // edge of ray sigma(corners[i]), aligned
  int corner_count() const { return static_cast<int>(corners.size()); }
  // r_i of the paper-style region statistics: distinct incident vertices.
  int distinct_vertices = 0;
};

struct PropernessReport {
  bool proper = true;
  // When not proper: a 2-edge cut bounding the same face pair, plus the
  // vertex sets of the two split parts.
  std::optional<std::pair<EdgeId, EdgeId>> witness;
  std::vector<VertexId> part_a, part_b;
};

class Universe {
 public:
  // rotations[v] = edge labels (1..2n) at slots 0..3 in CCW order.
  // Validates label multiplicities, strand traversal, and planarity.
  static Universe from_pd(const std::vector<std::array<int, 4>>& rotations);

  // Crossing-free closed curve: no vertices or edges, two empty faces.
  // Supported only as a connected-sum operand.
  static Universe circle();

  int vertex_count() const { return n_; }
  int edge_count() const { return 2 * n_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  int dart_count() const { return 4 * n_; }
  static int dart_index(Dart d) { return 4 * d.v + d.slot; }

  EdgeId edge_at(VertexId v, int slot) const { return dart_edge_[4 * v + slot]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  int edge_label(EdgeId e) const { return e + 1; }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  FaceId face_of_dart(Dart d) const { return face_of_dart_[dart_index(d)]; }
  // The corner between rays slot and slot+1 at v.
  FaceId face_of_corner(VertexId v, int slot) const {
    return face_of_dart_[4 * v + slot];
  }
  // Faces flanking an edge: left of tail->head travel, then right.
  FaceId face_left(EdgeId e) const { return face_of_dart(edges_[e].tail); }
  FaceId face_right(EdgeId e) const { return face_of_dart(edges_[e].head); }

  Dart mate(Dart d) const {
    const Edge& e = edges_[dart_edge_[dart_index(d)]];
    return (e.tail == d) ? e.head : e.tail;
  }

  std::vector<EdgeId> shared_edges(FaceId a, FaceId b) const;
  std::vector<VertexId> shared_vertices(FaceId a, FaceId b) const;
  bool adjacent(FaceId a, FaceId b) const { return !shared_edges(a, b).empty(); }
  // All unordered adjacent face pairs, ordered by (min id, max id).
  std::vector<std::pair<FaceId, FaceId>> adjacent_face_pairs() const;

  const PropernessReport& properness() const;
  bool is_proper() const { return properness().proper; }

  // Rebuilds the PD text (without over data) from the stored rotations.
  std::string to_pd() const;

 private:
  int n_ = 0;
  std::vector<EdgeId> dart_edge_;      // 4n entries
  std::vector<Edge> edges_;            // 2n entries, label = id+1
  std::vector<Face> faces_;
  std::vector<FaceId> face_of_dart_;   // 4n entries
  mutable std::optional<PropernessReport> properness_;

  void trace_faces();
};

// Star placement: two distinct faces sharing at least one edge.
struct StarPlacement {
  FaceId a = -1, b = -1;
};
StarPlacement make_star_placement(const Universe& u, FaceId a, FaceId b);

struct BoundaryClassification {
  VertexId input = -1;   // first vertex on the oriented walk from the shared edge
  VertexId output = -1;  // last vertex before the walk returns
  // Walking against the orientation swaps the two roles.
  VertexId input_reversed = -1;
  VertexId output_reversed = -1;
  EdgeId walk_edge = -1;             // lowest-label edge shared by the stars
  std::vector<VertexId> boundary;    // vertices incident to either star
  std::vector<VertexId> interior;    // everything else
};

// Input/output/boundary/interior split for a proper universe.
// Throws std::invalid_argument if the universe is not proper.
BoundaryClassification classify_boundary(const Universe& u, StarPlacement stars);

struct FaceStats {
  FaceId id;
  int corner_count;
  int distinct_vertices;
};
std::vector<FaceStats> face_stats(const Universe& u);

// A diagram is a universe plus optional over-strand data per crossing:
// over_slot[v] is one slot of the over-strand dart pair {s, s+2}.
struct Diagram {
  Universe universe;
  std::vector<std::optional<int>> over_slot;
  bool has_over_data() const;
  std::string to_pd() const;  // includes ;over= suffixes when present
};

Diagram parse_diagram(const std::string& text);
Diagram parse_diagram_file(const std::string& path);

}  // namespace knotclock
