#pragma once

// Diagram constructors: standard two-bridge (4-plat) shadows from twist-box
// lists, connected sums, alternating over/under assignment, and the embedded
// small-knot reference table.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotclock/alexpoly.hpp"
#include "knotclock/diagram.hpp"

namespace knotclock {

struct TwoBridgeSpec {
  std::vector<int> box_twists;  // a_1..a_m, all >= 1
};

// The equal-valued spec with opposite box-count parity: [a1,...] becomes
// [1, a1-1, ...] when a1 >= 2, or [a2+1, ...] when a1 == 1.  Throws
// std::invalid_argument for the bare [1].
TwoBridgeSpec parity_flipped(const TwoBridgeSpec& spec);

struct TwoBridgeDiagram {
  Diagram diagram;  // alternating over/under filled in
  StarPlacement recommended_stars;  // the two big regions; r_i + r_j = c + 2
  bool knotted = true;  // false when the closed curve is the unknot
  long long fraction_p = 0;  // continued-fraction value of the box list,
  long long fraction_q = 1;  // p/q > 0, gcd 1; the curve is a knot iff p is odd
};

// Standard alternating 4-plat shadow: boxes of a_k half-twists, alternating
// twist direction box by box, closed by the parity-appropriate form.  A
// closure with an even fraction numerator traces two components and throws
// std::invalid_argument.
TwoBridgeDiagram gen_two_bridge(const TwoBridgeSpec& spec);

struct ConnectedSum {
  Diagram diagram;  // edges relabeled canonically from vertex 0
  std::vector<VertexId> part_a;  // first operand's vertices
  std::vector<VertexId> part_b;  // second operand's, renumbered after part_a
  std::pair<EdgeId, EdgeId> splice_edges;  // final labeling
  StarPlacement merged_faces;  // the face pair flanking both splice edges
};

// Splices d2 into an edge of d1: one edge of each diagram is cut and the
// loose ends are joined crosswise.  Nontrivial operands always yield a
// non-proper universe with the splice edges as a 2-edge cut.  A circle
// (read: Universe::circle()) operand returns the other diagram relabeled.
ConnectedSum connected_sum(const Diagram& d1, const Diagram& d2);

// Crossing-free closed curve.  Only meaningful as a connected_sum operand;
// every other operation rejects or misbehaves on it.
Diagram circle_diagram();

// Over/under assignment making the diagram alternating: the strand passes
// over exactly at the crossings it enters with a black corner on its right,
// under a checkerboard 2-coloring of the faces.
Diagram make_alternating(const Universe& u);

struct KnotTableEntry {
  std::string name;
  std::string pd_code;
  int crossing_number = 0;
  int bridge_number = 0;
  IntPolynomial alexander;  // unit-normal form
  Diagram diagram;
};

// Reads `name|pd|c|bridge|alex` lines; path may be the file or its
// directory.  Every entry is re-validated: the code parses to a proper
// universe with V = c and the star-deleted determinant reproduces the
// stored coefficients.  A failure throws ParseError naming the entry.
std::vector<KnotTableEntry> load_table(const std::string& path);

// KNOTCLOCK_TABLE env var when set, else the source-tree data file.
std::string default_table_path();

}  // namespace knotclock
