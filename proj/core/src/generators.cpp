#include "knotclock/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#ifndef KNOTCLOCK_SOURCE_DATA_DIR
#define KNOTCLOCK_SOURCE_DATA_DIR "data"
#endif

namespace knotclock {

namespace {

// Dart-level assembly: vertices with slots 0..3 (counterclockwise), conn a
// fixed-point-free involution pairing dart indices.  Tracing the closed
// curve assigns PD labels in walk order, which makes labels increase along
// the orientation as the parser expects.
struct Assembly {
  int n = 0;
  std::vector<int> conn;

  int add_vertex() {
    conn.resize(4 * (n + 1), -1);
    return n++;
  }
  void join(int a, int b) {
    conn[a] = b;
    conn[b] = a;
  }

  std::vector<std::array<int, 4>> trace() const {
    for (int d = 0; d < 4 * n; ++d)
      if (conn[d] < 0) throw InvariantViolation("open dart in assembly");
    std::vector<std::array<int, 4>> rot(n, {0, 0, 0, 0});
    int labeled = 0;
    int p = 0;  // departure dart
    for (int label = 1; label <= 2 * n; ++label) {
      int q = conn[p];
      rot[p / 4][p % 4] = label;
      rot[q / 4][q % 4] = label;
      labeled += 2;
      p = (q & ~3) | ((q + 2) & 3);  // strand goes straight through
    }
    if (p != 0 || labeled != 4 * n)
      throw std::invalid_argument("assembly traces more than one closed curve");
    return rot;
  }
};

// Crossing slot geometry used by the tangle builders: slot 0 points
// northeast, then counterclockwise 1 = NW, 2 = SW, 3 = SE.
struct Tangle {
  Assembly a;
  int nw = -1, ne = -1, se = -1, sw = -1;  // dangling dart indices

  void seed_crossing() {
    int v = 4 * a.add_vertex();
    ne = v + 0;
    nw = v + 1;
    sw = v + 2;
    se = v + 3;
  }
  void twist_right() {
    int v = 4 * a.add_vertex();
    a.join(v + 1, ne);
    a.join(v + 2, se);
    ne = v + 0;
    se = v + 3;
  }
  void twist_bottom() {
    int v = 4 * a.add_vertex();
    a.join(v + 0, se);
    a.join(v + 1, sw);
    sw = v + 2;
    se = v + 3;
  }
};

StarPlacement first_sum_condition_pair(const Universe& u) {
  // The two big regions: first adjacent pair with vertex counts summing to
  // c + 2.  The one-crossing unknot curl has no such pair (every region
  // meets the single vertex once); fall back to the largest adjacent pair.
  StarPlacement best{-1, -1};
  int best_sum = -1;
  for (auto [i, j] : u.adjacent_face_pairs()) {
    int sum = u.face(i).distinct_vertices + u.face(j).distinct_vertices;
    if (sum == u.vertex_count() + 2) return StarPlacement{i, j};
    if (sum > best_sum) {
      best_sum = sum;
      best = StarPlacement{i, j};
    }
  }
  if (best_sum < 0)
    throw InvariantViolation("standard two-bridge diagram lost its big regions");
  return best;
}

}  // namespace

TwoBridgeSpec parity_flipped(const TwoBridgeSpec& spec) {
  const auto& a = spec.box_twists;
  if (a.empty()) throw std::invalid_argument("empty box list");
  TwoBridgeSpec out;
  if (a[0] >= 2) {
    out.box_twists.push_back(1);
    out.box_twists.push_back(a[0] - 1);
    out.box_twists.insert(out.box_twists.end(), a.begin() + 1, a.end());
  } else if (a.size() >= 2) {
    out.box_twists.push_back(a[1] + 1);
    out.box_twists.insert(out.box_twists.end(), a.begin() + 2, a.end());
  } else {
    throw std::invalid_argument("[1] has no opposite-parity form");
  }
  return out;
}

TwoBridgeDiagram gen_two_bridge(const TwoBridgeSpec& spec) {
  const auto& boxes = spec.box_twists;
  if (boxes.empty()) throw std::invalid_argument("empty box list");
  for (int t : boxes)
    if (t < 1) throw std::invalid_argument("box twist counts must be >= 1");

  // Continued-fraction value of the box list; the closed curve is a knot
  // exactly when the numerator is odd.
  long long p = boxes[0], q = 1;
  for (size_t k = 1; k < boxes.size(); ++k) {
    long long np = boxes[k] * p + q;
    q = p;
    p = np;
  }
  if (p % 2 == 0)
    throw std::invalid_argument("box list closes to a 2-component link, not a knot");

  Tangle t;
  for (size_t k = 0; k < boxes.size(); ++k) {
    for (int i = 0; i < boxes[k]; ++i) {
      if (t.a.n == 0)
        t.seed_crossing();
      else if (k % 2 == 0)
        t.twist_right();
      else
        t.twist_bottom();
    }
  }
  if (boxes.size() % 2 == 1) {
    t.a.join(t.nw, t.ne);  // numerator closure
    t.a.join(t.sw, t.se);
  } else {
    t.a.join(t.nw, t.sw);  // denominator closure
    t.a.join(t.ne, t.se);
  }

  TwoBridgeDiagram out;
  out.diagram = make_alternating(Universe::from_pd(t.a.trace()));
  out.recommended_stars = first_sum_condition_pair(out.diagram.universe);
  out.fraction_p = p;
  out.fraction_q = q;
  out.knotted = p != 1;
  return out;
}

Diagram circle_diagram() {
  Diagram d;
  d.universe = Universe::circle();
  return d;
}

namespace {

// Rebuilds a diagram as an assembly minus one edge, leaving its two darts
// to be joined by the caller.  Dart indices shift by 4*offset.
void copy_minus_edge(Assembly& a, const Diagram& d, EdgeId skip, int offset) {
  const Universe& u = d.universe;
  for (VertexId v = 0; v < u.vertex_count(); ++v) a.add_vertex();
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    if (e == skip) continue;
    const Edge& ed = u.edge(e);
    a.join(4 * (ed.tail.v + offset) + ed.tail.slot,
           4 * (ed.head.v + offset) + ed.head.slot);
  }
}

EdgeId relabeled_edge(const Universe& u, VertexId v, int slot) {
  return u.edge_at(v, slot);
}

}  // namespace

ConnectedSum connected_sum(const Diagram& d1, const Diagram& d2) {
  const bool c1 = d1.universe.vertex_count() == 0;
  const bool c2 = d2.universe.vertex_count() == 0;
  if (c1 && c2) throw std::invalid_argument("cannot sum two crossing-free circles");
  if (c1 || c2) {
    // Splicing a circle into an edge changes nothing; relabel canonically.
    const Diagram& d = c1 ? d2 : d1;
    Assembly a;
    for (VertexId v = 0; v < d.universe.vertex_count(); ++v) a.add_vertex();
    for (EdgeId e = 0; e < d.universe.edge_count(); ++e) {
      const Edge& ed = d.universe.edge(e);
      a.join(4 * ed.tail.v + ed.tail.slot, 4 * ed.head.v + ed.head.slot);
    }
    ConnectedSum out;
    out.diagram.universe = Universe::from_pd(a.trace());
    out.diagram.over_slot = d.over_slot;
    if (!c1)
      for (VertexId v = 0; v < d.universe.vertex_count(); ++v)
        out.part_a.push_back(v);
    else
      for (VertexId v = 0; v < d.universe.vertex_count(); ++v)
        out.part_b.push_back(v);
    const Universe& nu = out.diagram.universe;
    EdgeId e0 = nu.face(0).edges.empty() ? 0 : *std::min_element(
        nu.face(0).edges.begin(), nu.face(0).edges.end());
    out.splice_edges = {e0, e0};
    out.merged_faces = StarPlacement{std::min(nu.face_left(e0), nu.face_right(e0)),
                                     std::max(nu.face_left(e0), nu.face_right(e0))};
    return out;
  }

  // Cut the lowest edge of face 0 in each operand (face 0 plays the outer
  // role) and join the loose ends crosswise, preserving orientation.
  auto pick_edge = [](const Universe& u) {
    const auto& es = u.face(0).edges;
    return *std::min_element(es.begin(), es.end());
  };
  const EdgeId e1 = pick_edge(d1.universe);
  const EdgeId e2 = pick_edge(d2.universe);
  const int n1 = d1.universe.vertex_count();

  Assembly a;
  copy_minus_edge(a, d1, e1, 0);
  copy_minus_edge(a, d2, e2, n1);
  const Edge& E1 = d1.universe.edge(e1);
  const Edge& E2 = d2.universe.edge(e2);
  const int tail1 = 4 * E1.tail.v + E1.tail.slot;
  const int head1 = 4 * E1.head.v + E1.head.slot;
  const int tail2 = 4 * (E2.tail.v + n1) + E2.tail.slot;
  const int head2 = 4 * (E2.head.v + n1) + E2.head.slot;
  a.join(tail1, head2);
  a.join(tail2, head1);

  ConnectedSum out;
  out.diagram.universe = Universe::from_pd(a.trace());
  const bool keep_over = d1.has_over_data() && d2.has_over_data();
  out.diagram.over_slot.assign(a.n, std::nullopt);
  if (keep_over) {
    for (VertexId v = 0; v < n1; ++v) out.diagram.over_slot[v] = d1.over_slot[v];
    for (VertexId v = 0; v < d2.universe.vertex_count(); ++v)
      out.diagram.over_slot[n1 + v] = d2.over_slot[v];
  }
  for (VertexId v = 0; v < n1; ++v) out.part_a.push_back(v);
  for (VertexId v = n1; v < a.n; ++v) out.part_b.push_back(v);

  const Universe& nu = out.diagram.universe;
  EdgeId ea = relabeled_edge(nu, E1.tail.v, E1.tail.slot);
  EdgeId eb = relabeled_edge(nu, E2.tail.v + n1, E2.tail.slot);
  out.splice_edges = {ea, eb};
  auto fa = std::minmax({nu.face_left(ea), nu.face_right(ea)});
  auto fb = std::minmax({nu.face_left(eb), nu.face_right(eb)});
  if (fa != fb)
    throw InvariantViolation("splice edges do not share their face pair");
  out.merged_faces = StarPlacement{fa.first, fa.second};
  return out;
}

Diagram make_alternating(const Universe& u) {
  // Checkerboard the faces: neighbors across every edge get opposite
  // colors; universes are face-2-colorable.
  std::vector<int> color(u.face_count(), -1);
  color[0] = 1;
  std::vector<FaceId> stack{0};
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (EdgeId e : u.face(f).edges) {
      FaceId g = u.face_left(e) == f ? u.face_right(e) : u.face_left(e);
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw InvariantViolation("faces are not 2-colorable");
      }
    }
  }

  Diagram d;
  d.universe = u;
  d.over_slot.assign(u.vertex_count(), std::nullopt);
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      Dart dart{v, s};
      EdgeId e = u.edge_at(v, s);
      if (!(u.edge(e).head == dart)) continue;  // want arrival darts
      if (color[u.face_of_corner(v, s)] == 1) {
        if (d.over_slot[v])
          throw InvariantViolation("two over-strand candidates at a crossing");
        d.over_slot[v] = s;
      }
    }
    if (!d.over_slot[v])
      throw InvariantViolation("no over-strand candidate at a crossing");
  }
  return d;
}

std::vector<KnotTableEntry> load_table(const std::string& path) {
  namespace fs = std::filesystem;
  std::string file = path;
  if (fs::is_directory(file)) file = (fs::path(path) / "knots_le8.pdtab").string();
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open table '" + file + "'");

  std::vector<KnotTableEntry> table;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, '|')) fields.push_back(field);
    if (fields.size() != 5)
      throw ParseError("table line " + std::to_string(lineno) +
                       ": expected 5 fields, got " + std::to_string(fields.size()));

    KnotTableEntry entry;
    entry.name = fields[0];
    entry.pd_code = fields[1];
    auto fail = [&](const std::string& why) {
      throw ParseError("table entry " + entry.name + ": " + why);
    };
    if (!names.insert(entry.name).second) fail("duplicate name");
    try {
      entry.crossing_number = std::stoi(fields[2]);
      entry.bridge_number = std::stoi(fields[3]);
    } catch (const std::exception&) {
      fail("bad numeric field");
    }
    std::vector<long long> coeffs;
    std::istringstream as(fields[4]);
    while (std::getline(as, field, ',')) {
      try {
        coeffs.push_back(std::stoll(field));
      } catch (const std::exception&) {
        fail("bad coefficient '" + field + "'");
      }
    }
    entry.alexander = IntPolynomial(coeffs, 0);
    if (!(entry.alexander == entry.alexander.normalized()))
      fail("stored coefficients are not in unit-normal form");

    try {
      entry.diagram = parse_diagram(entry.pd_code);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    const Universe& u = entry.diagram.universe;
    if (u.vertex_count() != entry.crossing_number)
      fail("crossing count " + std::to_string(u.vertex_count()) +
           " does not match c=" + std::to_string(entry.crossing_number));
    if (!u.is_proper()) fail("diagram is not proper");
    if (!entry.diagram.has_over_data()) fail("missing over/under data");
    auto pairs = u.adjacent_face_pairs();
    IntPolynomial det = alexander_det(
        entry.diagram, StarPlacement{pairs.front().first, pairs.front().second});
    if (!(det == entry.alexander))
      fail("determinant " + det.to_string() + " does not match stored " +
           entry.alexander.to_string());
    table.push_back(std::move(entry));
  }
  return table;
}

std::string default_table_path() {
  if (const char* env = std::getenv("KNOTCLOCK_TABLE")) return env;
  return std::string(KNOTCLOCK_SOURCE_DATA_DIR) + "/knots_le8.pdtab";
}

}  // namespace knotclock
