#include "knotclock/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace knotclock {

namespace {

int succ_label(int label, int two_n) { return label % two_n + 1; }

}  // namespace

Universe Universe::from_pd(const std::vector<std::array<int, 4>>& rotations) {
  Universe u;
  u.n_ = static_cast<int>(rotations.size());
  if (u.n_ == 0) throw ParseError("no crossings");
  const int two_n = 2 * u.n_;

  std::vector<std::vector<Dart>> occurrences(two_n + 1);
  for (VertexId v = 0; v < u.n_; ++v) {
    for (int s = 0; s < 4; ++s) {
      int label = rotations[v][s];
      if (label < 1 || label > two_n) {
        throw ParseError("edge label " + std::to_string(label) +
                         " out of range 1.." + std::to_string(two_n));
      }
      occurrences[label].push_back({v, s});
    }
  }
  for (int label = 1; label <= two_n; ++label) {
    if (occurrences[label].size() != 2) {
      throw ParseError("edge label " + std::to_string(label) + " used " +
                       std::to_string(occurrences[label].size()) + " time(s)");
    }
  }

  auto label_at = [&](Dart d) { return rotations[d.v][d.slot]; };
  auto opposite = [](Dart d) { return Dart{d.v, (d.slot + 2) % 4}; };

  // The labels encode the strand traversal 1 -> 2 -> ... -> 2n -> 1: the
  // head of edge k sits rotationally opposite the tail of edge k+1.  Pick a
  // head for edge 1 and propagate; with one crossing both picks are valid
  // and give the same map.
  std::vector<Dart> head(two_n + 1), tail(two_n + 1);
  bool resolved = false;
  for (const Dart& start : occurrences[1]) {
    if (label_at(opposite(start)) != succ_label(1, two_n)) continue;
    bool ok = true;
    head[1] = start;
    int cur = 1;
    for (int step = 0; step < two_n && ok; ++step) {
      Dart h = head[cur];
      Dart opp = opposite(h);
      int nxt = succ_label(cur, two_n);
      if (label_at(opp) != nxt) {
        ok = false;
        break;
      }
      tail[nxt] = opp;
      const auto& occ = occurrences[nxt];
      head[nxt] = (occ[0] == opp) ? occ[1] : occ[0];
      cur = nxt;
    }
    if (ok && cur == 1 && head[1] == start) {
      resolved = true;
      break;
    }
  }
  if (!resolved) throw ParseError("traversal not a single knot");

  u.dart_edge_.assign(4 * u.n_, -1);
  for (VertexId v = 0; v < u.n_; ++v)
    for (int s = 0; s < 4; ++s) u.dart_edge_[4 * v + s] = rotations[v][s] - 1;
  u.edges_.resize(two_n);
  for (int label = 1; label <= two_n; ++label)
    u.edges_[label - 1] = Edge{tail[label], head[label]};

  u.trace_faces();
  if (u.face_count() != u.n_ + 2) {
    throw ParseError("non-planar rotation system (face count " +
                     std::to_string(u.face_count()) + ", expected " +
                     std::to_string(u.n_ + 2) + ")");
  }
  return u;
}

Universe Universe::circle() {
  Universe u;
  u.n_ = 0;
  u.faces_.resize(2);
  u.faces_[0].id = 0;
  u.faces_[1].id = 1;
  return u;
}

void Universe::trace_faces() {
  faces_.clear();
  face_of_dart_.assign(4 * n_, -1);
  // Orbits of d -> mate(sigma(d)); starting each orbit at its lowest dart
  // makes face ids deterministic.
  for (int start = 0; start < 4 * n_; ++start) {
    if (face_of_dart_[start] != -1) continue;
    Face f;
    f.id = static_cast<FaceId>(faces_.size());
    Dart d{start / 4, start % 4};
    do {
      face_of_dart_[dart_index(d)] = f.id;
      Dart ray{d.v, (d.slot + 1) % 4};
      f.corners.push_back(d);
      f.edges.push_back(dart_edge_[dart_index(ray)]);
      d = mate(ray);
    } while (dart_index(d) != start);
    std::set<VertexId> vs;
    for (const Dart& c : f.corners) vs.insert(c.v);
    f.distinct_vertices = static_cast<int>(vs.size());
    faces_.push_back(std::move(f));
  }
}

std::vector<EdgeId> Universe::shared_edges(FaceId a, FaceId b) const {
  std::vector<EdgeId> out;
  if (a == b) return out;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    FaceId l = face_left(e), r = face_right(e);
    if ((l == a && r == b) || (l == b && r == a)) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> Universe::shared_vertices(FaceId a, FaceId b) const {
  std::set<VertexId> va, vb;
  for (const Dart& c : faces_[a].corners) va.insert(c.v);
  for (const Dart& c : faces_[b].corners) vb.insert(c.v);
  std::vector<VertexId> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<std::pair<FaceId, FaceId>> Universe::adjacent_face_pairs() const {
  std::set<std::pair<FaceId, FaceId>> pairs;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    FaceId l = face_left(e), r = face_right(e);
    if (l != r) pairs.insert({std::min(l, r), std::max(l, r)});
  }
  return {pairs.begin(), pairs.end()};
}

const PropernessReport& Universe::properness() const {
  if (properness_) return *properness_;
  PropernessReport rep;
  // A splitting circle through two points corresponds to two distinct
  // non-loop edges bounding the same face pair whose removal disconnects
  // the graph (dual parallel edges = 2-edge cut).
  for (EdgeId e = 0; e < edge_count() && rep.proper; ++e) {
    if (edges_[e].is_loop()) continue;
    auto fe = std::minmax({face_left(e), face_right(e)});
    for (EdgeId f = e + 1; f < edge_count() && rep.proper; ++f) {
      if (edges_[f].is_loop()) continue;
      if (std::minmax({face_left(f), face_right(f)}) != fe) continue;
      // BFS over vertices avoiding e and f.
      std::vector<char> seen(n_, 0);
      std::vector<VertexId> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          EdgeId through = dart_edge_[4 * v + s];
          if (through == e || through == f) continue;
          const Edge& ed = edges_[through];
          VertexId w = (ed.tail.v == v) ? ed.head.v : ed.tail.v;
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached < n_) {
        rep.proper = false;
        rep.witness = {e, f};
        for (VertexId v = 0; v < n_; ++v)
          (seen[v] ? rep.part_a : rep.part_b).push_back(v);
      }
    }
  }
  properness_ = std::move(rep);
  return *properness_;
}

std::string Universe::to_pd() const {
  std::ostringstream os;
  for (VertexId v = 0; v < n_; ++v) {
    if (v) os << ' ';
    os << "X(" << dart_edge_[4 * v] + 1 << ',' << dart_edge_[4 * v + 1] + 1
       << ',' << dart_edge_[4 * v + 2] + 1 << ',' << dart_edge_[4 * v + 3] + 1
       << ')';
  }
  return os.str();
}

StarPlacement make_star_placement(const Universe& u, FaceId a, FaceId b) {
  if (a < 0 || b < 0 || a >= u.face_count() || b >= u.face_count())
    throw std::invalid_argument("star face id out of range");
  if (a == b) throw std::invalid_argument("starred faces must be distinct");
  if (!u.adjacent(a, b))
    throw std::invalid_argument("starred faces F" + std::to_string(a) +
                                ",F" + std::to_string(b) +
                                " share no edge");
  return StarPlacement{a, b};
}

BoundaryClassification classify_boundary(const Universe& u, StarPlacement stars) {
  if (!u.is_proper())
    throw std::invalid_argument("boundary classification requires a proper universe");
  auto shared = u.shared_edges(stars.a, stars.b);
  if (shared.empty())
    throw std::invalid_argument("starred faces share no edge");
  BoundaryClassification bc;
  bc.walk_edge = shared.front();
  const Edge& e0 = u.edge(bc.walk_edge);
  bc.input = e0.head.v;
  bc.output = e0.tail.v;
  bc.input_reversed = e0.tail.v;
  bc.output_reversed = e0.head.v;

  std::set<VertexId> bset;
  for (const Dart& c : u.face(stars.a).corners) bset.insert(c.v);
  for (const Dart& c : u.face(stars.b).corners) bset.insert(c.v);
  bc.boundary.assign(bset.begin(), bset.end());
  for (VertexId v = 0; v < u.vertex_count(); ++v)
    if (!bset.count(v)) bc.interior.push_back(v);
  return bc;
}

std::vector<FaceStats> face_stats(const Universe& u) {
  std::vector<FaceStats> out;
  out.reserve(u.face_count());
  for (const Face& f : u.faces())
    out.push_back({f.id, f.corner_count(), f.distinct_vertices});
  return out;
}

bool Diagram::has_over_data() const {
  if (over_slot.size() != static_cast<size_t>(universe.vertex_count()))
    return false;
  return std::all_of(over_slot.begin(), over_slot.end(),
                     [](const auto& s) { return s.has_value(); });
}

std::string Diagram::to_pd() const {
  std::ostringstream os;
  for (VertexId v = 0; v < universe.vertex_count(); ++v) {
    if (v) os << ' ';
    os << "X(" << universe.edge_label(universe.edge_at(v, 0)) << ','
       << universe.edge_label(universe.edge_at(v, 1)) << ','
       << universe.edge_label(universe.edge_at(v, 2)) << ','
       << universe.edge_label(universe.edge_at(v, 3)) << ')';
    if (v < static_cast<VertexId>(over_slot.size()) && over_slot[v])
      os << ";over=" << universe.edge_label(universe.edge_at(v, *over_slot[v]));
  }
  return os.str();
}

Diagram parse_diagram(const std::string& text) {
  // Strip comments, then split on whitespace.
  std::string clean;
  clean.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) clean.push_back('\n');
    } else {
      clean.push_back(text[i]);
    }
  }

  std::vector<std::array<int, 4>> rotations;
  std::vector<std::optional<int>> over_labels;
  std::istringstream is(clean);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 4 || tok.compare(0, 2, "X(") != 0)
      throw ParseError("malformed token '" + tok + "'");
    size_t close = tok.find(')');
    if (close == std::string::npos)
      throw ParseError("malformed token '" + tok + "'");
    std::array<int, 4> labels{};
    {
      std::string inner = tok.substr(2, close - 2);
      std::istringstream fs(inner);
      for (int k = 0; k < 4; ++k) {
        std::string field;
        if (!std::getline(fs, field, ',')) throw ParseError("malformed token '" + tok + "'");
        try {
          size_t used = 0;
          labels[k] = std::stoi(field, &used);
          if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
          throw ParseError("malformed token '" + tok + "'");
        }
      }
      std::string extra;
      if (std::getline(fs, extra, ','))
        throw ParseError("malformed token '" + tok + "'");
    }
    std::optional<int> over;
    std::string rest = tok.substr(close + 1);
    if (!rest.empty()) {
      if (rest.compare(0, 6, ";over=") != 0)
        throw ParseError("malformed token '" + tok + "'");
      try {
        size_t used = 0;
        over = std::stoi(rest.substr(6), &used);
        if (used != rest.size() - 6) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        throw ParseError("malformed token '" + tok + "'");
      }
    }
    rotations.push_back(labels);
    over_labels.push_back(over);
  }

  Diagram d;
  d.universe = Universe::from_pd(rotations);
  d.over_slot.resize(rotations.size());
  for (size_t v = 0; v < rotations.size(); ++v) {
    if (!over_labels[v]) continue;
    int label = *over_labels[v];
    int slot = -1;
    for (int s = 0; s < 4; ++s)
      if (rotations[v][s] == label) {
        slot = s;
        break;
      }
    if (slot < 0)
      throw ParseError("over label " + std::to_string(label) +
                       " not incident to crossing " + std::to_string(v + 1));
    d.over_slot[v] = slot;
  }
  return d;
}

Diagram parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

}  // namespace knotclock
