#include <doctest.h>

#include <algorithm>

#include "knotclock/diagram.hpp"

using namespace knotclock;

namespace {

const char* kTrefoil = "X(1,3,6,4) X(5,1,4,2) X(3,5,2,6)";
const char* kCurl = "X(1,1,2,2)";

}  // namespace

TEST_CASE("trefoil universe shape") {
  Universe u = parse_diagram(kTrefoil).universe;
  CHECK(u.vertex_count() == 3);
  CHECK(u.edge_count() == 6);
  CHECK(u.face_count() == 5);

  // Edge 1 runs from crossing 0 into crossing 1.
  const Edge& e0 = u.edge(0);
  CHECK(e0.tail == Dart{0, 0});
  CHECK(e0.head == Dart{1, 1});
  CHECK(!e0.is_loop());

  // Face 0 is the orbit of the lowest dart.
  const Face& f0 = u.face(0);
  CHECK(f0.corners == std::vector<Dart>{{0, 0}, {2, 0}, {1, 0}});
  CHECK(f0.corner_count() == 3);
  CHECK(f0.distinct_vertices == 3);
  CHECK(u.face(1).corner_count() == 2);
  CHECK(u.face(2).corner_count() == 3);
  CHECK(u.face(3).corner_count() == 2);
  CHECK(u.face(4).corner_count() == 2);

  CHECK(u.face_left(0) == 0);
  CHECK(u.face_right(0) == 3);
  CHECK(u.face_of_corner(0, 2) == 2);
  CHECK(u.mate(Dart{0, 0}) == Dart{1, 1});

  auto pairs = u.adjacent_face_pairs();
  std::vector<std::pair<FaceId, FaceId>> want{{0, 1}, {0, 3}, {0, 4},
                                              {1, 2}, {2, 3}, {2, 4}};
  CHECK(pairs == want);
  CHECK(u.shared_edges(0, 1) == std::vector<EdgeId>{2});
  CHECK(u.shared_vertices(0, 1) == std::vector<VertexId>{0, 2});
  CHECK(!u.adjacent(0, 2));

  CHECK(u.is_proper());
  CHECK(u.to_pd() == kTrefoil);
}

TEST_CASE("curl universe shape") {
  Universe u = parse_diagram(kCurl).universe;
  CHECK(u.vertex_count() == 1);
  CHECK(u.face_count() == 3);
  CHECK(u.edge(0).is_loop());
  CHECK(u.face(0).corners == std::vector<Dart>{{0, 0}});
  CHECK(u.face(1).corners == std::vector<Dart>{{0, 1}, {0, 3}});
  CHECK(u.face(2).corners == std::vector<Dart>{{0, 2}});
  // One crossing cannot straddle a splitting circle.
  CHECK(u.is_proper());
}

TEST_CASE("parser rejects bad input with pinned messages") {
  CHECK_THROWS_WITH_AS(
      parse_diagram("X(1,2,3,4) X(5,6,7,8) X(1,2,3,4) X(5,6,8,8)"),
      "edge label 7 used 1 time(s)", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,1,2,2) X(3,3,4,4)"),
                       "traversal not a single knot", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,4,6,3) X(5,1,4,2) X(3,5,2,6)"),
                       "non-planar rotation system (face count 3, expected 5)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram(""), "no crossings", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("# only a comment\n"), "no crossings",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,1,2,9)"),
                       "edge label 9 out of range 1..2", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,2,3)"), "malformed token 'X(1,2,3)'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,2,3,4,5)"),
                       "malformed token 'X(1,2,3,4,5)'", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("Y(1,2,3,4)"),
                       "malformed token 'Y(1,2,3,4)'", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,a,2,2)"),
                       "malformed token 'X(1,a,2,2)'", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,1,2,2);over=x"),
                       "malformed token 'X(1,1,2,2);over=x'", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("X(1,3,6,4);over=5 X(5,1,4,2) X(3,5,2,6)"),
                       "over label 5 not incident to crossing 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram_file("nope.pd"), "cannot open 'nope.pd'",
                       ParseError);
}

TEST_CASE("comments and over data survive a round trip") {
  Diagram d = parse_diagram(
      "# trefoil, alternating\n"
      "X(1,3,6,4);over=6 X(5,1,4,2);over=4\n"
      "X(3,5,2,6);over=2\n");
  CHECK(d.has_over_data());
  CHECK(d.over_slot[0] == 2);
  CHECK(d.over_slot[1] == 2);
  CHECK(d.over_slot[2] == 2);
  CHECK(d.to_pd() ==
        "X(1,3,6,4);over=6 X(5,1,4,2);over=4 X(3,5,2,6);over=2");
  Diagram again = parse_diagram(d.to_pd());
  CHECK(again.over_slot == d.over_slot);

  Diagram partial = parse_diagram("X(1,3,6,4);over=6 X(5,1,4,2) X(3,5,2,6)");
  CHECK(!partial.has_over_data());
  CHECK(partial.over_slot[0] == 2);
  CHECK(!partial.over_slot[1].has_value());
}

TEST_CASE("star placement validation") {
  Universe u = parse_diagram(kTrefoil).universe;
  StarPlacement s = make_star_placement(u, 0, 1);
  CHECK(s.a == 0);
  CHECK(s.b == 1);
  CHECK_THROWS_AS(make_star_placement(u, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_star_placement(u, 0, 5), std::invalid_argument);
  // The two triangles do not touch.
  CHECK_THROWS_AS(make_star_placement(u, 0, 2), std::invalid_argument);
}

TEST_CASE("boundary classification on the trefoil") {
  Universe u = parse_diagram(kTrefoil).universe;
  BoundaryClassification bc = classify_boundary(u, {0, 1});
  CHECK(bc.walk_edge == 2);  // label 3
  CHECK(bc.input == 0);
  CHECK(bc.output == 2);
  CHECK(bc.input_reversed == 2);
  CHECK(bc.output_reversed == 0);
  CHECK(bc.boundary == std::vector<VertexId>{0, 1, 2});
  CHECK(bc.interior.empty());
}

TEST_CASE("face stats expose corner and vertex counts") {
  Universe u = parse_diagram(kCurl).universe;
  auto stats = face_stats(u);
  REQUIRE(stats.size() == 3);
  CHECK(stats[1].corner_count == 2);
  CHECK(stats[1].distinct_vertices == 1);  // both corners at the one crossing
}
