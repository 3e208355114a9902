#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "knotclock/generators.hpp"
#include "knotclock/lattice.hpp"

using namespace knotclock;

namespace {

// Over/under must alternate along the strand and give each crossing one
// over-pass and one under-pass.
void check_alternating(const Diagram& d) {
  const Universe& u = d.universe;
  REQUIRE(d.has_over_data());
  std::vector<int> over_visits(u.vertex_count(), 0),
      under_visits(u.vertex_count(), 0);
  int prev = -1;
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    Dart h = u.edge(e).head;
    int s = *d.over_slot[h.v];
    bool over = h.slot == s || h.slot == (s + 2) % 4;
    (over ? over_visits : under_visits)[h.v] += 1;
    if (prev >= 0) CHECK(prev != static_cast<int>(over));
    prev = static_cast<int>(over);
  }
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    CHECK(over_visits[v] == 1);
    CHECK(under_visits[v] == 1);
  }
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("twist-box list generates the standard trefoil") {
  TwoBridgeDiagram g = gen_two_bridge({{3}});
  CHECK(g.diagram.universe.to_pd() == "X(1,3,6,4) X(5,1,4,2) X(3,5,2,6)");
  CHECK(g.fraction_p == 3);
  CHECK(g.fraction_q == 1);
  CHECK(g.knotted);
  CHECK(g.recommended_stars.a == 0);
  CHECK(g.recommended_stars.b == 1);
  check_alternating(g.diagram);
  // The recommended faces are the two big regions.
  const Universe& u = g.diagram.universe;
  CHECK(u.face(0).distinct_vertices + u.face(1).distinct_vertices ==
        u.vertex_count() + 2);
}

TEST_CASE("figure-eight from two boxes") {
  TwoBridgeDiagram g = gen_two_bridge({{2, 2}});
  const Universe& u = g.diagram.universe;
  CHECK(u.vertex_count() == 4);
  CHECK(u.face_count() == 6);
  CHECK(u.is_proper());
  CHECK(g.fraction_p == 5);
  CHECK(g.fraction_q == 2);
  check_alternating(g.diagram);
  CHECK(alexander_det(g.diagram, g.recommended_stars) ==
        IntPolynomial({1, -3, 1}, 0));
}

TEST_CASE("one half-twist closes to the unknot curl") {
  TwoBridgeDiagram g = gen_two_bridge({{1}});
  CHECK(g.diagram.universe.to_pd() == "X(1,1,2,2)");
  CHECK(g.fraction_p == 1);
  CHECK(!g.knotted);
}

TEST_CASE("even fractions are links and rejected") {
  CHECK_THROWS_AS(gen_two_bridge({{2}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_two_bridge({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_two_bridge({{}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_two_bridge({{3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_two_bridge({{-1}}), std::invalid_argument);
}

TEST_CASE("parity flip preserves the fraction and the knot") {
  TwoBridgeSpec spec{{3}};
  TwoBridgeSpec flipped = parity_flipped(spec);
  CHECK(flipped.box_twists == std::vector<int>{1, 2});
  CHECK(parity_flipped(flipped).box_twists == std::vector<int>{3});

  TwoBridgeDiagram a = gen_two_bridge(spec);
  TwoBridgeDiagram b = gen_two_bridge(flipped);
  CHECK(a.fraction_p == b.fraction_p);
  CHECK(a.diagram.universe.vertex_count() ==
        b.diagram.universe.vertex_count());
  CHECK(alexander_det(a.diagram, a.recommended_stars) ==
        alexander_det(b.diagram, b.recommended_stars));

  CHECK(parity_flipped({{2, 3}}).box_twists == std::vector<int>{1, 1, 3});
  CHECK(parity_flipped({{1, 2, 2}}).box_twists == std::vector<int>{3, 2});
  CHECK_THROWS_AS(parity_flipped({{1}}), std::invalid_argument);
}

TEST_CASE("connected sum splices two trefoils into a granny shadow") {
  TwoBridgeDiagram t = gen_two_bridge({{3}});
  ConnectedSum sum = connected_sum(t.diagram, t.diagram);
  const Universe& u = sum.diagram.universe;
  CHECK(u.vertex_count() == 6);
  CHECK(u.face_count() == 8);
  CHECK(sum.part_a == std::vector<VertexId>{0, 1, 2});
  CHECK(sum.part_b == std::vector<VertexId>{3, 4, 5});
  CHECK(sum.diagram.has_over_data());

  const PropernessReport& rep = u.properness();
  REQUIRE(!rep.proper);
  auto w = *rep.witness;
  auto s = sum.splice_edges;
  CHECK(std::minmax(w.first, w.second) == std::minmax(s.first, s.second));
  CHECK(rep.part_a.size() == 3);
  CHECK(rep.part_b.size() == 3);

  // The merged faces flank both splice edges.
  auto fa = std::minmax({u.face_left(s.first), u.face_right(s.first)});
  CHECK(fa.first == sum.merged_faces.a);
  CHECK(fa.second == sum.merged_faces.b);
}

TEST_CASE("summing with a circle relabels only") {
  TwoBridgeDiagram t = gen_two_bridge({{3}});
  ConnectedSum sum = connected_sum(circle_diagram(), t.diagram);
  CHECK(sum.diagram.universe.to_pd() == t.diagram.universe.to_pd());
  CHECK(sum.diagram.to_pd() == t.diagram.to_pd());
  CHECK(sum.part_a.empty());
  CHECK(sum.part_b == std::vector<VertexId>{0, 1, 2});

  ConnectedSum other = connected_sum(t.diagram, circle_diagram());
  CHECK(other.part_a == std::vector<VertexId>{0, 1, 2});
  CHECK_THROWS_AS(connected_sum(circle_diagram(), circle_diagram()),
                  std::invalid_argument);
}

TEST_CASE("make_alternating flags exactly one arrival dart per crossing") {
  TwoBridgeDiagram g = gen_two_bridge({{2, 1, 1}});
  check_alternating(g.diagram);
  Diagram redone = make_alternating(g.diagram.universe);
  CHECK(redone.over_slot == g.diagram.over_slot);
}

TEST_CASE("table loading validates every entry") {
  TwoBridgeDiagram t3 = gen_two_bridge({{3}});
  TwoBridgeDiagram t4 = gen_two_bridge({{2, 2}});
  const std::string line31 = "3_1|" + t3.diagram.to_pd() + "|3|2|1,-1,1";
  const std::string line41 = "4_1|" + t4.diagram.to_pd() + "|4|2|1,-3,1";

  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
  };

  auto good = temp_file("knotclock_good.pdtab");
  write(good, "# comment line\n" + line31 + "\n" + line41 + "\n");
  auto table = load_table(good.string());
  REQUIRE(table.size() == 2);
  CHECK(table[0].name == "3_1");
  CHECK(table[0].crossing_number == 3);
  CHECK(table[0].bridge_number == 2);
  CHECK(table[0].alexander == IntPolynomial({1, -1, 1}, 0));
  CHECK(table[1].diagram.universe.vertex_count() == 4);

  auto bad = temp_file("knotclock_bad.pdtab");
  write(bad, "3_1|X(1,1,2,2)|3|2\n");
  CHECK_THROWS_AS(load_table(bad.string()), ParseError);

  write(bad, line31 + "\n" + line31 + "\n");
  CHECK_THROWS_WITH_AS(load_table(bad.string()),
                       "table entry 3_1: duplicate name", ParseError);

  write(bad, "3_1|" + t3.diagram.to_pd() + "|4|2|1,-1,1\n");
  CHECK_THROWS_AS(load_table(bad.string()), ParseError);  // wrong c

  write(bad, "3_1|" + t3.diagram.to_pd() + "|3|2|1,-3,1\n");
  CHECK_THROWS_AS(load_table(bad.string()), ParseError);  // wrong polynomial

  write(bad, "3_1|" + t3.diagram.to_pd() + "|3|2|-1,1,-1\n");
  CHECK_THROWS_AS(load_table(bad.string()), ParseError);  // not unit-normal

  write(bad, "3_1|" + t3.diagram.universe.to_pd() + "|3|2|1,-1,1\n");
  CHECK_THROWS_WITH_AS(load_table(bad.string()),
                       "table entry 3_1: missing over/under data", ParseError);

  CHECK_THROWS_AS(load_table(temp_file("missing.pdtab").string()), ParseError);

  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("table path honours the environment override") {
  setenv("KNOTCLOCK_TABLE", "/tmp/custom.pdtab", 1);
  CHECK(default_table_path() == "/tmp/custom.pdtab");
  unsetenv("KNOTCLOCK_TABLE");
  CHECK(default_table_path() != "/tmp/custom.pdtab");
}
