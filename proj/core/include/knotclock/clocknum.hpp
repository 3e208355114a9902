#pragma once

// Clock numbers and the verification suites.
//
// For one diagram, the clock number of a star placement is the lattice
// height; minimizing over the diagram's placements bounds the knot's clock
// number from above.  The suites sweep the reference table and generated
// families and emit one verdict per (suite, target).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotclock/generators.hpp"
#include "knotclock/lattice.hpp"

namespace knotclock {

struct PlacementHeight {
  StarPlacement stars;
  int height = 0;
  int directed_height = 0;
  long long state_count = 0;
};

struct ClockReport {
  int crossing_count = 0;
  std::vector<PlacementHeight> placements;  // each adjacent pair once
  int min_over_stars = 0;
  // Interval for the knot's clock number: the upper bound is what this
  // diagram exhibits; the lower bound needs table knowledge (the crossing
  // number for prime knots) and stays 1 otherwise.
  int p_lower = 1;
  int p_upper = 0;
  std::optional<std::string> knot_name;
  std::optional<int> known_crossing_number;
  std::optional<int> known_bridge_number;
};

ClockReport clock_number_of_diagram(const Universe& u);

// Fills in name, known numbers, and the prime-knot lower bound.
void annotate_from_table(ClockReport& report, const KnotTableEntry& entry);

enum class Verdict { Pass, Fail, HypothesisUnmet };

struct VerdictRecord {
  std::string suite;
  std::string target;  // knot or construction, plus stars when relevant
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::map<std::string, long long> numbers;
};

std::string to_string(Verdict v);
std::string format_verdict(const VerdictRecord& r);  // one line

// Individual checks, as used by the suites.

// Every placement height must reach the knot's crossing number.
VerdictRecord verify_inequality_thm41(const ClockReport& report);

// Minimal-path accounting at one placement: over all shortest paths the
// per-vertex move counts are at least 1 for the input and output points, 2
// for other boundary points, 4 for interior points, and any one path's
// counts sum to 2(height-1).
VerdictRecord verify_lemma42(const Universe& u, StarPlacement stars);

// On a connected sum, no reachable state may admit a move whose two
// endpoints lie in different splittable parts.
VerdictRecord verify_lemma43(const ConnectedSum& sum, StarPlacement stars);

// Adjacent faces of a proper loop-free universe share exactly two vertices.
VerdictRecord verify_lemma51(const Universe& u);

// height + r_i + r_j >= 2c + 2 at one placement, c the knot's crossing
// number (pass the diagram's when minimal).  Also audits the proof step
// r_i + r_j - 2 <= crossing count.
VerdictRecord verify_lemma52(const Universe& u, StarPlacement stars,
                             int known_crossing_number);

struct TwoBridgeCondition {
  bool satisfied = false;
  std::optional<StarPlacement> witness;  // first pair with r_i + r_j = c + 2
};

// Proper universes only (throws std::invalid_argument otherwise).  A
// satisfied condition certifies bridge number <= 2.
TwoBridgeCondition two_bridge_condition(const Universe& u);

// Suite names accepted by run_suite and the CLI.
const std::vector<std::string>& suite_names();

// Runs one suite over the table (plus suite-specific generated diagrams).
// `seed` drives the randomized greedy starting states.
std::vector<VerdictRecord> run_suite(const std::string& suite,
                                     const std::vector<KnotTableEntry>& table,
                                     std::uint64_t seed);

bool all_passed(const std::vector<VerdictRecord>& records);

}  // namespace knotclock
