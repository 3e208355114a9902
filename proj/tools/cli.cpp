#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotclock/clocknum.hpp"

namespace knotclock::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 0x6b6e6f74636c6bULL;

StarPlacement parse_stars(const Universe& u, const std::string& text) {
  auto strip = [](std::string s) {
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) s.erase(0, 1);
    return s;
  };
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--stars wants F_i,F_j");
  try {
    int a = std::stoi(strip(text.substr(0, comma)));
    int b = std::stoi(strip(text.substr(comma + 1)));
    return make_star_placement(u, a, b);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("--stars wants F_i,F_j");
  }
}

std::string star_str(StarPlacement s) {
  return "F" + std::to_string(s.a) + ",F" + std::to_string(s.b);
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

ordered_json stars_json(StarPlacement s) { return ordered_json::array({s.a, s.b}); }

int cmd_parse(const std::string& file, bool json, std::ostream& out) {
  Diagram d = parse_diagram_file(file);
  const Universe& u = d.universe;
  int over = 0;
  for (const auto& s : d.over_slot)
    if (s) ++over;
  const auto& prop = u.properness();

  if (json) {
    ordered_json j;
    j["file"] = file;
    j["crossings"] = u.vertex_count();
    j["edges"] = u.edge_count();
    j["faces"] = ordered_json::array();
    for (const auto& fs : face_stats(u))
      j["faces"].push_back({{"id", fs.id},
                            {"corners", fs.corner_count},
                            {"distinct_vertices", fs.distinct_vertices}});
    j["proper"] = prop.proper;
    if (!prop.proper) {
      j["cut_edges"] = ordered_json::array(
          {u.edge_label(prop.witness->first), u.edge_label(prop.witness->second)});
      j["parts"] = ordered_json::array({prop.part_a, prop.part_b});
    }
    j["over_data"] = over == u.vertex_count() ? "full" : (over ? "partial" : "none");
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "crossings: " << u.vertex_count() << "\n";
  out << "edges: " << u.edge_count() << "\n";
  out << "faces: " << u.face_count() << "\n";
  for (const auto& fs : face_stats(u))
    out << "  F" << fs.id << ": corners=" << fs.corner_count
        << " vertices=" << fs.distinct_vertices << "\n";
  out << "proper: " << (prop.proper ? "yes" : "no") << "\n";
  if (!prop.proper)
    out << "  cut edges: " << u.edge_label(prop.witness->first) << ","
        << u.edge_label(prop.witness->second) << "\n";
  out << "over data: "
      << (over == u.vertex_count() ? "full" : (over ? "partial" : "none"))
      << "\n";
  return 0;
}

int cmd_states(const std::string& file, const std::string& stars_text,
               bool list, bool json, std::ostream& out) {
  Diagram d = parse_diagram_file(file);
  StarPlacement stars = parse_stars(d.universe, stars_text);
  auto states = enumerate_states(d.universe, stars);

  if (json) {
    ordered_json j;
    j["file"] = file;
    j["stars"] = stars_json(stars);
    j["count"] = states.size();
    if (list) {
      j["states"] = ordered_json::array();
      for (const State& s : states) j["states"].push_back(s.slot);
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "states: " << states.size() << "\n";
  if (list)
    for (const State& s : states) {
      for (size_t v = 0; v < s.slot.size(); ++v)
        out << (v ? " " : "  ") << v << ':' << s.slot[v];
      out << "\n";
    }
  return 0;
}

int cmd_lattice(const std::string& file, const std::string& stars_text,
                const std::string& format, const std::string& out_path,
                std::ostream& out) {
  Diagram d = parse_diagram_file(file);
  StarPlacement stars = parse_stars(d.universe, stars_text);
  Lattice lat = build_lattice(d.universe, stars);
  write_output(out_path, export_lattice(lat, format), out);
  return 0;
}

int cmd_clocknum(const std::string& file, const std::string& stars_text,
                 bool json, std::ostream& out) {
  Diagram d = parse_diagram_file(file);
  ClockReport rep;
  if (!stars_text.empty()) {
    StarPlacement stars = parse_stars(d.universe, stars_text);
    Lattice lat = build_lattice(d.universe, stars);
    rep.crossing_count = d.universe.vertex_count();
    rep.placements.push_back({stars, lat.height, lat.directed_height,
                              static_cast<long long>(lat.states.size())});
    rep.min_over_stars = lat.height;
    rep.p_upper = lat.height;
  } else {
    rep = clock_number_of_diagram(d.universe);
  }

  if (json) {
    ordered_json j;
    j["file"] = file;
    j["crossings"] = rep.crossing_count;
    j["placements"] = ordered_json::array();
    for (const auto& ph : rep.placements)
      j["placements"].push_back({{"stars", stars_json(ph.stars)},
                                 {"height", ph.height},
                                 {"directed_height", ph.directed_height},
                                 {"states", ph.state_count}});
    j["min_over_stars"] = rep.min_over_stars;
    j["p_lower"] = rep.p_lower;
    j["p_upper"] = rep.p_upper;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "crossings: " << rep.crossing_count << "\n";
  for (const auto& ph : rep.placements)
    out << "  " << star_str(ph.stars) << " height=" << ph.height
        << " directed=" << ph.directed_height << " states=" << ph.state_count
        << "\n";
  out << "min over stars: " << rep.min_over_stars << "\n";
  out << "clock number interval: [" << rep.p_lower << ", " << rep.p_upper
      << "]\n";
  return 0;
}

int cmd_alex(const std::string& file, const std::string& stars_text, bool json,
             std::ostream& out) {
  Diagram d = parse_diagram_file(file);
  StarPlacement stars = parse_stars(d.universe, stars_text);
  IntPolynomial poly = alexander_det(d, stars);
  long long terms = permutation_term_count(d.universe, stars);

  if (json) {
    ordered_json j;
    j["file"] = file;
    j["stars"] = stars_json(stars);
    j["coefficients"] = poly.coeffs();
    j["polynomial"] = poly.to_string();
    j["permutation_terms"] = terms;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "alexander: " << poly.to_string() << "\n";
  out << "coefficients:";
  for (long long c : poly.coeffs()) out << ' ' << c;
  out << "\npermutation terms: " << terms << "\n";
  return 0;
}

std::vector<int> parse_boxes(const std::string& text) {
  std::vector<int> boxes;
  std::istringstream is(text);
  std::string field;
  while (std::getline(is, field, ',')) {
    try {
      boxes.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw std::invalid_argument("box list wants comma-separated integers");
    }
  }
  if (boxes.empty()) throw std::invalid_argument("empty box list");
  return boxes;
}

int cmd_gen_two_bridge(const std::string& boxes_text, bool odd_form,
                       const std::string& out_path, bool json,
                       std::ostream& out) {
  TwoBridgeSpec spec{parse_boxes(boxes_text)};
  if (odd_form) spec = parity_flipped(spec);
  TwoBridgeDiagram g = gen_two_bridge(spec);
  std::string pd = g.diagram.to_pd() + "\n";

  if (json) {
    ordered_json j;
    j["boxes"] = spec.box_twists;
    j["crossings"] = g.diagram.universe.vertex_count();
    j["fraction"] = ordered_json::array({g.fraction_p, g.fraction_q});
    j["knotted"] = g.knotted;
    j["recommended_stars"] = stars_json(g.recommended_stars);
    j["pd"] = g.diagram.to_pd();
    if (!out_path.empty()) {
      write_output(out_path, pd, out);
      j["written"] = out_path;
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  write_output(out_path, pd, out);
  std::ostream& info = out;
  info << "crossings: " << g.diagram.universe.vertex_count() << "\n";
  info << "fraction: " << g.fraction_p << "/" << g.fraction_q << "\n";
  if (!g.knotted) info << "warning: unknotted curve\n";
  info << "recommended stars: " << star_str(g.recommended_stars) << "\n";
  if (!out_path.empty()) info << "written: " << out_path << "\n";
  return 0;
}

int cmd_gen_sum(const std::string& file_a, const std::string& file_b,
                const std::string& out_path, bool json, std::ostream& out) {
  Diagram a = parse_diagram_file(file_a);
  Diagram b = parse_diagram_file(file_b);
  ConnectedSum sum = connected_sum(a, b);
  std::string pd = sum.diagram.to_pd() + "\n";

  if (json) {
    ordered_json j;
    j["crossings"] = sum.diagram.universe.vertex_count();
    j["part_a"] = sum.part_a;
    j["part_b"] = sum.part_b;
    j["splice_edges"] = ordered_json::array(
        {sum.diagram.universe.edge_label(sum.splice_edges.first),
         sum.diagram.universe.edge_label(sum.splice_edges.second)});
    j["merged_faces"] = stars_json(sum.merged_faces);
    j["proper"] = sum.diagram.universe.is_proper();
    j["pd"] = sum.diagram.to_pd();
    if (!out_path.empty()) {
      write_output(out_path, pd, out);
      j["written"] = out_path;
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  write_output(out_path, pd, out);
  out << "crossings: " << sum.diagram.universe.vertex_count() << "\n";
  out << "splice edges: "
      << sum.diagram.universe.edge_label(sum.splice_edges.first) << ","
      << sum.diagram.universe.edge_label(sum.splice_edges.second) << "\n";
  out << "merged faces: " << star_str(sum.merged_faces) << "\n";
  out << "proper: " << (sum.diagram.universe.is_proper() ? "yes" : "no") << "\n";
  if (!out_path.empty()) out << "written: " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& table_path,
               std::uint64_t seed, bool json, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown suite '" + suite + "' (choose from " +
                                all + ")");
  }
  auto table = load_table(table_path);
  auto records = run_suite(suite, table, seed);

  long long pass = 0, fail = 0, unmet = 0;
  for (const auto& r : records) {
    if (r.verdict == Verdict::Pass) ++pass;
    if (r.verdict == Verdict::Fail) ++fail;
    if (r.verdict == Verdict::HypothesisUnmet) ++unmet;
  }

  if (json) {
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["table"] = table_path;
    j["records"] = ordered_json::array();
    for (const auto& r : records) {
      ordered_json rec;
      rec["suite"] = r.suite;
      rec["target"] = r.target;
      rec["verdict"] = to_string(r.verdict);
      rec["detail"] = r.detail;
      rec["numbers"] = r.numbers;
      j["records"].push_back(rec);
    }
    j["pass"] = pass;
    j["fail"] = fail;
    j["hypothesis_unmet"] = unmet;
    j["passed"] = fail == 0;
    out << j.dump(2) << "\n";
  } else {
    out << "suite: " << suite << "\nseed: " << seed << "\ntable: " << table_path
        << "\n";
    for (const auto& r : records) out << format_verdict(r) << "\n";
    out << "records: " << records.size() << " pass=" << pass
        << " fail=" << fail << " hypothesis-unmet=" << unmet << "\n";
  }
  return fail == 0 ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman state lattices and clock numbers of knot universes"};
  app.require_subcommand(1);

  std::string file, stars_text, format = "dot", out_path;
  std::string boxes_text, file_a, file_b, suite;
  std::string table_path = default_table_path();
  bool json = false, list = false, odd_form = false, all_stars = false;
  std::uint64_t seed = kDefaultSeed;

  auto* parse_cmd = app.add_subcommand("parse", "check a diagram file, print its shape");
  parse_cmd->add_option("file", file)->required();
  parse_cmd->add_flag("--json", json);

  auto* states_cmd = app.add_subcommand("states", "enumerate states for a star placement");
  states_cmd->add_option("file", file)->required();
  states_cmd->add_option("--stars", stars_text, "two adjacent faces, F_i,F_j")->required();
  states_cmd->add_flag("--list", list, "print each state");
  states_cmd->add_flag("--json", json);

  auto* lattice_cmd = app.add_subcommand("lattice", "build and export the state lattice");
  lattice_cmd->add_option("file", file)->required();
  lattice_cmd->add_option("--stars", stars_text)->required();
  lattice_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  lattice_cmd->add_option("-o,--output", out_path);

  auto* clock_cmd = app.add_subcommand("clocknum", "lattice heights over star placements");
  clock_cmd->add_option("file", file)->required();
  auto* stars_opt = clock_cmd->add_option("--stars", stars_text);
  clock_cmd->add_flag("--all-stars", all_stars, "sweep every adjacent pair (default)")
      ->excludes(stars_opt);
  clock_cmd->add_flag("--json", json);

  auto* alex_cmd = app.add_subcommand("alex", "state-matrix determinant and term count");
  alex_cmd->add_option("file", file)->required();
  alex_cmd->add_option("--stars", stars_text)->required();
  alex_cmd->add_flag("--json", json);

  auto* gen_cmd = app.add_subcommand("gen", "emit generated diagrams");
  gen_cmd->require_subcommand(1);
  auto* gen_tb = gen_cmd->add_subcommand("two-bridge", "standard twist-box diagram");
  gen_tb->add_option("boxes", boxes_text, "half-twist counts, e.g. 2,3")->required();
  gen_tb->add_flag("--odd-form", odd_form, "use the opposite box-count parity");
  gen_tb->add_option("-o,--output", out_path);
  gen_tb->add_flag("--json", json);
  auto* gen_sum = gen_cmd->add_subcommand("sum", "connected sum of two diagrams");
  gen_sum->add_option("a", file_a)->required();
  gen_sum->add_option("b", file_b)->required();
  gen_sum->add_option("-o,--output", out_path);
  gen_sum->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->add_option("--table", table_path, "table file or directory");
  verify_cmd->add_option("--seed", seed, "greedy-start RNG seed");
  verify_cmd->add_flag("--json", json);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    if (parse_cmd->parsed()) return cmd_parse(file, json, out);
    if (states_cmd->parsed()) return cmd_states(file, stars_text, list, json, out);
    if (lattice_cmd->parsed())
      return cmd_lattice(file, stars_text, format, out_path, out);
    if (clock_cmd->parsed()) return cmd_clocknum(file, stars_text, json, out);
    if (alex_cmd->parsed()) return cmd_alex(file, stars_text, json, out);
    if (gen_tb->parsed())
      return cmd_gen_two_bridge(boxes_text, odd_form, out_path, json, out);
    if (gen_sum->parsed())
      return cmd_gen_sum(file_a, file_b, out_path, json, out);
    if (verify_cmd->parsed())
      return cmd_verify(suite, table_path, seed, json, out);
    err << app.help();
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace knotclock::cli
