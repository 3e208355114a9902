#include "knotclock/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotclock {

namespace {

int state_index(const std::vector<State>& states, const State& s) {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || !(*it == s))
    throw InvariantViolation("move target outside the enumerated state set");
  return static_cast<int>(it - states.begin());
}

// Undirected neighbor lists with the move edge per (ordered) pair.
std::vector<std::vector<std::pair<int, EdgeId>>> undirected_adjacency(
    const Lattice& lat) {
  std::vector<std::vector<std::pair<int, EdgeId>>> adj(lat.states.size());
  for (const LatticeArrow& a : lat.arrows) {
    adj[a.from].push_back({a.to, a.edge});
    adj[a.to].push_back({a.from, a.edge});
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::vector<int> bfs_dist(
    const std::vector<std::vector<std::pair<int, EdgeId>>>& adj, int from) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (auto [j, e] : adj[i])
      if (dist[j] < 0) {
        dist[j] = dist[i] + 1;
        q.push_back(j);
      }
  }
  return dist;
}

}  // namespace

Lattice build_lattice(const Universe& u, StarPlacement stars) {
  Lattice lat;
  lat.states = enumerate_states(u, stars);
  if (lat.states.empty())
    throw std::invalid_argument("no states for this star placement");

  std::vector<char> has_cw(lat.states.size(), 0), has_ccw(lat.states.size(), 0);
  for (size_t i = 0; i < lat.states.size(); ++i) {
    for (const ClockMove& m : available_moves(u, lat.states[i])) {
      if (m.direction == MoveDirection::Clockwise) {
        has_cw[i] = 1;
        int j = state_index(lat.states, apply_move(u, lat.states[i], m));
        lat.arrows.push_back({static_cast<int>(i), j, m.edge});
      } else {
        has_ccw[i] = 1;
      }
    }
  }

  for (size_t i = 0; i < lat.states.size(); ++i) {
    if (!has_ccw[i]) {
      if (lat.clocked_index >= 0)
        throw InvariantViolation("two clocked states in one lattice");
      lat.clocked_index = static_cast<int>(i);
    }
    if (!has_cw[i]) {
      if (lat.counterclocked_index >= 0)
        throw InvariantViolation("two counterclocked states in one lattice");
      lat.counterclocked_index = static_cast<int>(i);
    }
  }
  if (lat.clocked_index < 0 || lat.counterclocked_index < 0)
    throw InvariantViolation("lattice lacks a clocked or counterclocked state");

  // Clockwise closure from the clocked state must cover every state.
  {
    std::vector<std::vector<int>> down(lat.states.size());
    for (const LatticeArrow& a : lat.arrows) down[a.from].push_back(a.to);
    std::vector<int> dist(lat.states.size(), -1);
    std::deque<int> q{lat.clocked_index};
    dist[lat.clocked_index] = 0;
    size_t reached = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : down[i])
        if (dist[j] < 0) {
          dist[j] = dist[i] + 1;
          ++reached;
          q.push_back(j);
        }
    }
    if (reached != lat.states.size())
      throw InvariantViolation("clockwise closure misses states");
    lat.directed_height = 1 + dist[lat.counterclocked_index];
  }

  auto adj = undirected_adjacency(lat);
  lat.height = 1 + bfs_dist(adj, lat.clocked_index)[lat.counterclocked_index];
  return lat;
}

std::vector<ClockMove> minimal_path(const Universe& u, const Lattice& lat) {
  auto adj = undirected_adjacency(lat);
  auto dist = bfs_dist(adj, lat.clocked_index);

  // Walk back from the sink picking the lowest-index predecessor.
  std::vector<int> nodes{lat.counterclocked_index};
  while (nodes.back() != lat.clocked_index) {
    int cur = nodes.back();
    int best = -1;
    for (auto [j, e] : adj[cur])
      if (dist[j] == dist[cur] - 1 && (best < 0 || j < best)) best = j;
    nodes.push_back(best);
  }
  std::reverse(nodes.begin(), nodes.end());

  std::vector<ClockMove> path;
  for (size_t k = 0; k + 1 < nodes.size(); ++k) {
    const State& from = lat.states[nodes[k]];
    const State& to = lat.states[nodes[k + 1]];
    bool found = false;
    for (const ClockMove& m : available_moves(u, from))
      if (apply_move(u, from, m) == to) {
        path.push_back(m);
        found = true;
        break;
      }
    if (!found) throw InvariantViolation("adjacent lattice states lack a move");
  }
  return path;
}

std::vector<int> path_move_counts(const Universe& u, const Lattice&,
                                  const std::vector<ClockMove>& path) {
  std::vector<int> counts(u.vertex_count(), 0);
  for (const ClockMove& m : path) {
    ++counts[m.u];
    ++counts[m.v];
  }
  return counts;
}

std::vector<int> min_move_counts(const Universe& u, const Lattice& lat) {
  auto adj = undirected_adjacency(lat);
  auto ds = bfs_dist(adj, lat.clocked_index);
  auto dt = bfs_dist(adj, lat.counterclocked_index);
  const int D = ds[lat.counterclocked_index];

  // States sorted by distance from the source give a topological order of
  // the shortest-path DAG.
  std::vector<int> order(lat.states.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ds[a] < ds[b]; });

  std::vector<int> result(u.vertex_count(), 0);
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    std::vector<int> cost(lat.states.size(), -1);
    cost[lat.clocked_index] = 0;
    for (int b : order) {
      if (ds[b] + dt[b] != D || b == lat.clocked_index) continue;
      for (auto [a, e] : adj[b]) {
        if (ds[a] != ds[b] - 1 || ds[a] + dt[a] != D || cost[a] < 0) continue;
        // The move between adjacent states rotates exactly the markers
        // whose slots differ; the recorded edge only names one sweep.
        int touches = lat.states[a].slot[v] != lat.states[b].slot[v];
        int step = cost[a] + touches;
        if (cost[b] < 0 || step < cost[b]) cost[b] = step;
      }
    }
    result[v] = cost[lat.counterclocked_index];
  }
  return result;
}

std::string export_lattice(const Lattice& lat, const std::string& format) {
  if (format == "dot") {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=TB;\n";
    os << "  { rank=min; s" << lat.clocked_index << "; }\n";
    if (lat.counterclocked_index != lat.clocked_index)
      os << "  { rank=max; s" << lat.counterclocked_index << "; }\n";
    for (size_t i = 0; i < lat.states.size(); ++i)
      os << "  s" << i << " [label=\"" << to_string(lat.states[i]) << "\"];\n";
    for (const LatticeArrow& a : lat.arrows)
      os << "  s" << a.from << " -> s" << a.to << " [label=\"e" << a.edge + 1
         << "\"];\n";
    os << "}\n";
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["states"] = nlohmann::ordered_json::array();
    for (const State& s : lat.states) j["states"].push_back(s.slot);
    j["arrows"] = nlohmann::ordered_json::array();
    for (const LatticeArrow& a : lat.arrows)
      j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"edge", a.edge}});
    j["clocked"] = lat.clocked_index;
    j["counterclocked"] = lat.counterclocked_index;
    j["height"] = lat.height;
    j["directed_height"] = lat.directed_height;
    return j.dump(2) + "\n";
  }
  throw std::invalid_argument("unknown lattice format '" + format + "'");
}

Lattice lattice_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    Lattice lat;
    for (const auto& s : j.at("states")) {
      State st;
      st.slot = s.get<std::vector<int>>();
      lat.states.push_back(std::move(st));
    }
    for (const auto& a : j.at("arrows"))
      lat.arrows.push_back({a.at("from").get<int>(), a.at("to").get<int>(),
                            a.at("edge").get<EdgeId>()});
    lat.clocked_index = j.at("clocked").get<int>();
    lat.counterclocked_index = j.at("counterclocked").get<int>();
    lat.height = j.at("height").get<int>();
    lat.directed_height = j.at("directed_height").get<int>();
    return lat;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad lattice json: ") + e.what());
  }
}

}  // namespace knotclock
