#pragma once

// Combinatorial genus-2 Heegaard diagrams. A rank-2 cyclic word is realized
// as a simple closed curve on the boundary of a genus-2 handlebody by
// drawing its arcs in the 4-holed sphere obtained from cutting along the two
// disk boundaries. Circles x+, x-, y+, y- carry the arc endpoints; the g-
// circle order is the mirror of the g+ order, so strands are parallel inside
// each handle. Planarity is certified by tracing complementary regions.

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mlift/word.hpp"

namespace mlift {

struct Presentation {
  std::string name;
  CyclicWord relator;  // rank 2
  std::optional<Word> meridian;
  std::optional<Word> longitude;
};

// circles indexed 0..3: x+ x- y+ y-
inline int circle_of(int gen, bool plus) { return 2 * gen + (plus ? 0 : 1); }
inline int entry_circle(const Letter& l) { return circle_of(l.gen, l.sign > 0); }
inline int exit_circle(const Letter& l) { return circle_of(l.gen, l.sign < 0); }

// one arc endpoint: edge i runs from the exit of crossing i (end 0) to the
// entry of crossing i+1 (end 1)
struct EndpointRef {
  int edge = 0;
  int end = 0;
  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
  friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

using CircleLists = std::array<std::vector<EndpointRef>, 4>;

struct PlanarDiagram {
  CyclicWord relator;
  CircleLists circles;  // cyclic endpoint orders, stored counterclockwise
};

// the circle each endpoint of edge i must lie on, read from the word
inline int expected_circle(const CyclicWord& w, const EndpointRef& p) {
  std::size_t n = w.size();
  if (p.end == 0) return exit_circle(w[p.edge % n]);
  return entry_circle(w[(p.edge + 1) % n]);
}

// mirror partner of an endpoint: the other end of the same crossing strand.
// Crossing i has entry (edge i-1, end 1) and exit (edge i, end 0).
inline EndpointRef partner(int n_edges, const EndpointRef& p) {
  if (p.end == 0) return EndpointRef{(p.edge + n_edges - 1) % n_edges, 1};
  return EndpointRef{(p.edge + 1) % n_edges, 0};
}

// --- region tracing ---------------------------------------------------------

// Boundary item of a traced region: either a directed arc (edge, to_end),
// traversed with the region on the left, or gap j of a circle (the circle
// segment from endpoint j to endpoint j+1 in stored order).
struct RegionItem {
  enum Kind { Arc, Gap };
  Kind kind;
  int circle;  // Gap only
  int index;   // gap index, or directed-arc id 2*edge + to_end
};

struct FaceStructure {
  std::vector<int> region_of_darc;              // region left of directed arc
  std::vector<std::vector<int>> region_of_gap;  // per circle, per gap
  std::vector<std::vector<RegionItem>> regions;
  int region_count = 0;
};

namespace detail {

inline std::map<EndpointRef, std::pair<int, int>> slot_map(const CircleLists& c) {
  std::map<EndpointRef, std::pair<int, int>> where;
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < c[k].size(); ++i)
      where[c[k][i]] = {k, static_cast<int>(i)};
  return where;
}

}  // namespace detail

// Traces the complementary regions of a complete arc system (every directed
// arc id below 2*n_edges has its endpoint somewhere in the circle lists).
// Walk rule: arrive at a slot with the region on the left, continue
// clockwise through the adjacent gap, leave along the arc at the next slot.
inline FaceStructure trace_faces(const CircleLists& circles, int n_edges) {
  auto where = detail::slot_map(circles);
  FaceStructure fs;
  fs.region_of_darc.assign(2 * n_edges, -1);
  for (int k = 0; k < 4; ++k)
    fs.region_of_gap.emplace_back(circles[k].size(), -1);

  for (int start = 0; start < 2 * n_edges; ++start) {
    if (fs.region_of_darc[start] >= 0) continue;
    int region = fs.region_count++;
    fs.regions.emplace_back();
    int cur = start;
    do {
      fs.region_of_darc[cur] = region;
      fs.regions[region].push_back(RegionItem{RegionItem::Arc, -1, cur});
      EndpointRef arrive{cur / 2, cur % 2};
      auto [circle, slot] = where.at(arrive);
      int m = static_cast<int>(circles[circle].size());
      int prev = (slot + m - 1) % m;
      fs.regions[region].push_back(RegionItem{RegionItem::Gap, circle, prev});
      fs.region_of_gap[circle][prev] = region;
      EndpointRef depart = circles[circle][prev];
      cur = 2 * depart.edge + (1 - depart.end);
    } while (cur != start);
  }
  return fs;
}

// Sum of 2*genus over the connected components of the system; zero iff the
// arcs embed in the 4-holed sphere with the given cyclic orders.
inline int planar_defect(const CircleLists& circles, const FaceStructure& fs,
                         int n_edges) {
  auto where = detail::slot_map(circles);
  std::vector<int> comp(4, -1);
  int ncomp = 0;
  for (int k = 0; k < 4; ++k) {
    if (circles[k].empty() || comp[k] >= 0) continue;
    std::vector<int> stack{k};
    comp[k] = ncomp;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (const EndpointRef& p : circles[c]) {
        auto it = where.find(EndpointRef{p.edge, 1 - p.end});
        if (it == where.end()) continue;
        int k2 = it->second.first;
        if (comp[k2] < 0) {
          comp[k2] = ncomp;
          stack.push_back(k2);
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> verts(ncomp, 0), edges(ncomp, 0);
  std::vector<std::set<int>> comp_regions(ncomp);
  for (int k = 0; k < 4; ++k)
    if (!circles[k].empty()) verts[comp[k]]++;
  for (int d = 0; d < 2 * n_edges; ++d) {
    auto [c, s] = where.at(EndpointRef{d / 2, d % 2});
    if (d % 2 == 0) edges[comp[c]]++;
    comp_regions[comp[c]].insert(fs.region_of_darc[d]);
  }
  int defect = 0;
  for (int i = 0; i < ncomp; ++i)
    defect += edges[i] - verts[i] + 2 - static_cast<int>(comp_regions[i].size());
  return defect;
}

inline bool validate(const PlanarDiagram& d) {
  const CyclicWord& w = d.relator;
  int n = static_cast<int>(w.size());
  if (n == 0) return false;
  std::set<EndpointRef> seen;
  for (int k = 0; k < 4; ++k) {
    for (const EndpointRef& p : d.circles[k]) {
      if (p.edge < 0 || p.edge >= n) return false;
      if (p.end != 0 && p.end != 1) return false;
      if (!seen.insert(p).second) return false;
      if (expected_circle(w, p) != k) return false;
    }
  }
  if (static_cast<int>(seen.size()) != 2 * n) return false;
  // handle consistency: g- order is the reversed partner of the g+ order
  for (int gen = 0; gen < 2; ++gen) {
    const auto& plus = d.circles[circle_of(gen, true)];
    const auto& minus = d.circles[circle_of(gen, false)];
    if (plus.size() != minus.size()) return false;
    std::size_t m = plus.size();
    for (std::size_t i = 0; i < m; ++i)
      if (partner(n, plus[i]) != minus[m - 1 - i]) return false;
  }
  FaceStructure fs = trace_faces(d.circles, n);
  return planar_defect(d.circles, fs, n) == 0;
}

// --- realization search -----------------------------------------------------

namespace detail {

struct RealizeState {
  const CyclicWord& w;
  CircleLists& circles;
  int n;
  long long nodes = 0;

  RealizeState(const CyclicWord& w_, CircleLists& c)
      : w(w_), circles(c), n(static_cast<int>(w_.size())) {}

  // planarity of the arcs fully placed so far; free endpoints are invisible
  bool partial_planar(int placed_edges) const {
    if (placed_edges == 0) return true;
    CircleLists sub;
    for (int k = 0; k < 4; ++k)
      for (const EndpointRef& p : circles[k])
        if (p.edge < placed_edges) sub[k].push_back(p);
    FaceStructure fs = trace_faces(sub, placed_edges);
    return planar_defect(sub, fs, placed_edges) == 0;
  }

  // insert endpoint p at gap position pos of its circle, and its strand
  // partner at the mirrored position of the paired circle
  void insert_pair(const EndpointRef& p, int circle, int pos) {
    auto& lst = circles[circle];
    lst.insert(lst.begin() + pos, p);
    auto& mlst = circles[circle ^ 1];
    int mpos = static_cast<int>(mlst.size()) - pos;
    mlst.insert(mlst.begin() + mpos, partner(n, p));
  }

  void erase_pair(const EndpointRef& p, int circle) {
    auto& lst = circles[circle];
    lst.erase(std::find(lst.begin(), lst.end(), p));
    auto& mlst = circles[circle ^ 1];
    EndpointRef q = partner(n, p);
    mlst.erase(std::find(mlst.begin(), mlst.end(), q));
  }

  // edges are laid down in relator order; edge n-1 closes the curve onto
  // the entry of crossing 0 and only needs the final planarity check
  bool place(int edge) {
    ++nodes;
    if (edge == n - 1) return partial_planar(n);
    EndpointRef p{edge, 1};
    int circle = expected_circle(w, p);
    int slots = std::max<int>(1, static_cast<int>(circles[circle].size()) + 1);
    for (int pos = 0; pos < slots; ++pos) {
      insert_pair(p, circle, pos);
      if (partial_planar(edge + 1) && place(edge + 1)) return true;
      erase_pair(p, circle);
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<PlanarDiagram> realize(const CyclicWord& relator) {
  check_rank(relator.letters(), 2, "realize");
  if (relator.empty()) return std::nullopt;
  PlanarDiagram d;
  d.relator = relator;
  int n = static_cast<int>(relator.size());
  detail::RealizeState st(relator, d.circles);
  // crossing 0 seeds the diagram: its entry point and mirrored exit
  EndpointRef first_entry{n - 1, 1};
  st.insert_pair(first_entry, expected_circle(relator, first_entry), 0);
  if (!st.place(0)) return std::nullopt;
  assert(validate(d));
  return d;
}

// --- serialization ----------------------------------------------------------

inline std::string serialize(const PlanarDiagram& d) {
  static const char* names[4] = {"x+", "x-", "y+", "y-"};
  std::ostringstream os;
  os << "relator " << to_string(d.relator, 2) << "\n";
  for (int k = 0; k < 4; ++k) {
    os << names[k];
    for (const EndpointRef& p : d.circles[k]) os << " " << p.edge << ":" << p.end;
    os << "\n";
  }
  return os.str();
}

inline PlanarDiagram parse_diagram(const std::string& text) {
  std::istringstream is(text);
  std::string tag, word;
  if (!(is >> tag >> word) || tag != "relator")
    throw std::invalid_argument("parse_diagram: missing relator line");
  PlanarDiagram d;
  d.relator = parse_cyclic(word, 2);
  static const char* names[4] = {"x+", "x-", "y+", "y-"};
  std::string line;
  std::getline(is, line);
  for (int k = 0; k < 4; ++k) {
    if (!std::getline(is, line))
      throw std::invalid_argument("parse_diagram: missing circle line");
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    if (name != names[k])
      throw std::invalid_argument("parse_diagram: bad circle label");
    std::string entry;
    while (ls >> entry) {
      auto colon = entry.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("parse_diagram: bad endpoint entry");
      d.circles[k].push_back(EndpointRef{std::stoi(entry.substr(0, colon)),
                                         std::stoi(entry.substr(colon + 1))});
    }
  }
  return d;
}

// --- homology of carried curves ---------------------------------------------

// Symplectic coordinates on H1 of the splitting surface: a-part on the disk
// boundary classes, b-part on the dual curve classes, indexed by generator.
struct SymplecticClass {
  int genus = 0;
  AbelianVector a;
  AbelianVector b;

  friend bool operator==(const SymplecticClass&, const SymplecticClass&) = default;

  bool is_zero() const {
    for (long long v : a)
      if (v) return false;
    for (long long v : b)
      if (v) return false;
    return true;
  }
};

inline long long symplectic_pairing(const SymplecticClass& u,
                                    const SymplecticClass& v) {
  if (u.genus != v.genus)
    throw std::invalid_argument("symplectic_pairing: genus mismatch");
  long long s = 0;
  for (int i = 0; i < u.genus; ++i) s += u.a[i] * v.b[i] - v.a[i] * u.b[i];
  return s;
}

// A crossing of a routed dual curve with the relator curve: the directed
// route step passes the given edge, leaving the left face of the directed
// arc when `from_left` holds.
struct RouteCrossing {
  int edge = 0;
  bool from_left = false;
  int sign() const { return from_left ? -1 : 1; }
};

// The dual curve of generator g enters the g+ circle at the wrap gap (between
// the stored last and first endpoints), runs parallel to the strands through
// the handle, and returns through the complementary regions along the first
// face path found by breadth-first search. Route steps cross relator arcs
// only; the crossing record keeps the arc so cover computations can
// distribute contributions over levels.
struct DualRoute {
  int gen = 0;
  std::vector<RouteCrossing> crossings;
  std::vector<int> faces;  // visited regions, start to finish
};

// A disconnected arc system leaves the nesting of its components in the
// 4-holed sphere unspecified; the canonical embedding places all components
// side by side in one ambient region. One exposed orbit per component (the
// one left of its least directed arc) is merged into that ambient region,
// whose boundary is read as the concatenation of the exposed orbit walks.
struct MergedFaces {
  int count = 0;
  std::vector<int> of_orbit;                     // orbit -> merged region
  std::vector<std::vector<RegionItem>> boundary;  // per merged region
};

namespace detail {

inline std::vector<int> circle_components(const CircleLists& circles) {
  auto where = slot_map(circles);
  std::vector<int> comp(4, -1);
  int ncomp = 0;
  for (int k = 0; k < 4; ++k) {
    if (circles[k].empty() || comp[k] >= 0) continue;
    std::vector<int> stack{k};
    comp[k] = ncomp;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (const EndpointRef& p : circles[c]) {
        auto it = where.find(EndpointRef{p.edge, 1 - p.end});
        if (it == where.end()) continue;
        int k2 = it->second.first;
        if (comp[k2] < 0) {
          comp[k2] = ncomp;
          stack.push_back(k2);
        }
      }
    }
    ++ncomp;
  }
  return comp;
}

}  // namespace detail

inline MergedFaces merge_faces(const CircleLists& circles,
                               const FaceStructure& fs, int n_edges) {
  auto where = detail::slot_map(circles);
  std::vector<int> circle_comp = detail::circle_components(circles);
  int ncomp = 0;
  for (int k = 0; k < 4; ++k) ncomp = std::max(ncomp, circle_comp[k] + 1);

  // exposed orbit of each component: left of its least directed arc
  std::vector<int> exposed(ncomp, -1);
  std::vector<int> orbit_comp(fs.region_count, -1);
  for (int d = 0; d < 2 * n_edges; ++d) {
    int comp = circle_comp[where.at(EndpointRef{d / 2, d % 2}).first];
    orbit_comp[fs.region_of_darc[d]] = comp;
    if (exposed[comp] < 0) exposed[comp] = fs.region_of_darc[d];
  }

  MergedFaces mf;
  mf.of_orbit.assign(fs.region_count, -1);
  int ambient = -1;
  for (int r = 0; r < fs.region_count; ++r) {
    bool is_exposed = exposed[orbit_comp[r]] == r;
    if (is_exposed) {
      if (ambient < 0) ambient = mf.count++;
      mf.of_orbit[r] = ambient;
    } else {
      mf.of_orbit[r] = mf.count++;
    }
  }
  mf.boundary.assign(mf.count, {});
  auto item_key = [](const RegionItem& it) {
    return std::tuple<int, int, int>(it.kind, it.circle, it.index);
  };
  for (int comp = 0; comp < ncomp; ++comp) {
    // rotate each exposed walk to start at its least item, concatenate in
    // component order
    const auto& walk = fs.regions[exposed[comp]];
    std::size_t start = 0;
    for (std::size_t i = 1; i < walk.size(); ++i)
      if (item_key(walk[i]) < item_key(walk[start])) start = i;
    auto& out = mf.boundary[mf.of_orbit[exposed[comp]]];
    for (std::size_t i = 0; i < walk.size(); ++i)
      out.push_back(walk[(start + i) % walk.size()]);
  }
  for (int r = 0; r < fs.region_count; ++r)
    if (exposed[orbit_comp[r]] != r) mf.boundary[mf.of_orbit[r]] = fs.regions[r];
  return mf;
}

namespace detail {

inline int wrap_gap_region(const FaceStructure& fs, const MergedFaces& mf,
                           const CircleLists& circles, int circle) {
  std::size_t m = circles[circle].size();
  return mf.of_orbit[fs.region_of_gap[circle][m - 1]];
}

}  // namespace detail

// route for the dual of generator gen, or nullopt when the handle is unused
// (then the dual closes up away from the diagram and crosses nothing).
// Face ids in the route are merged-region ids.
inline std::optional<DualRoute> route_dual(const PlanarDiagram& d,
                                           const FaceStructure& fs,
                                           const MergedFaces& mf, int gen) {
  int n = static_cast<int>(d.relator.size());
  int cplus = circle_of(gen, true), cminus = circle_of(gen, false);
  if (d.circles[cplus].empty()) return std::nullopt;
  int from = detail::wrap_gap_region(fs, mf, d.circles, cminus);
  int to = detail::wrap_gap_region(fs, mf, d.circles, cplus);
  DualRoute route;
  route.gen = gen;
  if (from == to) {
    route.faces = {from};
    return route;
  }
  // BFS over merged regions, stepping across arcs; deterministic by arc id
  // order. Forward traversal of edge e (toward end 1) has region
  // region_of_darc[2e+1] on its left and region_of_darc[2e] on its right.
  std::vector<int> parent_region(mf.count, -1);
  std::vector<char> parent_from_left(mf.count, 0);
  std::vector<int> parent_edge(mf.count, -1);
  std::vector<int> queue{from};
  parent_region[from] = from;
  for (std::size_t qi = 0; qi < queue.size() && parent_region[to] < 0; ++qi) {
    int r = queue[qi];
    for (int e = 0; e < n; ++e) {
      int left = mf.of_orbit[fs.region_of_darc[2 * e + 1]];
      int right = mf.of_orbit[fs.region_of_darc[2 * e + 0]];
      if (left == right) continue;
      int other = (left == r) ? right : (right == r) ? left : -1;
      if (other < 0 || parent_region[other] >= 0) continue;
      parent_region[other] = r;
      parent_edge[other] = e;
      parent_from_left[other] = (left == r);
      queue.push_back(other);
    }
  }
  if (parent_region[to] < 0)
    throw std::logic_error("route_dual: face graph disconnected");
  std::vector<int> faces;
  std::vector<RouteCrossing> rev;
  int cur = to;
  while (cur != from) {
    faces.push_back(cur);
    rev.push_back(RouteCrossing{parent_edge[cur], parent_from_left[cur] != 0});
    cur = parent_region[cur];
  }
  faces.push_back(from);
  route.faces.assign(faces.rbegin(), faces.rend());
  route.crossings.assign(rev.rbegin(), rev.rend());
  return route;
}

// --- dual curve classes and the symplectic coordinates -----------------------

namespace detail {

// a point on a region boundary walk, ordered by walk position then by the
// position along a shared edge (1 or 3 when both routes cross it, else 2)
struct Port {
  int item = -1;
  int sub = 2;
  friend auto operator<=>(const Port&, const Port&) = default;
  friend bool operator==(const Port&, const Port&) = default;
};

struct Chord {
  Port from, to;
};

inline int find_region_item(const MergedFaces& mf, int region,
                            RegionItem::Kind kind, int circle, int index) {
  const auto& walk = mf.boundary[region];
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i].kind != kind) continue;
    if (kind == RegionItem::Arc && walk[i].index == index)
      return static_cast<int>(i);
    if (kind == RegionItem::Gap && walk[i].circle == circle &&
        walk[i].index == index)
      return static_cast<int>(i);
  }
  throw std::logic_error("find_region_item: item not on region boundary");
}

// chords of a route, one per visited region, keyed by merged region id
inline std::map<int, Chord> route_chords(const PlanarDiagram& d,
                                         const MergedFaces& mf,
                                         const DualRoute& r,
                                         const std::set<int>& shared_edges,
                                         int route_sub) {
  std::map<int, Chord> out;
  int cminus = circle_of(r.gen, false), cplus = circle_of(r.gen, true);
  auto gap_port = [&](int region, int circle) {
    int m = static_cast<int>(d.circles[circle].size());
    return Port{find_region_item(mf, region, RegionItem::Gap, circle, m - 1), 2};
  };
  auto arc_port = [&](int region, const RouteCrossing& x, bool entering) {
    // side of the edge facing this region: entering from_left lands on the
    // right side (backward darc); leaving from_left departs the left side
    bool left_side = entering ? !x.from_left : x.from_left;
    int darc = 2 * x.edge + (left_side ? 1 : 0);
    int item = find_region_item(mf, region, RegionItem::Arc, -1, darc);
    int sub = 2;
    if (shared_edges.count(x.edge)) sub = left_side ? route_sub : 4 - route_sub;
    return Port{item, sub};
  };
  std::size_t t = r.crossings.size();
  for (std::size_t i = 0; i + 1 <= t; ++i) {
    // region faces[i]: entered via crossing i-1 (or the start gap), left via
    // crossing i
    Port a = (i == 0) ? gap_port(r.faces[0], cminus)
                      : arc_port(r.faces[i], r.crossings[i - 1], true);
    Port b = arc_port(r.faces[i], r.crossings[i], false);
    out[r.faces[i]] = Chord{a, b};
  }
  Port a = t == 0 ? gap_port(r.faces[t], cminus)
                  : arc_port(r.faces[t], r.crossings[t - 1], true);
  Port b = gap_port(r.faces[t], cplus);
  out[r.faces[t]] = Chord{a, b};
  return out;
}

// signed crossing of two directed chords in a disk region whose boundary
// walk is counterclockwise: order (a1 a2 b1 b2) gives +1, (a1 b2 b1 a2) -1
inline int chord_crossing_sign(const Chord& c1, const Chord& c2) {
  std::array<std::pair<Port, int>, 4> pts{{{c1.from, 0}, {c1.to, 1},
                                           {c2.from, 2}, {c2.to, 3}}};
  std::sort(pts.begin(), pts.end(),
            [](const auto& u, const auto& v) { return u.first < v.first; });
  int start = -1;
  for (int i = 0; i < 4; ++i)
    if (pts[i].second == 0) start = i;
  std::array<int, 3> rest;
  for (int i = 0; i < 3; ++i) rest[i] = pts[(start + 1 + i) % 4].second;
  if (rest == std::array<int, 3>{2, 1, 3}) return 1;   // a1 a2 b1 b2
  if (rest == std::array<int, 3>{3, 1, 2}) return -1;  // a1 b2 b1 a2
  return 0;
}

}  // namespace detail

// Everything needed to read off homology classes of curves carried by the
// diagram. The dual basis classes are the routed duals, with the x-dual
// sheared by -sigma * [dD_y] so the basis is symplectic.
struct DiagramHomology {
  PlanarDiagram diagram;
  FaceStructure fs;
  MergedFaces mf;
  std::optional<DualRoute> route_x, route_y;
  long long sigma = 0;  // crossing number of the two routed duals
};

inline DiagramHomology make_homology(const PlanarDiagram& d) {
  DiagramHomology h;
  h.diagram = d;
  int n = static_cast<int>(d.relator.size());
  h.fs = trace_faces(d.circles, n);
  h.mf = merge_faces(d.circles, h.fs, n);
  h.route_x = route_dual(d, h.fs, h.mf, 0);
  h.route_y = route_dual(d, h.fs, h.mf, 1);
  if (h.route_x && h.route_y) {
    std::set<int> ex, shared;
    for (const RouteCrossing& c : h.route_x->crossings) ex.insert(c.edge);
    for (const RouteCrossing& c : h.route_y->crossings)
      if (ex.count(c.edge)) shared.insert(c.edge);
    auto cx = detail::route_chords(d, h.mf, *h.route_x, shared, 1);
    auto cy = detail::route_chords(d, h.mf, *h.route_y, shared, 3);
    for (const auto& [region, chord1] : cx) {
      auto it = cy.find(region);
      if (it != cy.end())
        h.sigma += detail::chord_crossing_sign(chord1, it->second);
    }
  }
  return h;
}

struct CurveRef {
  enum Kind { Relator, Dual, DiskBoundary };
  Kind kind = Relator;
  int gen = 0;  // for Dual and DiskBoundary

  static CurveRef relator() { return CurveRef{Relator, 0}; }
  static CurveRef dual(int g) { return CurveRef{Dual, g}; }
  static CurveRef disk(int g) { return CurveRef{DiskBoundary, g}; }
};

inline SymplecticClass curve_class(const DiagramHomology& h, CurveRef c) {
  SymplecticClass cls;
  cls.genus = 2;
  cls.a.assign(2, 0);
  cls.b.assign(2, 0);
  switch (c.kind) {
    case CurveRef::DiskBoundary:
      cls.a[c.gen] = 1;
      return cls;
    case CurveRef::Dual:
      cls.b[c.gen] = 1;
      if (c.gen == 0) cls.a[1] = h.sigma;
      return cls;
    case CurveRef::Relator:
      break;
  }
  cls.b = abelianize(h.diagram.relator, 2);
  long long raw_x = 0, raw_y = 0;
  if (h.route_x)
    for (const RouteCrossing& x : h.route_x->crossings) raw_x += x.sign();
  if (h.route_y)
    for (const RouteCrossing& x : h.route_y->crossings) raw_y += x.sign();
  cls.a[0] = raw_x + h.sigma * cls.b[1];
  cls.a[1] = raw_y;
  return cls;
}

inline bool is_nonseparating(const PlanarDiagram& d) {
  DiagramHomology h = make_homology(d);
  return !curve_class(h, CurveRef::relator()).is_zero();
}

}  // namespace mlift
