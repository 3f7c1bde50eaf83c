#include "trisect/pairmap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "trisect/subdivision.hpp"

namespace trisect {

namespace {

// The two families overlaid form a 4-valent graph on the surface: vertices
// are crossings (plus one 2-valent anchor per crossing-free curve), edges are
// the curve segments in between. Rotations are recorded in the frame of the
// polygon holding the crossing; a segment's twist is the parity of reversing
// gluings it passes. Everything else (which side of a segment a region runs
// along, what the regions look like) rides on cut_along.

struct PairGraph {
  std::vector<std::vector<int>> node_rot;  // node -> darts in rotation order
  std::vector<int> dart_node;
  std::vector<int> dart_other;              // opposite end of the segment
  std::vector<int> dart_fam;                // family of the segment
  std::vector<int> dart_twist;              // twist of the segment

  int add_node(int degree) {
    int id = static_cast<int>(node_rot.size());
    node_rot.emplace_back();
    for (int j = 0; j < degree; ++j) {
      node_rot[id].push_back(static_cast<int>(dart_node.size()));
      dart_node.push_back(id);
    }
    dart_other.resize(dart_node.size(), -1);
    dart_fam.resize(dart_node.size(), -1);
    dart_twist.resize(dart_node.size(), 0);
    return id;
  }

  void add_seg(int tail, int head, int fam, int twist) {
    dart_other[tail] = head;
    dart_other[head] = tail;
    dart_fam[tail] = dart_fam[head] = fam;
    dart_twist[tail] = dart_twist[head] = twist;
  }

  int num_darts() const { return static_cast<int>(dart_node.size()); }
};

struct EncodeOut {
  std::vector<int> enc;
  std::vector<int> dart_num;   // dart -> number within the component, -1 outside
  std::vector<int> node_flip;  // node -> 0/1, meaningful inside the component
};

// Breadth-first serialization from one seed dart with a chosen local
// reflection; tree segments are read with twist 0 (the flip of a newly
// reached node absorbs it), so only the genuine orientation classes remain.
EncodeOut encode_component(const PairGraph& G, int seed, int flip) {
  EncodeOut out;
  out.dart_num.assign(G.num_darts(), -1);
  out.node_flip.assign(G.node_rot.size(), 0);
  std::vector<int> by_num;
  std::vector<int> node_deg;

  auto discover = [&](int node, int entry, int f) {
    out.node_flip[node] = f;
    const auto& rot = G.node_rot[node];
    int deg = static_cast<int>(rot.size());
    int pos = 0;
    while (rot[pos] != entry) ++pos;
    node_deg.push_back(deg);
    for (int i = 0; i < deg; ++i) {
      int d = rot[f ? (pos - i + deg) % deg : (pos + i) % deg];
      out.dart_num[d] = static_cast<int>(by_num.size());
      by_num.push_back(d);
    }
  };

  discover(G.dart_node[seed], seed, flip);
  for (std::size_t i = 0; i < by_num.size(); ++i) {
    int d = by_num[i];
    int o = G.dart_other[d];
    int u = G.dart_node[o];
    if (out.dart_num[o] < 0)
      discover(u, o, out.node_flip[G.dart_node[d]] ^ G.dart_twist[d]);
  }

  out.enc.push_back(static_cast<int>(node_deg.size()));
  out.enc.insert(out.enc.end(), node_deg.begin(), node_deg.end());
  for (int d : by_num) {
    int o = G.dart_other[d];
    out.enc.push_back(out.dart_num[o]);
    out.enc.push_back(G.dart_fam[d]);
    out.enc.push_back(G.dart_twist[d] ^ out.node_flip[G.dart_node[d]] ^
                      out.node_flip[G.dart_node[o]]);
  }
  return out;
}

struct Component {
  std::vector<int> darts;
  std::vector<int> enc;                     // canonical encoding
  std::vector<std::pair<int, int>> seeds;   // (dart, flip) reaching enc
};

struct CircleRec {
  std::vector<std::pair<int, int>> fwd;  // (dart, side) per run, walk order
  std::vector<std::pair<int, int>> rev;  // the same circle walked backwards
  int region = -1;
};

std::vector<int> min_rotation(std::vector<int> v) {
  if (v.empty()) return v;
  std::vector<int> best = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    if (v < best) best = v;
  }
  return best;
}

void append_section(std::string& s, const std::vector<int>& v) {
  s += ';';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
}

}  // namespace

std::string pair_key(const SurfaceComplex& S, std::span<const Curve> A,
                     std::span<const Curve> B) {
  std::vector<Curve> cat(A.begin(), A.end());
  cat.insert(cat.end(), B.begin(), B.end());
  const int na = static_cast<int>(A.size());
  auto fam_of = [&](int ci) { return ci < na ? 0 : 1; };

  std::string key = "P";
  append_section(key, {S.euler_characteristic(), S.orientable() ? 1 : 0,
                       S.boundary_count(), S.connected() ? 1 : 0,
                       static_cast<int>(A.size()), static_cast<int>(B.size())});

  std::vector<std::vector<ChordSpec>> ch(cat.size());
  for (std::size_t ci = 0; ci < cat.size(); ++ci)
    ch[ci] = curve_chords(S, cat[ci]);

  std::vector<CrossingRef> crossings = curve_crossings(S, cat);
  auto chord_events = crossing_order(S, cat, crossings);

  // Nodes and darts. Crossing rotation in the polygon frame: the four ends in
  // the order [A-out, B-out, A-in, B-in] when B enters from the right of A,
  // else [A-out, B-in, A-in, B-out].
  PairGraph G;
  std::vector<std::array<int, 2>> ev_out(crossings.size()),
      ev_in(crossings.size());
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    const auto& cr = crossings[x];
    bool rtl = bpos_between(ch[cr.ci][cr.ka].a, ch[cr.cj][cr.kb].a,
                            ch[cr.ci][cr.ka].b);
    int n = G.add_node(4);
    const auto& rot = G.node_rot[n];
    ev_out[x][0] = rot[0];
    ev_in[x][0] = rot[2];
    ev_out[x][1] = rtl ? rot[1] : rot[3];
    ev_in[x][1] = rtl ? rot[3] : rot[1];
  }

  std::vector<int> dummy_of(cat.size(), -1);
  for (std::size_t ci = 0; ci < cat.size(); ++ci) {
    const auto& pts = cat[ci].pts;
    const int m = static_cast<int>(ch[ci].size());
    // events along the curve in (chord, rank) order
    std::vector<std::pair<int, int>> evs;  // (crossing, leg)
    std::vector<std::pair<int, int>> at;   // (chord, rank)
    for (int k = 0; k < m; ++k)
      for (std::size_t r = 0; r < chord_events[ci][k].size(); ++r) {
        evs.push_back(chord_events[ci][k][r]);
        at.push_back({k, static_cast<int>(r)});
      }
    auto span_twist = [&](int k1, int count) {
      int t = 0;
      for (int i = 1; i <= count; ++i)
        t ^= S.edges[pts[(k1 + i) % m].edge].reversing ? 1 : 0;
      return t;
    };
    if (evs.empty()) {
      int n = G.add_node(2);
      dummy_of[ci] = n;
      // the loop passes every point of the curve exactly once
      G.add_seg(G.node_rot[n][0], G.node_rot[n][1], fam_of(ci),
                span_twist(0, m));
      continue;
    }
    for (std::size_t j = 0; j < evs.size(); ++j) {
      std::size_t j2 = (j + 1) % evs.size();
      int count = (at[j2].first - at[j].first + m) % m;
      if (j2 == 0 && count == 0) count = m;  // wrapped the whole way round
      G.add_seg(ev_out[evs[j].first][evs[j].second],
                ev_in[evs[j2].first][evs[j2].second], fam_of(ci),
                span_twist(at[j].first, count));
    }
  }

  // Complement topology and its boundary circles.
  CutResult cut = cut_along(S, cat);
  std::vector<RegionInfo> regions = complement_regions(S, cat);
  std::vector<int> poly_region(cut.cut.num_polys(), -1);
  for (std::size_t r = 0; r < regions.size(); ++r)
    for (int p : regions[r].polys) poly_region[p] = static_cast<int>(r);

  int chi_sum = 0;
  for (const auto& r : regions) chi_sum += r.chi;
  int v_minus_e = static_cast<int>(G.node_rot.size()) - G.num_darts() / 2;
  if (chi_sum + v_minus_e != S.euler_characteristic())
    throw std::logic_error("pair_key: region accounting broken");

  std::vector<int> region_free(regions.size(), 0);
  std::vector<CircleRec> circles;
  for (const auto& circle : cut.cut.boundary_circles()) {
    int born = 0;
    for (const auto& st : circle) born += cut.edge_src[st.edge].from_curve();
    if (born == 0) {
      region_free[poly_region[circle[0].occ.poly]]++;
      continue;
    }
    if (born != static_cast<int>(circle.size()))
      throw std::logic_error("pair_key: mixed boundary circle");

    CircleRec rec;
    rec.region = poly_region[circle[0].occ.poly];
    const int n = static_cast<int>(circle.size());
    auto src = [&](int i) -> const EdgeSrc& {
      return cut.edge_src[circle[i].edge];
    };
    auto entry_for = [&](int i, bool dirv) -> std::pair<int, int> {
      const EdgeSrc& es = src(i);
      const auto& evl = chord_events[es.curve][es.chord];
      if (dirv) {
        if (es.piece < 1 || es.piece > static_cast<int>(evl.size()))
          throw std::logic_error("pair_key: run begins off a crossing");
        const auto& e = evl[es.piece - 1];
        return {ev_out[e.first][e.second], es.side};
      }
      if (es.piece >= static_cast<int>(evl.size()))
        throw std::logic_error("pair_key: run begins off a crossing");
      const auto& e = evl[es.piece];
      return {ev_in[e.first][e.second], es.side};
    };
    auto walk_dir = [&](int i) {
      const auto& st = circle[i];
      return (st.forward == cut.cut.occ_fwd(st.occ)) != src(i).flipped;
    };

    int start = -1;
    for (int i = 0; i < n && start < 0; ++i)
      if (src(i).curve != src((i + n - 1) % n).curve) start = i;
    if (start < 0) {
      // one crossing-free curve; anchor the single run at its dummy node
      int ci = src(0).curve;
      int side = -1;
      for (int i = 0; i < n; ++i)
        if (src(i).chord == 0 && src(i).piece == 0) side = src(i).side;
      if (dummy_of[ci] < 0 || side < 0)
        throw std::logic_error("pair_key: stray single-curve circle");
      rec.fwd.push_back({G.node_rot[dummy_of[ci]][0], side});
      rec.rev.push_back({G.node_rot[dummy_of[ci]][1], side});
    } else {
      for (int i = 0; i < n; ++i) {
        int idx = (start + i) % n;
        if (src(idx).curve == src((idx + n - 1) % n).curve) continue;
        rec.fwd.push_back(entry_for(idx, walk_dir(idx)));
      }
      for (int i = n - 1; i >= 0; --i) {
        int idx = (start + i) % n;
        if (src(idx).curve == src((idx + 1) % n).curve) continue;
        rec.rev.push_back(entry_for(idx, !walk_dir(idx)));
      }
    }
    circles.push_back(std::move(rec));
  }

  // Components of the crossing graph, each canonicalized over all seeds.
  std::vector<int> comp_of(G.node_rot.size(), -1);
  std::vector<Component> comps;
  for (std::size_t v = 0; v < G.node_rot.size(); ++v) {
    if (comp_of[v] >= 0) continue;
    Component c;
    std::vector<std::size_t> stack{v};
    comp_of[v] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (int d : G.node_rot[u]) {
        c.darts.push_back(d);
        std::size_t w = G.dart_node[G.dart_other[d]];
        if (comp_of[w] < 0) {
          comp_of[w] = static_cast<int>(comps.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(c.darts.begin(), c.darts.end());
    for (int d : c.darts)
      for (int f : {0, 1}) {
        EncodeOut e = encode_component(G, d, f);
        if (c.enc.empty() || e.enc < c.enc) {
          c.enc = e.enc;
          c.seeds = {{d, f}};
        } else if (e.enc == c.enc) {
          c.seeds.push_back({d, f});
        }
      }
    comps.push_back(std::move(c));
  }

  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.enc.size() != b.enc.size()) return a.enc.size() < b.enc.size();
    return a.enc < b.enc;
  });
  for (const auto& c : comps) append_section(key, c.enc);

  // Attach circles and regions: minimize over the leftover symmetry (choice
  // of minimal seed per component, order of identically-encoded components).
  std::vector<int> offset(comps.size() + 1, 0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<int>(comps[i].darts.size());

  long long combos = 1;
  const long long kCap = 200000;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    combos *= static_cast<long long>(comps[i].seeds.size());
    if (combos > kCap) break;
  }
  std::size_t gi = 0;
  while (gi < comps.size() && combos <= kCap) {
    std::size_t gj = gi;
    while (gj < comps.size() && comps[gj].enc == comps[gi].enc) ++gj;
    for (std::size_t s = gi, f = 1; s < gj; ++s) combos *= static_cast<long long>(f++);
    gi = gj;
  }

  std::vector<int> best_tail;
  std::vector<std::size_t> order(comps.size());
  std::vector<std::size_t> seed_pick(comps.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  auto build_tail = [&]() {
    std::vector<int> dart_global(G.num_darts(), -1);
    std::vector<int> flip(G.node_rot.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const Component& c = comps[order[pos]];
      auto [sd, sf] = c.seeds[seed_pick[order[pos]]];
      EncodeOut e = encode_component(G, sd, sf);
      for (int d : c.darts) {
        dart_global[d] = offset[pos] + e.dart_num[d];
        flip[G.dart_node[d]] = e.node_flip[G.dart_node[d]];
      }
    }
    std::vector<std::vector<int>> cserial(circles.size());
    for (std::size_t i = 0; i < circles.size(); ++i) {
      auto flatten = [&](const std::vector<std::pair<int, int>>& runs) {
        std::vector<int> v;
        for (auto [d, side] : runs)
          v.push_back(dart_global[d] * 2 + (side ^ flip[G.dart_node[d]]));
        return min_rotation(std::move(v));
      };
      std::vector<int> f = flatten(circles[i].fwd);
      std::vector<int> r = flatten(circles[i].rev);
      cserial[i] = f < r ? std::move(f) : std::move(r);
    }
    std::vector<std::size_t> ord(circles.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      if (cserial[a].size() != cserial[b].size())
        return cserial[a].size() < cserial[b].size();
      return cserial[a] < cserial[b];
    });
    std::vector<int> region_num(regions.size(), -1);
    std::vector<int> tail;
    int next_region = 0;
    for (std::size_t i : ord) {
      if (region_num[circles[i].region] < 0)
        region_num[circles[i].region] = next_region++;
      tail.push_back(static_cast<int>(cserial[i].size()));
      tail.insert(tail.end(), cserial[i].begin(), cserial[i].end());
      tail.push_back(region_num[circles[i].region]);
    }
    std::vector<std::array<int, 3>> attrs(next_region, {0, 0, 0});
    std::vector<std::array<int, 3>> loose;
    for (std::size_t r = 0; r < regions.size(); ++r) {
      std::array<int, 3> a{regions[r].chi, regions[r].orientable ? 1 : 0,
                           region_free[r]};
      if (region_num[r] >= 0)
        attrs[region_num[r]] = a;
      else
        loose.push_back(a);
    }
    std::sort(loose.begin(), loose.end());
    tail.push_back(-1);
    for (const auto& a : attrs) tail.insert(tail.end(), a.begin(), a.end());
    tail.push_back(-2);
    for (const auto& a : loose) tail.insert(tail.end(), a.begin(), a.end());
    if (best_tail.empty() || tail < best_tail) best_tail = std::move(tail);
  };

  if (combos > kCap) {
    build_tail();  // deterministic fallback: first choice only
  } else {
    // enumerate seed choices and orderings within groups of equal components
    std::vector<std::size_t> group_lo;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (i == 0 || !(comps[i].enc == comps[i - 1].enc)) group_lo.push_back(i);
    group_lo.push_back(comps.size());

    auto enum_seeds = [&](auto&& self, std::size_t ci) -> void {
      if (ci == comps.size()) {
        build_tail();
        return;
      }
      for (std::size_t s = 0; s < comps[ci].seeds.size(); ++s) {
        seed_pick[ci] = s;
        self(self, ci + 1);
      }
    };
    auto enum_groups = [&](auto&& self, std::size_t g) -> void {
      if (g + 1 == group_lo.size()) {
        enum_seeds(enum_seeds, 0);
        return;
      }
      std::size_t lo = group_lo[g], hi = group_lo[g + 1];
      std::sort(order.begin() + lo, order.begin() + hi);
      do {
        self(self, g + 1);
      } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    if (comps.empty())
      build_tail();
    else
      enum_groups(enum_groups, 0);
  }

  append_section(key, best_tail);
  return key;
}

StandardPair standard_pair(int g, int k, bool orientable) {
  if (g < 0 || k < 0 || k > g)
    throw std::invalid_argument("standard_pair: need 0 <= k <= g");
  if (!orientable && (g < 1 || k < 1))
    throw std::invalid_argument("standard_pair: non-orientable needs k >= 1");
  StandardPair sp;
  if (g == 0) {
    sp.surface = SurfaceComplex::build({{"a", "-a"}});
    return sp;
  }
  std::vector<std::string> word;
  for (int i = 0; i < g; ++i) {
    std::string p = "p" + std::to_string(i), q = "q" + std::to_string(i);
    bool klein = !orientable && i < k;
    word.push_back(p);
    word.push_back(q);
    word.push_back(klein ? p : "-" + p);
    word.push_back("-" + q);
  }
  sp.surface = SurfaceComplex::build({word});
  for (int i = 0; i < g; ++i) {
    int q = sp.surface.edge_id("q" + std::to_string(i));
    int p = sp.surface.edge_id("p" + std::to_string(i));
    sp.alpha.push_back({true, {{q, Rat(1, 2), 0}}});
    if (i < k)
      sp.beta.push_back({true, {{q, Rat(1, 4), 0}}});
    else
      sp.beta.push_back({true, {{p, Rat(1, 2), 0}}});
  }
  return sp;
}

std::string standard_pair_key(int g, int k, bool orientable) {
  StandardPair sp = standard_pair(g, k, orientable);
  return pair_key(sp.surface, sp.alpha, sp.beta);
}

}  // namespace trisect
