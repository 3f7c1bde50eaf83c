#include "trisect/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace trisect {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { for (int i = 0; i < n; ++i) parent[i] = i; }
  int find(int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

SurfaceComplex SurfaceComplex::build(const std::vector<std::vector<std::string>>& words) {
  std::vector<std::vector<SideRef>> polys;
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  for (const auto& w : words) {
    std::vector<SideRef> poly;
    for (const auto& tok : w) {
      if (tok.empty()) throw std::runtime_error("surface: empty edge label");
      int sign = +1;
      std::string name = tok;
      if (tok[0] == '-') { sign = -1; name = tok.substr(1); }
      if (name.empty()) throw std::runtime_error("surface: empty edge label");
      auto it = ids.find(name);
      int id;
      if (it == ids.end()) {
        id = static_cast<int>(names.size());
        ids.emplace(name, id);
        names.push_back(name);
      } else {
        id = it->second;
      }
      poly.push_back(SideRef{id, sign});
    }
    polys.push_back(std::move(poly));
  }
  return from_structure(std::move(polys), std::move(names));
}

SurfaceComplex SurfaceComplex::from_structure(std::vector<std::vector<SideRef>> polys,
                                              std::vector<std::string> edge_names) {
  SurfaceComplex s;
  s.polys = std::move(polys);
  s.edges.assign(edge_names.size(), EdgeInfo{});
  {
    std::map<std::string, int> seen;
    for (size_t e = 0; e < edge_names.size(); ++e)
      if (!seen.emplace(edge_names[e], 1).second)
        throw std::runtime_error("surface: duplicate edge name '" + edge_names[e] + "'");
  }
  for (size_t e = 0; e < edge_names.size(); ++e) s.edges[e].name = edge_names[e];
  for (int p = 0; p < s.num_polys(); ++p) {
    if (s.polys[p].empty()) throw std::runtime_error("surface: empty polygon");
    for (int i = 0; i < s.sides(p); ++i) {
      const SideRef& sr = s.polys[p][i];
      if (sr.edge < 0 || sr.edge >= s.num_edges())
        throw std::runtime_error("surface: bad edge id");
      EdgeInfo& e = s.edges[sr.edge];
      if (e.nocc == 2)
        throw std::runtime_error("surface: edge '" + e.name + "' used more than twice");
      e.occ[e.nocc++] = Occ{p, i};
    }
  }
  for (auto& e : s.edges) {
    if (e.nocc == 0) throw std::runtime_error("surface: unused edge '" + e.name + "'");
    if (e.nocc == 2) {
      int s0 = s.polys[e.occ[0].poly][e.occ[0].side].sign;
      int s1 = s.polys[e.occ[1].poly][e.occ[1].side].sign;
      e.reversing = (s0 == s1);
    }
  }
  s.derive();
  return s;
}

int SurfaceComplex::edge_id(const std::string& name) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edges[e].name == name) return e;
  return -1;
}

int SurfaceComplex::occ_index(const Occ& o) const {
  const EdgeInfo& e = edges[polys[o.poly][o.side].edge];
  return (e.occ[0] == o) ? 0 : 1;
}

Occ SurfaceComplex::partner(const Occ& o) const {
  const EdgeInfo& e = edges[polys[o.poly][o.side].edge];
  return e.occ[occ_index(o) ^ 1];
}

bool SurfaceComplex::occ_fwd(const Occ& o) const {
  const EdgeInfo& e = edges[polys[o.poly][o.side].edge];
  int ref_sign = polys[e.occ[0].poly][e.occ[0].side].sign;
  return polys[o.poly][o.side].sign == ref_sign;
}

void SurfaceComplex::derive() {
  int ncorners = 0;
  corner_class_.assign(polys.size(), {});
  std::vector<int> base(polys.size(), 0);
  for (size_t p = 0; p < polys.size(); ++p) {
    base[p] = ncorners;
    corner_class_[p].assign(polys[p].size(), -1);
    ncorners += static_cast<int>(polys[p].size());
  }
  auto corner = [&](int p, int c) { return base[p] + (c % static_cast<int>(polys[p].size())); };

  // vertex classes: identify edge endpoints matching under the gluings
  UnionFind uf(ncorners);
  for (const auto& e : edges) {
    if (e.nocc != 2) continue;
    // tail/head along the edge's own label direction
    auto ends = [&](const Occ& o) {
      int sign = polys[o.poly][o.side].sign;
      int a = corner(o.poly, o.side);
      int b = corner(o.poly, o.side + 1);
      return sign > 0 ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a};
    };
    auto [t0, h0] = ends(e.occ[0]);
    auto [t1, h1] = ends(e.occ[1]);
    uf.unite(t0, t1);
    uf.unite(h0, h1);
  }
  std::map<int, int> vn;
  for (size_t p = 0; p < polys.size(); ++p)
    for (size_t c = 0; c < polys[p].size(); ++c) {
      int root = uf.find(corner(static_cast<int>(p), static_cast<int>(c)));
      auto it = vn.find(root);
      if (it == vn.end()) it = vn.emplace(root, static_cast<int>(vn.size())).first;
      corner_class_[p][c] = it->second;
    }
  num_vertices_ = static_cast<int>(vn.size());
  chi_ = num_vertices_ - num_edges() + num_polys();

  // orientability: 2-color polygons, flipping across reversing gluings
  std::vector<int> color(polys.size(), -1);
  orientable_ = true;
  connected_ = true;
  std::vector<std::vector<std::pair<int, int>>> adj(polys.size());  // (poly, parity)
  for (const auto& e : edges) {
    if (e.nocc != 2) continue;
    int par = e.reversing ? 1 : 0;
    adj[e.occ[0].poly].push_back({e.occ[1].poly, par});
    adj[e.occ[1].poly].push_back({e.occ[0].poly, par});
  }
  int comps = 0;
  for (size_t start = 0; start < polys.size(); ++start) {
    if (color[start] != -1) continue;
    ++comps;
    color[start] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      int p = q.front(); q.pop();
      for (auto [r, par] : adj[p]) {
        int want = color[p] ^ par;
        if (color[r] == -1) { color[r] = want; q.push(r); }
        else if (color[r] != want) orientable_ = false;
      }
    }
  }
  connected_ = (comps <= 1);

  // boundary circles via vertex-link walks
  boundary_circles_.clear();
  auto glued = [&](const Occ& o) { return edges[polys[o.poly][o.side].edge].nocc == 2; };
  std::vector<std::vector<char>> seen(polys.size());
  for (size_t p = 0; p < polys.size(); ++p) seen[p].assign(polys[p].size(), 0);
  for (size_t p0 = 0; p0 < polys.size(); ++p0) {
    for (size_t i0 = 0; i0 < polys[p0].size(); ++i0) {
      Occ u{static_cast<int>(p0), static_cast<int>(i0)};
      if (glued(u) || seen[p0][i0]) continue;
      std::vector<BoundaryStep> circle;
      Occ cur = u;
      bool fwd = true;  // traverse cur in polygon direction
      for (;;) {
        seen[cur.poly][cur.side] = 1;
        circle.push_back(BoundaryStep{cur, fwd, polys[cur.poly][cur.side].edge});
        // stand at the far end of cur and walk the vertex link to the next
        // unglued side
        Occ o = cur;
        bool at_end = fwd;  // true: at corner(side+1); false: at corner(side)
        for (;;) {
          int n = static_cast<int>(polys[o.poly].size());
          Occ nxt;
          bool nxt_at_end;
          if (at_end) {
            nxt = Occ{o.poly, (o.side + 1) % n};
            nxt_at_end = false;  // arrive at its start
          } else {
            nxt = Occ{o.poly, (o.side - 1 + n) % n};
            nxt_at_end = true;
          }
          if (!glued(nxt)) {
            // boundary continues along nxt away from this end
            cur = nxt;
            fwd = !nxt_at_end;
            break;
          }
          Occ w = partner(nxt);
          bool same_dir = polys[nxt.poly][nxt.side].sign == polys[w.poly][w.side].sign;
          o = w;
          at_end = same_dir ? nxt_at_end : !nxt_at_end;
        }
        if (cur == u && fwd) break;
      }
      boundary_circles_.push_back(std::move(circle));
    }
  }
}

int SurfaceComplex::w1(const LoopWord& w) const {
  int parity = 0;
  for (int e : w.edges) {
    if (e < 0 || e >= num_edges() || edges[e].nocc != 2)
      throw std::runtime_error("w1: walk crosses a non-interior edge");
    parity ^= edges[e].reversing ? 1 : 0;
  }
  return parity;
}

namespace {

// breadth-first serialization from a seed; used for the canonical key
std::string bfs_key(const SurfaceComplex& s, int p0, int rot, int dir) {
  std::vector<int> polyname(s.num_polys(), -1);
  std::vector<int> edgename(s.num_edges(), -1);
  std::vector<int> edgefirstsign(s.num_edges(), 0);
  int nextpoly = 0, nextedge = 0;
  std::ostringstream out;
  struct Item { int p, start, dir; };
  std::queue<Item> q;
  polyname[p0] = nextpoly++;
  q.push({p0, rot, dir});
  while (!q.empty()) {
    auto [p, start, d] = q.front(); q.pop();
    int n = s.sides(p);
    out << "(";
    for (int k = 0; k < n; ++k) {
      int i = ((start + d * k) % n + n) % n;
      const SideRef& sr = s.polys[p][i];
      int eff = sr.sign * d;
      if (edgename[sr.edge] == -1) {
        edgename[sr.edge] = nextedge++;
        edgefirstsign[sr.edge] = eff;
      }
      int outsign = eff * edgefirstsign[sr.edge];
      out << (outsign > 0 ? "" : "-") << edgename[sr.edge] << ",";
      const EdgeInfo& e = s.edges[sr.edge];
      if (e.nocc == 2) {
        Occ other = e.occ[e.occ[0] == Occ{p, i} ? 1 : 0];
        if (polyname[other.poly] == -1) {
          polyname[other.poly] = nextpoly++;
          int obs = s.polys[other.poly][other.side].sign;
          int want = -eff;  // traverse the shared edge oppositely
          int od = want * obs;
          q.push({other.poly, other.side, od});
        }
      } else {
        out << "b,";  // boundary marker
      }
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

std::string SurfaceComplex::canonical_key() const {
  // component decomposition first
  UnionFind uf(num_polys());
  for (const auto& e : edges)
    if (e.nocc == 2) uf.unite(e.occ[0].poly, e.occ[1].poly);
  std::map<int, std::vector<int>> comps;
  for (int p = 0; p < num_polys(); ++p) comps[uf.find(p)].push_back(p);
  std::vector<std::string> keys;
  for (auto& [root, ps] : comps) {
    std::string best;
    for (int p : ps)
      for (int rot = 0; rot < sides(p); ++rot)
        for (int dir : {+1, -1}) {
          std::string k = bfs_key(*this, p, rot, dir);
          if (best.empty() || k < best) best = std::move(k);
        }
    keys.push_back(std::move(best));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) { out += k; out += "|"; }
  return out;
}

std::vector<std::vector<std::string>> SurfaceComplex::words() const {
  std::vector<std::vector<std::string>> w;
  for (const auto& poly : polys) {
    std::vector<std::string> row;
    for (const auto& sr : poly)
      row.push_back((sr.sign > 0 ? "" : "-") + edges[sr.edge].name);
    w.push_back(std::move(row));
  }
  return w;
}

CoverResult orientation_double_cover(const SurfaceComplex& s) {
  CoverResult r;
  r.trivial = s.orientable();
  int E = s.num_edges();
  int P = s.num_polys();
  std::vector<std::string> names(2 * E);
  for (int e = 0; e < E; ++e) {
    names[2 * e] = s.edges[e].name + ".0";
    names[2 * e + 1] = s.edges[e].name + ".1";
  }
  // lift of an occurrence in sheet `sh`
  auto lift_edge = [&](const Occ& o, int sh) {
    int e = s.polys[o.poly][o.side].edge;
    int idx;
    if (s.occ_index(o) == 0) idx = sh;
    else idx = sh ^ (s.edges[e].reversing ? 1 : 0);
    return 2 * e + idx;
  };
  std::vector<std::vector<SideRef>> polys(2 * P);
  r.poly_lift.assign(P, {0, 0});
  r.cover_poly_base.assign(2 * P, 0);
  r.cover_poly_sheet.assign(2 * P, 0);
  for (int p = 0; p < P; ++p) {
    int n = s.sides(p);
    r.poly_lift[p] = {p, P + p};
    r.cover_poly_base[p] = p;
    r.cover_poly_sheet[p] = 0;
    r.cover_poly_base[P + p] = p;
    r.cover_poly_sheet[P + p] = 1;
    polys[p].resize(n);
    polys[P + p].resize(n);
    for (int i = 0; i < n; ++i) {
      const SideRef& sr = s.polys[p][i];
      polys[p][i] = SideRef{lift_edge(Occ{p, i}, 0), sr.sign};
      polys[P + p][n - 1 - i] = SideRef{lift_edge(Occ{p, i}, 1), -sr.sign};
    }
  }
  r.cover = SurfaceComplex::from_structure(std::move(polys), std::move(names));
  r.edge_lift.assign(E, {0, 0});
  r.edge_lift_fwd.assign(E, {true, true});
  r.deck_edge.assign(2 * E, 0);
  r.proj_edge.assign(2 * E, 0);
  for (int e = 0; e < E; ++e) {
    r.edge_lift[e] = {2 * e, 2 * e + 1};
    r.deck_edge[2 * e] = 2 * e + 1;
    r.deck_edge[2 * e + 1] = 2 * e;
    r.proj_edge[2 * e] = e;
    r.proj_edge[2 * e + 1] = e;
  }
  // whether each lifted edge's reference direction matches the base one
  for (int le = 0; le < 2 * E; ++le) {
    const EdgeInfo& ce = r.cover.edges[le];
    Occ o0 = ce.occ[0];
    int bp = r.cover_poly_base[o0.poly];
    int sheet = r.cover_poly_sheet[o0.poly];
    int n = s.sides(bp);
    int bi = (sheet == 0) ? o0.side : (n - 1 - o0.side);
    bool base_fwd = s.occ_fwd(Occ{bp, bi});
    bool matches = base_fwd ^ (sheet == 1);
    int e = r.proj_edge[le];
    if (r.edge_lift[e][0] == le) r.edge_lift_fwd[e][0] = matches;
    else r.edge_lift_fwd[e][1] = matches;
  }
  return r;
}

ConnectSumResult connect_sum(const SurfaceComplex& s1, const SurfaceComplex& s2,
                             int p1, int p2) {
  ConnectSumResult res;
  int E1 = s1.num_edges();
  res.edge_offset2 = E1 + 2;
  res.poly_offset2 = s1.num_polys();
  std::vector<std::string> names;
  for (const auto& e : s1.edges) names.push_back("l." + e.name);
  names.push_back("cs.u");
  names.push_back("cs.v");
  for (const auto& e : s2.edges) names.push_back("r." + e.name);
  std::vector<std::vector<SideRef>> polys;
  for (int p = 0; p < s1.num_polys(); ++p) {
    auto w = s1.polys[p];
    if (p == p1) {
      w.push_back(SideRef{E1, +1});
      w.push_back(SideRef{E1 + 1, +1});
    }
    polys.push_back(std::move(w));
  }
  for (int p = 0; p < s2.num_polys(); ++p) {
    std::vector<SideRef> w;
    for (const auto& sr : s2.polys[p]) w.push_back(SideRef{sr.edge + E1 + 2, sr.sign});
    if (p == p2) {
      w.push_back(SideRef{E1 + 1, -1});
      w.push_back(SideRef{E1, -1});
    }
    polys.push_back(std::move(w));
  }
  res.sum = SurfaceComplex::from_structure(std::move(polys), std::move(names));
  return res;
}

}  // namespace trisect
