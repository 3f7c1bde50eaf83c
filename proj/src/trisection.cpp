#include "trisect/trisection.hpp"

#include <cstdint>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trisect {

namespace {

const char* pair_name(int i) {
  switch (i) {
    case 0: return "pair (alpha,beta)";
    case 1: return "pair (beta,gamma)";
    default: return "pair (gamma,alpha)";
  }
}

std::string rat_str(const Rat& t) {
  std::string s = std::to_string(t.num);
  if (t.den != 1) s += "/" + std::to_string(t.den);
  return s;
}

// Points of different families must not coincide: a shared (edge, position)
// is a tangency the per-family checks cannot see.
Validation layout_check(const SurfaceComplex& S,
                        std::span<const std::span<const Curve>, 3> fams) {
  static const char* names[3] = {"alpha", "beta", "gamma"};
  Validation v;
  std::map<std::pair<int, std::pair<std::int64_t, std::int64_t>>, int> seen;
  for (int f = 0; f < 3; ++f)
    for (const Curve& c : fams[f])
      for (const CurvePoint& p : c.pts) {
        auto key = std::make_pair(p.edge, std::make_pair(p.t.num, p.t.den));
        auto [it, fresh] = seen.emplace(key, f);
        if (!fresh && it->second != f)
          v.failures.push_back(std::string("families ") + names[it->second] +
                               " and " + names[f] + " share the point " +
                               S.edges[p.edge].name + "@" + rat_str(p.t));
      }
  return v;
}

void need_verified(const TrisectionDiagram& t, const char* op) {
  if (!t.report.valid)
    throw std::logic_error(std::string(op) + ": diagram is not verified");
}

void need_usable(const TrisectionDiagram& t, const char* op) {
  if (!t.report.valid && !t.report.candidate)
    throw std::logic_error(std::string(op) + ": diagram failed validation");
}

// Generators of the crossing presentation: one per edge outside a spanning
// tree of the polygon adjacency graph (tree edges are contracted).
struct DualSkeleton {
  std::vector<char> tree;
  std::vector<int> gen;  // edge id -> generator index, -1 for tree edges
  int ngens = 0;
};

DualSkeleton dual_skeleton(const SurfaceComplex& S) {
  DualSkeleton d;
  const int E = S.num_edges();
  d.tree.assign(E, 0);
  d.gen.assign(E, -1);
  std::vector<int> parent(S.num_polys());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < E; ++e) {
    int a = find(S.edges[e].occ[0].poly), b = find(S.edges[e].occ[1].poly);
    if (a != b) {
      parent[a] = b;
      d.tree[e] = 1;
    }
  }
  for (int e = 0; e < E; ++e)
    if (!d.tree[e]) d.gen[e] = d.ngens++;
  return d;
}

// One relator per vertex: the word read while circling its link once. A walk
// state is a polygon side about to be crossed near one of its two ends; the
// transition lands on the partner side and turns around the shared corner.
// Crossing out of an edge's first occurrence reads the positive generator.
std::vector<Word> link_relators(const SurfaceComplex& S,
                                const DualSkeleton& d) {
  const int P = S.num_polys();
  std::vector<int> base(P + 1, 0);
  for (int p = 0; p < P; ++p) base[p + 1] = base[p] + S.sides(p);
  std::vector<char> visited(2 * base[P], 0);
  auto sid = [&](const Occ& o, bool at_start) {
    return 2 * (base[o.poly] + o.side) + (at_start ? 1 : 0);
  };
  std::vector<Word> rels;
  int crossings = 0;
  for (int p = 0; p < P; ++p)
    for (int s = 0; s < S.sides(p); ++s)
      for (int f = 0; f < 2; ++f) {
        const Occ start{p, s};
        const bool fstart = f == 1;
        if (visited[sid(start, fstart)]) continue;
        Word w;
        Occ o = start;
        bool at_start = fstart;
        do {
          visited[sid(o, at_start)] = 1;
          const int e = S.polys[o.poly][o.side].edge;
          if (d.gen[e] >= 0)
            w.push_back(S.occ_index(o) == 0 ? d.gen[e] + 1 : -(d.gen[e] + 1));
          ++crossings;
          const bool end_lo = S.occ_fwd(o) ? at_start : !at_start;
          const Occ q = S.partner(o);
          const bool q_at_start = S.occ_fwd(q) == end_lo;
          // the partner state crosses the same edge end circling the other
          // way; marking it keeps each vertex to a single relator
          visited[sid(q, q_at_start)] = 1;
          const int n = S.sides(q.poly);
          if (q_at_start) {
            o = Occ{q.poly, (q.side + n - 1) % n};
            at_start = false;
          } else {
            o = Occ{q.poly, (q.side + 1) % n};
            at_start = true;
          }
        } while (!(o == start && at_start == fstart));
        rels.push_back(std::move(w));
      }
  if (static_cast<int>(rels.size()) != S.num_vertices() ||
      crossings != 2 * S.num_edges())
    throw std::logic_error("surface_group: vertex walk miscounted");
  return rels;
}

Word curve_word(const DualSkeleton& d, const Curve& c) {
  Word w;
  for (const CurvePoint& p : c.pts)
    if (d.gen[p.edge] >= 0)
      w.push_back(p.leave == 1 ? d.gen[p.edge] + 1 : -(d.gen[p.edge] + 1));
  return w;
}

Presentation crossing_presentation(const SurfaceComplex& S,
                                   const DualSkeleton& d) {
  Presentation p;
  p.ngens = d.ngens;
  for (Word& w : link_relators(S, d))
    if (!w.empty()) p.rels.push_back(std::move(w));
  return p;
}

Presentation diagram_presentation(const TrisectionDiagram& t) {
  const DualSkeleton d = dual_skeleton(t.surface);
  Presentation p = crossing_presentation(t.surface, d);
  for (const std::vector<Curve>* fam : {&t.alpha, &t.beta, &t.gamma})
    for (const Curve& c : *fam)
      if (Word w = curve_word(d, c); !w.empty()) p.rels.push_back(std::move(w));
  return p;
}

}  // namespace

std::string TrisectionReport::witness() const {
  std::vector<std::string> parts;
  auto fam = [&](const char* name, const Validation& v) {
    if (!v.ok()) parts.push_back(std::string(name) + ": " + v.witness());
  };
  fam("alpha", alpha);
  fam("beta", beta);
  fam("gamma", gamma);
  if (!layout.ok()) parts.push_back(layout.witness());
  if (pairs_checked)
    for (int i = 0; i < 3; ++i) {
      if (pairs[i].verdict == Verdict::Verified) continue;
      std::string line = std::string(pair_name(i)) + ": " +
                         (pairs[i].verdict == Verdict::Refuted
                              ? "refuted"
                              : "not settled within budget");
      if (!pairs[i].witness.empty()) line += " (" + pairs[i].witness + ")";
      parts.push_back(std::move(line));
    }
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

TrisectionReport validate_trisection(const SurfaceComplex& S,
                                     std::span<const Curve> alpha,
                                     std::span<const Curve> beta,
                                     std::span<const Curve> gamma,
                                     long long budget) {
  if (budget <= 0)
    throw std::invalid_argument("validate_trisection: budget must be positive");
  TrisectionReport r;
  r.alpha = validate_cut_system(S, alpha);
  r.beta = validate_cut_system(S, beta);
  r.gamma = validate_cut_system(S, gamma);
  const std::array<std::span<const Curve>, 3> fams = {alpha, beta, gamma};
  r.layout = layout_check(S, fams);
  const int g2 = S.genus2x();
  if (g2 % 2 == 0) r.g = g2 / 2;
  if (!r.alpha.ok() || !r.beta.ok() || !r.gamma.ok() || !r.layout.ok())
    return r;
  r.pairs_checked = true;
  const std::array<std::pair<std::span<const Curve>, std::span<const Curve>>, 3>
      jobs = {{{alpha, beta}, {beta, gamma}, {gamma, alpha}}};
  std::array<std::exception_ptr, 3> errs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int i = 0; i < 3; ++i) {
    try {
      r.pairs[i] =
          recognize_standard_pair(S, jobs[i].first, jobs[i].second, budget);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errs)
    if (e) std::rethrow_exception(e);
  bool refuted = false;
  r.valid = true;
  for (const RecognitionResult& p : r.pairs) {
    r.valid = r.valid && p.verdict == Verdict::Verified;
    refuted = refuted || p.verdict == Verdict::Refuted;
  }
  r.candidate = !r.valid && !refuted;
  if (r.valid) {
    for (int i = 0; i < 3; ++i) r.k[i] = r.pairs[i].k;
    if (!S.orientable())
      for (int ki : r.k)
        if (ki < 1)
          throw std::logic_error(
              "validate_trisection: verified non-orientable sector without a "
              "reducing handle");
  }
  return r;
}

TrisectionDiagram trisection_diagram(SurfaceComplex S, std::vector<Curve> alpha,
                                     std::vector<Curve> beta,
                                     std::vector<Curve> gamma,
                                     long long budget) {
  TrisectionDiagram t{std::move(S), std::move(alpha), std::move(beta),
                      std::move(gamma), {}};
  t.report = validate_trisection(t.surface, t.alpha, t.beta, t.gamma, budget);
  return t;
}

int euler_characteristic_4mfd(const TrisectionDiagram& t) {
  need_verified(t, "euler_characteristic_4mfd");
  const auto& r = t.report;
  return 2 + r.g - (r.k[0] + r.k[1] + r.k[2]);
}

Presentation surface_group(const SurfaceComplex& S) {
  if (S.num_polys() == 0 || S.boundary_count() != 0 || !S.connected())
    throw std::invalid_argument(
        "surface_group: closed connected surface required");
  return crossing_presentation(S, dual_skeleton(S));
}

Presentation fundamental_group(const TrisectionDiagram& t, int budget) {
  need_verified(t, "fundamental_group");
  return simplify(diagram_presentation(t), budget);
}

HomologyPresentation first_homology(const TrisectionDiagram& t) {
  need_verified(t, "first_homology");
  const Presentation p = diagram_presentation(t);
  HomologyPresentation h;
  h.relations = abelianization(p);
  h.smith = smith_normal_form(h.relations);
  h.group = cokernel(h.relations, p.ngens);
  return h;
}

TrisectionDiagram standard_stabilizer(int sector) {
  if (sector < 1 || sector > 3)
    throw std::invalid_argument("standard_stabilizer: sector must be 1, 2 or 3");
  SurfaceComplex S = SurfaceComplex::build({{"p", "q", "-p", "-q"}});
  const int p = S.edge_id("p"), q = S.edge_id("q");
  auto one = [](int edge, Rat t) {
    return Curve{true, {CurvePoint{edge, t, 0}}};
  };
  std::vector<Curve> a, b, c;
  switch (sector) {
    case 1:
      a = {one(q, Rat(1, 2))};
      b = {one(q, Rat(1, 4))};
      c = {one(p, Rat(1, 2))};
      break;
    case 2:
      a = {one(p, Rat(1, 2))};
      b = {one(q, Rat(1, 4))};
      c = {one(q, Rat(3, 4))};
      break;
    default:
      a = {one(q, Rat(1, 2))};
      b = {one(p, Rat(1, 2))};
      c = {one(q, Rat(3, 4))};
      break;
  }
  TrisectionDiagram t = trisection_diagram(std::move(S), std::move(a),
                                           std::move(b), std::move(c), 64);
  if (!t.report.valid)
    throw std::logic_error("standard_stabilizer: reference diagram broken");
  return t;
}

TrisectionDiagram connected_sum(const TrisectionDiagram& a,
                                const TrisectionDiagram& b, int p1, int p2,
                                long long budget) {
  need_usable(a, "connected_sum");
  need_usable(b, "connected_sum");
  ConnectSumResult cs = connect_sum(a.surface, b.surface, p1, p2);
  auto merge = [&](const std::vector<Curve>& fa, const std::vector<Curve>& fb) {
    std::vector<Curve> out = fa;
    for (Curve c : fb) {
      for (CurvePoint& pt : c.pts) pt.edge += cs.edge_offset2;
      out.push_back(std::move(c));
    }
    return out;
  };
  return trisection_diagram(std::move(cs.sum), merge(a.alpha, b.alpha),
                            merge(a.beta, b.beta), merge(a.gamma, b.gamma),
                            budget);
}

TrisectionDiagram stabilize(const TrisectionDiagram& t, int sector,
                            long long budget) {
  return connected_sum(t, standard_stabilizer(sector), 0, 0, budget);
}

TrisectionDiagram orientation_double_cover_diagram(const TrisectionDiagram& t,
                                                   long long budget) {
  need_verified(t, "orientation_double_cover_diagram");
  if (t.surface.orientable())
    throw std::invalid_argument(
        "orientation_double_cover_diagram: surface is already orientable");
  const CoverResult cov = orientation_double_cover(t.surface);
  auto lift_family = [&](const std::vector<Curve>& fam, const char* name) {
    std::vector<std::array<Curve, 2>> lifts;
    lifts.reserve(fam.size());
    for (const Curve& c : fam) lifts.push_back(lift_curve(cov, t.surface, c));
    for (std::size_t dc = 0; dc < lifts.size(); ++dc)
      for (int dl = 0; dl < 2; ++dl) {
        std::vector<Curve> cand;
        cand.reserve(2 * lifts.size() - 1);
        for (std::size_t i = 0; i < lifts.size(); ++i)
          for (int l = 0; l < 2; ++l)
            if (i != dc || l != dl) cand.push_back(lifts[i][l]);
        if (validate_cut_system(cov.cover, cand).ok()) return cand;
      }
    throw std::runtime_error(
        std::string("orientation_double_cover_diagram: no lift of family ") +
        name + " is redundant");
  };
  std::vector<Curve> a = lift_family(t.alpha, "alpha");
  std::vector<Curve> b = lift_family(t.beta, "beta");
  std::vector<Curve> c = lift_family(t.gamma, "gamma");
  return trisection_diagram(cov.cover, std::move(a), std::move(b),
                            std::move(c), budget);
}

}  // namespace trisect
