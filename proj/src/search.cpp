#include "trisect/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace trisect {

namespace {

auto move_tuple(const SlideMove& m) {
  return std::make_tuple(m.family, m.i, m.j, m.band.from.chord,
                         m.band.from.side, m.band.to.chord, m.band.to.side);
}

struct Attach {
  int fam, idx, chord, side;
};

}  // namespace

std::vector<SlideMove> enumerate_slides(const SurfaceComplex& S,
                                        std::span<const Curve> A,
                                        std::span<const Curve> B) {
  int na = static_cast<int>(A.size());
  std::vector<Curve> cat(A.begin(), A.end());
  cat.insert(cat.end(), B.begin(), B.end());
  std::unordered_map<int, std::vector<Attach>> by_poly;
  for (std::size_t ci = 0; ci < cat.size(); ++ci) {
    auto ch = curve_chords(S, cat[ci]);
    int fam = static_cast<int>(ci) < na ? 0 : 1;
    int idx = fam == 0 ? static_cast<int>(ci) : static_cast<int>(ci) - na;
    for (std::size_t k = 0; k < ch.size(); ++k)
      for (int side = 0; side < 2; ++side)
        by_poly[ch[k].poly].push_back(
            Attach{fam, idx, static_cast<int>(k), side});
  }
  std::vector<SlideMove> moves;
  for (const auto& [poly, at] : by_poly) {
    (void)poly;
    for (const Attach& u : at)
      for (const Attach& v : at) {
        if (u.fam != v.fam || u.idx == v.idx) continue;
        SlideMove m;
        m.family = u.fam;
        m.i = u.idx;
        m.j = v.idx;
        m.band.from = BandAttach{u.idx, u.chord, u.side};
        m.band.to = BandAttach{v.idx, v.chord, v.side};
        moves.push_back(std::move(m));
      }
  }
  std::sort(moves.begin(), moves.end(), [](const SlideMove& x, const SlideMove& y) {
    return move_tuple(x) < move_tuple(y);
  });
  moves.erase(std::unique(moves.begin(), moves.end(),
                          [](const SlideMove& x, const SlideMove& y) {
                            return move_tuple(x) == move_tuple(y);
                          }),
              moves.end());
  return moves;
}

namespace {

std::vector<PairState> expand_one(const SurfaceComplex& S, const PairState& st,
                                  int parent) {
  std::vector<PairState> out;
  for (const SlideMove& m : enumerate_slides(S, st.alpha, st.beta)) {
    try {
      PairState child;
      if (m.family == 0) {
        child.alpha = slide(S, st.alpha, m.i, m.j, m.band, st.beta);
        child.beta = st.beta;
      } else {
        child.beta = slide(S, st.beta, m.i, m.j, m.band, st.alpha);
        child.alpha = st.alpha;
      }
      reduce_pair(S, child.alpha, child.beta);
      child.key = pair_key(S, child.alpha, child.beta);
      child.parent = parent;
      child.via = m;
      out.push_back(std::move(child));
    } catch (const std::exception&) {
      // blocked band or degenerate result: not a move from this state
    }
  }
  return out;
}

}  // namespace

Expansion expand_frontier_serial(const SurfaceComplex& S,
                                 const std::vector<PairState>& states,
                                 std::size_t lo, std::size_t hi) {
  Expansion e;
  e.per_state.resize(hi - lo);
  for (std::size_t s = lo; s < hi; ++s)
    e.per_state[s - lo] = expand_one(S, states[s], static_cast<int>(s));
  return e;
}

Expansion expand_frontier_parallel(const SurfaceComplex& S,
                                   const std::vector<PairState>& states,
                                   std::size_t lo, std::size_t hi) {
  Expansion e;
  e.per_state.resize(hi - lo);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long s = static_cast<long long>(lo);
       s < static_cast<long long>(hi); ++s)
    e.per_state[s - lo] = expand_one(S, states[s], static_cast<int>(s));
  return e;
}

RecognitionResult recognize_pair(const SurfaceComplex& S,
                                 std::span<const Curve> A,
                                 std::span<const Curve> B,
                                 const std::vector<std::string>& accepted,
                                 long long budget, bool parallel) {
  if (budget <= 0)
    throw std::invalid_argument("recognize_pair: budget must be positive");
  std::unordered_map<std::string, int> accepted_at;
  for (std::size_t i = 0; i < accepted.size(); ++i)
    accepted_at.emplace(accepted[i], static_cast<int>(i));
  auto accepted_index = [&](const std::string& key) {
    auto it = accepted_at.find(key);
    return it == accepted_at.end() ? -1 : it->second;
  };
  auto script_of = [](const std::vector<PairState>& states, int at) {
    MoveScript script;
    for (int s = at; states[s].parent >= 0; s = states[s].parent)
      script.push_back(states[s].via);
    std::reverse(script.begin(), script.end());
    return script;
  };

  std::vector<PairState> states(1);
  states[0].alpha.assign(A.begin(), A.end());
  states[0].beta.assign(B.begin(), B.end());
  reduce_pair(S, states[0].alpha, states[0].beta);
  states[0].key = pair_key(S, states[0].alpha, states[0].beta);

  RecognitionResult res;
  res.states = 1;
  if (int ix = accepted_index(states[0].key); ix >= 0) {
    res.verdict = Verdict::Verified;
    res.k = ix;
    res.witness = "already in the reference configuration";
    return res;
  }

  std::unordered_set<std::string> seen{states[0].key};
  std::size_t lo = 0, hi = 1;
  while (lo < hi) {
    Expansion exp = parallel ? expand_frontier_parallel(S, states, lo, hi)
                             : expand_frontier_serial(S, states, lo, hi);
    for (auto& children : exp.per_state)
      for (PairState& child : children) {
        if (!seen.insert(child.key).second) continue;
        if (static_cast<long long>(states.size()) >= budget) {
          res.verdict = Verdict::Inconclusive;
          res.states = static_cast<long long>(states.size());
          res.witness = "budget of " + std::to_string(budget) +
                        " deduplicated states exhausted";
          return res;
        }
        states.push_back(std::move(child));
        int at = static_cast<int>(states.size()) - 1;
        if (int ix = accepted_index(states[at].key); ix >= 0) {
          res.verdict = Verdict::Verified;
          res.k = ix;
          res.script = script_of(states, at);
          res.states = static_cast<long long>(states.size());
          return res;
        }
      }
    lo = hi;
    hi = states.size();
  }
  res.verdict = Verdict::Inconclusive;
  res.states = static_cast<long long>(states.size());
  res.witness = "single-corridor slides exhausted after " +
                std::to_string(states.size()) +
                " states without reaching the reference pair";
  return res;
}

RecognitionResult meet_pair(const SurfaceComplex& S, std::span<const Curve> A,
                            std::span<const Curve> B,
                            const SurfaceComplex& S2,
                            std::span<const Curve> A2,
                            std::span<const Curve> B2, long long budget,
                            bool parallel) {
  if (budget <= 0)
    throw std::invalid_argument("meet_pair: budget must be positive");

  struct SearchSide {
    const SurfaceComplex* S = nullptr;
    std::vector<PairState> states;
    std::unordered_map<std::string, int> seen;  // key -> first state index
    std::size_t lo = 0, hi = 1;
    bool open() const { return lo < hi; }
  };
  auto seed = [](SearchSide& sd, const SurfaceComplex& surf,
                 std::span<const Curve> a, std::span<const Curve> b) {
    sd.S = &surf;
    sd.states.resize(1);
    sd.states[0].alpha.assign(a.begin(), a.end());
    sd.states[0].beta.assign(b.begin(), b.end());
    reduce_pair(surf, sd.states[0].alpha, sd.states[0].beta);
    sd.states[0].key = pair_key(surf, sd.states[0].alpha, sd.states[0].beta);
    sd.seen.emplace(sd.states[0].key, 0);
  };
  SearchSide fwd, ref;
  seed(fwd, S, A, B);
  seed(ref, S2, A2, B2);

  RecognitionResult res;
  res.states = 1;  // the reference seed rides free
  if (fwd.states[0].key == ref.states[0].key) {
    res.verdict = Verdict::Verified;
    res.witness = "already in the reference configuration";
    return res;
  }

  auto script_of = [&](int at) {
    MoveScript script;
    for (int s = at; fwd.states[s].parent >= 0; s = fwd.states[s].parent)
      script.push_back(fwd.states[s].via);
    std::reverse(script.begin(), script.end());
    return script;
  };

  while (fwd.open() || ref.open()) {
    bool grow_fwd = ref.open()
                        ? (fwd.open() && fwd.states.size() < ref.states.size())
                        : true;
    SearchSide& self = grow_fwd ? fwd : ref;
    SearchSide& other = grow_fwd ? ref : fwd;
    Expansion exp =
        parallel ? expand_frontier_parallel(*self.S, self.states, self.lo, self.hi)
                 : expand_frontier_serial(*self.S, self.states, self.lo, self.hi);
    for (auto& children : exp.per_state)
      for (PairState& child : children) {
        if (self.seen.count(child.key)) continue;
        if (res.states >= budget) {
          res.verdict = Verdict::Inconclusive;
          res.witness = "budget of " + std::to_string(budget) +
                        " deduplicated states exhausted";
          return res;
        }
        ++res.states;
        self.seen.emplace(child.key, static_cast<int>(self.states.size()));
        self.states.push_back(std::move(child));
        auto hit = other.seen.find(self.states.back().key);
        if (hit != other.seen.end()) {
          res.verdict = Verdict::Verified;
          res.script = script_of(grow_fwd
                                     ? static_cast<int>(fwd.states.size()) - 1
                                     : hit->second);
          return res;
        }
      }
    self.lo = self.hi;
    self.hi = self.states.size();
  }
  res.verdict = Verdict::Inconclusive;
  res.witness = "single-corridor slides exhausted after " +
                std::to_string(res.states) +
                " states without reaching the reference pair";
  return res;
}

}  // namespace trisect
