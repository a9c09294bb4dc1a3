#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "pclass/cycles.hpp"
#include "pclass/errors.hpp"

// Decomposition of a closed chain of moves on oriented 2-spheres into the
// elementary catalogue.  The rewriting is by descending induction on the
// maximum move complexity a = k + b/6 present in the working multiset:
//
//   b odd  (1, 3, 5): each top edge is a flip between two spheres of equal
//     complexity and is covered individually by a commuting square with an
//     auxiliary move (a vertex removal for b=1, a flip making a degree-4 /
//     degree-5 vertex flat for b=3 / b=5), or by the transfer pentagon when
//     b=1 and every degree-3 vertex participates.
//   b even (0, 2, 4): top edges at a peak sphere pair up (inflow equals
//     outflow); a pair is covered by one commuting square, by the quad
//     pentagon at a shared degree-4 vertex, by two quad pentagons whose
//     auxiliary flips cancel (shared facet with a high-degree vertex), or
//     by two squares sharing a cancelling auxiliary flip.
//
// Every subtraction is validated: apart from the targeted edges (and
// declared same-level splits), it may only touch edges of strictly smaller
// complexity.  The induction floors out at complexity 5 + 1/6: what
// remains lives on spheres with at most five vertices and carries weight
// zero, which the certificate records explicitly.

namespace pclass {

namespace {

constexpr int kFloorSixths = 6 * 5 + 1;  // 5 + 1/6

struct WorkEdge {
  OrientedComplex before;  // canonical storage direction
  BistellarMove move;
  OrientedComplex after;
  Complexity cx;
  int coeff = 0;
};

using Work = std::map<EdgeKey, WorkEdge>;

// Canonical key for the edge (before --move--> after); dir reports whether
// the canonical direction is the given one (+1) or its reverse (-1).
EdgeKey canonical_key(const OrientedComplex& before, const BistellarMove& m,
                      const OrientedComplex& after, int& dir) {
  std::uint64_t fa = before.fingerprint(), fb = after.fingerprint();
  PCLASS_CHECK(fa != fb, "a move may not fix the labeled sphere");
  EdgeKey fwd{fa, fb, m.sigma, m.tau};
  EdgeKey rev{fb, fa, m.tau, m.sigma};
  if (rev < fwd) {
    dir = -1;
    return rev;
  }
  dir = +1;
  return fwd;
}

void add_edge(Work& work, const OrientedComplex& before, const BistellarMove& m,
              const OrientedComplex& after, int delta) {
  int dir = 0;
  EdgeKey key = canonical_key(before, m, after, dir);
  auto it = work.find(key);
  if (it == work.end()) {
    WorkEdge e;
    if (dir > 0) {
      e.before = before;
      e.move = m;
      e.after = after;
    } else {
      e.before = after;
      e.move = m.inverted();
      e.after = before;
    }
    e.cx = move_complexity(e.move, e.before.complex, e.after.complex);
    e.coeff = dir * delta;
    work.emplace(std::move(key), std::move(e));
  } else {
    it->second.coeff += dir * delta;
  }
}

void prune(Work& work) {
  for (auto it = work.begin(); it != work.end();) {
    if (it->second.coeff == 0)
      it = work.erase(it);
    else
      ++it;
  }
}

// A work edge seen as departing from the sphere with fingerprint `base_fp`.
struct Departing {
  EdgeKey key;
  const WorkEdge* edge = nullptr;
  BistellarMove move;       // as applied to the base sphere
  int out_mult = 0;         // net traversals leaving the base
};

Departing departing_view(const EdgeKey& key, const WorkEdge& e, std::uint64_t base_fp) {
  Departing d;
  d.key = key;
  d.edge = &e;
  if (key.fp_from == base_fp) {
    d.move = e.move;
    d.out_mult = e.coeff;
  } else {
    PCLASS_CHECK(key.fp_to == base_fp, "edge does not touch the base sphere");
    d.move = e.move.inverted();
    d.out_mult = -e.coeff;
  }
  return d;
}

std::string dump_residual(const Work& work, Complexity a) {
  std::ostringstream os;
  os << "stuck at complexity " << a.str() << "; residual top edges:";
  int shown = 0;
  for (const auto& [key, e] : work) {
    if (e.coeff == 0 || e.cx != a) continue;
    os << "\n  coeff " << e.coeff << "  " << e.move.str() << "  from {";
    for (const Simplex& f : e.before.complex.facets()) os << " " << f.str();
    os << " }";
    if (++shown == 24) {
      os << "\n  ...";
      break;
    }
  }
  return os.str();
}

class Decomposer {
 public:
  Decomposer(const MoveChain& cycle, const CycleConventions& conv) : conv_(conv) {
    PCLASS_CHECK(!cycle.states.empty(), "decompose needs a chain");
    PCLASS_CHECK(cycle.states.front().complex.dim() == 2 || cycle.moves.empty(),
                 "decompose operates on 2-sphere chains");
    if (!(cycle.states.front() == cycle.states.back()))
      throw NotACycle("chain does not return to its starting sphere");
    for (std::size_t i = 0; i < cycle.moves.size(); ++i)
      add_edge(work_, cycle.states[i], cycle.moves[i], cycle.states[i + 1], +1);
  }

  Decomposition run() {
    int stall = 0;
    std::pair<int, std::size_t> last_progress{-1, 0};
    for (int iter = 0; iter < 200000; ++iter) {
      prune(work_);
      Complexity a{0};
      std::size_t count = 0;
      for (const auto& [key, e] : work_) {
        if (e.cx.sixths <= kFloorSixths) continue;
        if (e.cx > a) {
          a = e.cx;
          count = 1;
        } else if (e.cx == a) {
          ++count;
        }
      }
      if (count == 0) break;  // only the floor remains

      std::pair<int, std::size_t> progress{a.sixths, count};
      if (last_progress.first >= 0 && !(progress < last_progress)) {
        if (++stall > 512) throw DecompositionFailed(dump_residual(work_, a));
      } else {
        stall = 0;
        last_progress = progress;
      }

      int b = ((a.sixths % 6) + 6) % 6;
      bool ok = (b % 2 == 1) ? step_odd(a, b) : step_even(a, b);
      if (!ok) throw DecompositionFailed(dump_residual(work_, a));
    }
    prune(work_);

    Decomposition out;
    out.parts = std::move(parts_);
    out.value = value_;
    std::map<std::uint64_t, int> flow;
    for (const auto& [key, e] : work_) {
      PCLASS_CHECK(e.cx.sixths <= kFloorSixths, "non-floor edge left after rewriting");
      PCLASS_CHECK(e.before.complex.num_vertices() <= 5 &&
                       e.after.complex.num_vertices() <= 5,
                   "floor edge touches a sphere with more than five vertices");
      out.floor.push_back(FloorEdge{e.before, e.move, e.coeff});
      flow[key.fp_from] -= e.coeff;
      flow[key.fp_to] += e.coeff;
    }
    for (const auto& [fp, f] : flow)
      PCLASS_CHECK(f == 0, "floor residual is not a closed cycle");
    return out;
  }

 private:
  // Subtract the candidate (with per-item multiplicities) if it strictly
  // reduces every target edge and otherwise only touches edges of
  // complexity below `a` (or same-level edges admitted by `split_ok`).
  bool try_commit(const std::vector<std::pair<ElementaryCycle, int>>& items,
                  const std::set<EdgeKey>& targets, Complexity a,
                  const std::function<bool(const WorkEdge&)>& split_ok = nullptr) {
    struct Delta {
      int amount = 0;
      const MoveChain* chain = nullptr;
      std::size_t index = 0;  // position of a representative traversal
      bool canonical_forward = true;
    };
    std::map<EdgeKey, Delta> delta;
    for (const auto& [e, mult] : items) {
      const MoveChain& r = e.realization;
      for (std::size_t i = 0; i < r.moves.size(); ++i) {
        int dir = 0;
        EdgeKey key = canonical_key(r.states[i], r.moves[i], r.states[i + 1], dir);
        Delta& d = delta[key];
        d.amount += mult * dir;
        d.chain = &r;
        d.index = i;
        d.canonical_forward = dir > 0;
      }
    }
    // Validate.
    for (const auto& [key, d] : delta) {
      if (d.amount == 0) continue;
      auto it = work_.find(key);
      int cur = it == work_.end() ? 0 : it->second.coeff;
      if (targets.count(key)) {
        int next = cur - d.amount;
        if (std::abs(next) >= std::abs(cur)) return false;
        continue;
      }
      Complexity cx;
      if (it != work_.end()) {
        cx = it->second.cx;
      } else {
        const MoveChain& r = *d.chain;
        cx = move_complexity(r.moves[d.index], r.states[d.index].complex,
                             r.states[d.index + 1].complex);
      }
      if (cx < a) continue;
      if (cx == a && split_ok && it == work_.end()) {
        const MoveChain& r = *d.chain;
        WorkEdge probe;
        if (d.canonical_forward) {
          probe.before = r.states[d.index];
          probe.move = r.moves[d.index];
          probe.after = r.states[d.index + 1];
        } else {
          probe.before = r.states[d.index + 1];
          probe.move = r.moves[d.index].inverted();
          probe.after = r.states[d.index];
        }
        probe.cx = cx;
        if (split_ok(probe)) continue;
      }
      return false;
    }
    // Apply.
    for (const auto& [e, mult] : items) {
      const MoveChain& r = e.realization;
      for (std::size_t i = 0; i < r.moves.size(); ++i)
        add_edge(work_, r.states[i], r.moves[i], r.states[i + 1], -mult);
      parts_.emplace_back(e, mult);
      value_ += mult * evaluate_elementary(e);
    }
    return true;
  }

  bool commit_single(const std::optional<ElementaryCycle>& e, const std::set<EdgeKey>& targets,
                     Complexity a,
                     const std::function<bool(const WorkEdge&)>& split_ok = nullptr) {
    if (!e) return false;
    for (int mult : {+1, -1})
      if (try_commit({{*e, mult}}, targets, a, split_ok)) return true;
    return false;
  }

  bool commit_pair(const std::optional<ElementaryCycle>& e1,
                   const std::optional<ElementaryCycle>& e2, const std::set<EdgeKey>& targets,
                   Complexity a) {
    if (!e1 || !e2) return false;
    for (int m1 : {+1, -1})
      for (int m2 : {+1, -1})
        if (try_commit({{*e1, m1}, {*e2, m2}}, targets, a)) return true;
    return false;
  }

  // Vertex-removal move for a degree-3 vertex u of L.
  static std::optional<BistellarMove> removal_of(const SimplicialComplex& L, Vertex u) {
    std::vector<Vertex> nb = L.neighbours(u);
    if (nb.size() != 3) return std::nullopt;
    return BistellarMove{Simplex({u}), Simplex(std::vector<Vertex>(nb.begin(), nb.end()))};
  }

  // All applicable flips at edges through v (sigma = {v, u}), in lex order.
  static std::vector<BistellarMove> flips_at(const OrientedComplex& L, Vertex v) {
    std::vector<BistellarMove> out;
    std::vector<Vertex> cyc = directed_link_cycle(L, v);
    const int d = static_cast<int>(cyc.size());
    std::vector<Vertex> order = cyc;
    std::sort(order.begin(), order.end());
    for (Vertex u : order) {
      int i = static_cast<int>(std::find(cyc.begin(), cyc.end(), u) - cyc.begin());
      Vertex p = cyc[(i + d - 1) % d], n = cyc[(i + 1) % d];
      BistellarMove m{Simplex({v, u}), Simplex({p, n})};
      if (is_applicable(L.complex, m)) out.push_back(m);
    }
    return out;
  }

  static std::vector<Vertex> nonparticipants_of_degree(const SimplicialComplex& L,
                                                       const BistellarMove& m, int deg) {
    std::vector<Vertex> out;
    for (Vertex v : L.vertices())
      if (!m.participants().contains(v) &&
          static_cast<int>(L.vertex_degree(v)) == deg)
        out.push_back(v);
    return out;
  }

  // One edge of maximum complexity, lex-least key.
  const std::pair<const EdgeKey, WorkEdge>* top_edge(Complexity a) const {
    for (const auto& kv : work_)
      if (kv.second.coeff != 0 && kv.second.cx == a) return &kv;
    return nullptr;
  }

  bool step_odd(Complexity a, int b) {
    const auto* kv = top_edge(a);
    PCLASS_CHECK(kv, "no edge at the current level");
    const WorkEdge& E = kv->second;
    std::set<EdgeKey> targets{kv->first};

    struct Side {
      const OrientedComplex* base;
      BistellarMove beta;
    };
    Side sides[2] = {{&E.before, E.move}, {&E.after, E.move.inverted()}};

    if (b == 1) {
      // Case A: commuting square with the removal of a third degree-3 vertex.
      for (const Side& s : sides)
        for (Vertex u : nonparticipants_of_degree(s.base->complex, s.beta, 3))
          if (auto rm = removal_of(s.base->complex, u))
            if (commit_single(make_commuting_square(*s.base, s.beta, *rm, conv_), targets, a))
              return true;
      // Case B: the transfer pentagon.
      if (conv_.enable_transfer)
        for (const Side& s : sides)
          if (commit_single(make_transfer_pentagon(*s.base, s.beta, conv_), targets, a))
            return true;
      // Case B': detour across a flip that flattens a fresh degree-4 vertex
      // away from the move.  The square trades the edge for three edges at
      // the same level, each of which admits case A: the flattened vertex
      // has degree 3 on one side of every new edge, does not take part in
      // the moves there, and a flip never obstructs the removal square of a
      // degree-3 non-participant.
      auto admits_removal = [&](const WorkEdge& e) {
        const OrientedComplex* bases[2] = {&e.before, &e.after};
        BistellarMove betas[2] = {e.move, e.move.inverted()};
        for (int i = 0; i < 2; ++i)
          for (Vertex u : nonparticipants_of_degree(bases[i]->complex, betas[i], 3))
            if (auto rm = removal_of(bases[i]->complex, u))
              if (make_commuting_square(*bases[i], betas[i], *rm, conv_)) return true;
        return false;
      };
      for (const Side& s : sides)
        for (Vertex u : nonparticipants_of_degree(s.base->complex, s.beta, 4))
          for (const BistellarMove& aux : flips_at(*s.base, u))
            if (aux.participants().intersect(s.beta.participants()).size() == 0)
              if (commit_single(make_commuting_square(*s.base, s.beta, aux, conv_), targets, a,
                                admits_removal))
                return true;
      return false;
    }

    if (b == 3) {
      // Case 1: square with a flip flattening a non-participating degree-4
      // vertex.
      for (const Side& s : sides)
        for (Vertex v : nonparticipants_of_degree(s.base->complex, s.beta, 4))
          for (const BistellarMove& aux : flips_at(*s.base, v))
            if (commit_single(make_commuting_square(*s.base, s.beta, aux, conv_), targets, a))
              return true;
      // Case 2: split through a degree-5 vertex away from the flip; the
      // three same-level edges this creates each admit case 1.
      auto splittable = [](const WorkEdge& e) {
        for (Vertex v : e.before.complex.vertices())
          if (!e.move.participants().contains(v) && e.before.complex.vertex_degree(v) == 4)
            return true;
        return false;
      };
      for (const Side& s : sides)
        for (Vertex w : nonparticipants_of_degree(s.base->complex, s.beta, 5))
          for (const BistellarMove& aux : flips_at(*s.base, w))
            if (commit_single(make_commuting_square(*s.base, s.beta, aux, conv_), targets, a,
                              splittable))
              return true;
      return false;
    }

    PCLASS_CHECK(b == 5, "odd level must be 1, 3 or 5");
    for (const Side& s : sides)
      for (Vertex w : nonparticipants_of_degree(s.base->complex, s.beta, 5))
        for (const BistellarMove& aux : flips_at(*s.base, w))
          if (commit_single(make_commuting_square(*s.base, s.beta, aux, conv_), targets, a))
            return true;
    return false;
  }

  bool step_even(Complexity a, int b) {
    // Peak sphere: the endpoint whose sphere complexity equals the level.
    const auto* kv = top_edge(a);
    PCLASS_CHECK(kv, "no edge at the current level");
    Complexity cb = sphere_complexity(kv->second.before.complex);
    const OrientedComplex& peak = cb == a ? kv->second.before : kv->second.after;
    PCLASS_CHECK(sphere_complexity(peak.complex) == a,
                 "even-level edge without a peak endpoint");
    std::uint64_t pfp = peak.fingerprint();

    // All level edges at the peak, as departing views.
    std::vector<Departing> at_peak;
    for (const auto& [key, e] : work_) {
      if (e.coeff == 0 || e.cx != a) continue;
      if (key.fp_from != pfp && key.fp_to != pfp) continue;
      at_peak.push_back(departing_view(key, e, pfp));
    }
    std::vector<const Departing*> ins, outs;
    for (const Departing& d : at_peak) {
      if (d.out_mult > 0) outs.push_back(&d);
      if (d.out_mult < 0) ins.push_back(&d);
    }
    PCLASS_CHECK(!ins.empty() && !outs.empty(), "peak edges do not pair up");
    for (const Departing* in : ins)
      for (const Departing* out : outs)
        if (resolve_even_pair(a, b, peak, *in, *out)) return true;
    return false;
  }

  // Rewrite one entering/leaving pair of level edges at the peak.
  bool resolve_even_pair(Complexity a, int b, const OrientedComplex& peak,
                         const Departing& in, const Departing& out) {
    std::set<EdgeKey> targets{out.key, in.key};
    const BistellarMove& m1 = in.move;
    const BistellarMove& m2 = out.move;

    // Direct commuting square (the opposite nesting order is the same
    // cycle reversed, which commit_single covers via the negated weight).
    if (commit_single(make_commuting_square(peak, m1, m2, conv_), targets, a)) return true;

    if (b == 2) {
      // Shared vertex of the two flipped edges.
      Simplex shared = m1.sigma.intersect(m2.sigma);
      if (shared.size() == 1) {
        Vertex v = shared[0];
        Vertex y = m1.sigma[0] == v ? m1.sigma[1] : m1.sigma[0];
        Vertex z = m2.sigma[0] == v ? m2.sigma[1] : m2.sigma[0];
        if (peak.complex.vertex_degree(v) == 4 && conv_.enable_quad) {
          // Quad pentagon at the shared degree-4 vertex, either chirality.
          if (commit_single(make_quad_pentagon(peak, v, y, z, conv_), targets, a)) return true;
          if (commit_single(make_quad_pentagon(peak, v, z, y, conv_), targets, a)) return true;
        } else if (peak.complex.has_facet(Simplex({v, y, z})) && conv_.enable_quad) {
          // Shared facet at a higher-degree vertex: two quad pentagons whose
          // auxiliary flips of the edge yz cancel.
          for (auto [cy, cz] : {std::pair<Vertex, Vertex>{v, z}, {z, v}})
            for (auto [dy, dz] : {std::pair<Vertex, Vertex>{y, v}, {v, y}})
              if (commit_pair(make_quad_pentagon(peak, y, cy, cz, conv_),
                              make_quad_pentagon(peak, z, dy, dz, conv_), targets, a))
                return true;
        }
      }
      // Both moves pivoting on the same vertex pair: paired transfer
      // pentagons whose auxiliary moves cancel.
      if (conv_.enable_transfer)
        if (commit_pair(make_transfer_pentagon(peak, m1, conv_),
                        make_transfer_pentagon(peak, m2, conv_), targets, a))
          return true;
    }

    if (b == 2 || b == 4) {
      // Detour through a cancelling auxiliary flip.  Each side is absorbed
      // either by a commuting square with the auxiliary move or — when the
      // side's edge meets the auxiliary edge at a degree-4 vertex, where
      // flips never commute — by the quad pentagon at that vertex.
      auto side_options = [&](const BistellarMove& m, const BistellarMove& aux, Vertex v) {
        std::vector<std::optional<ElementaryCycle>> opts;
        opts.push_back(make_commuting_square(peak, m, aux, conv_));
        if (m.sigma.size() == 2 && m.sigma.contains(v) &&
            peak.complex.vertex_degree(v) == 4 && conv_.enable_quad) {
          Vertex y = m.sigma[0] == v ? m.sigma[1] : m.sigma[0];
          Vertex z = aux.sigma[0] == v ? aux.sigma[1] : aux.sigma[0];
          opts.push_back(make_quad_pentagon(peak, v, y, z, conv_));
          opts.push_back(make_quad_pentagon(peak, v, z, y, conv_));
        }
        return opts;
      };
      for (Vertex v : peak.complex.vertices()) {
        for (const BistellarMove& aux : flips_at(peak, v)) {
          if (aux == m1 || aux == m2) continue;
          for (const auto& o1 : side_options(m1, aux, v))
            for (const auto& o2 : side_options(m2, aux, v))
              if (commit_pair(o1, o2, targets, a)) return true;
        }
      }
      return false;
    }

    return false;  // b == 0 should always take the direct square
  }

  CycleConventions conv_;
  Work work_;
  std::vector<std::pair<ElementaryCycle, int>> parts_;
  mpq_class value_{0};
};

}  // namespace

Decomposition decompose(const MoveChain& cycle, const CycleConventions& conv) {
  return Decomposer(cycle, conv).run();
}

mpq_class evaluate_cycle(const MoveChain& cycle, const CycleConventions& conv) {
  return decompose(cycle, conv).value;
}

bool verify_decomposition(const MoveChain& cycle, const Decomposition& d) {
  Work residual;
  for (std::size_t i = 0; i < cycle.moves.size(); ++i)
    add_edge(residual, cycle.states[i], cycle.moves[i], cycle.states[i + 1], +1);
  for (const auto& [e, mult] : d.parts) {
    const MoveChain& r = e.realization;
    for (std::size_t i = 0; i < r.moves.size(); ++i)
      add_edge(residual, r.states[i], r.moves[i], r.states[i + 1], -mult);
  }
  for (const FloorEdge& f : d.floor) {
    OrientedComplex after = apply_move(f.before, f.move);
    if (f.before.complex.num_vertices() > 5 || after.complex.num_vertices() > 5)
      return false;
    add_edge(residual, f.before, f.move, after, -f.coeff);
  }
  prune(residual);
  if (!residual.empty()) return false;
  std::map<std::uint64_t, int> flow;
  for (const FloorEdge& f : d.floor) {
    OrientedComplex after = apply_move(f.before, f.move);
    flow[f.before.fingerprint()] -= f.coeff;
    flow[after.fingerprint()] += f.coeff;
  }
  for (const auto& [fp, v] : flow)
    if (v != 0) return false;
  return true;
}

}  // namespace pclass
