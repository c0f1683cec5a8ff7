#include "m3/diagram.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <tuple>
#include <unordered_map>

namespace m3 {
namespace {

struct SlotRef {
  int crossing = -1;
  bool over = false;
};

// arc -> the pass it enters (in_at) / leaves (out_at)
struct ArcIndex {
  std::unordered_map<int, SlotRef> in_at, out_at;

  explicit ArcIndex(const LinkDiagram& d) {
    in_at.reserve(d.arc_component.size() * 2);
    out_at.reserve(d.arc_component.size() * 2);
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
      const Crossing& x = d.crossings[ci];
      in_at[x.u_in] = {ci, false};
      in_at[x.o_in] = {ci, true};
      out_at[x.u_out] = {ci, false};
      out_at[x.o_out] = {ci, true};
    }
  }

  int next(const LinkDiagram& d, int arc) const {
    auto it = in_at.find(arc);
    if (it == in_at.end()) throw Error(Err::ArcMismatch, "arc " + std::to_string(arc) + " has no in slot");
    const Crossing& x = d.crossings[it->second.crossing];
    return it->second.over ? x.o_out : x.u_out;
  }
};

int comp_of(const LinkDiagram& d, int arc) {
  auto it = d.arc_component.find(arc);
  if (it == d.arc_component.end())
    throw Error(Err::ArcMismatch, "slot references unknown arc " + std::to_string(arc));
  return it->second;
}

int fresh_arc_base(const LinkDiagram& d) {
  int mx = 0;
  if (!d.arc_component.empty()) mx = d.arc_component.rbegin()->first;
  return mx + 1;
}

}  // namespace

void validate(const LinkDiagram& d) {
  const int m = d.component_count;
  if (m < 1) throw Error(Err::ComponentGap, "component_count must be >= 1");

  std::map<int, int> in_count, out_count;
  for (const Crossing& x : d.crossings) {
    if (x.sign != 1 && x.sign != -1) throw Error(Err::BadCrossing, "crossing sign must be +1 or -1");
    if (x.u_in == x.u_out) throw Error(Err::ArcMismatch, "degenerate under pass (u_in == u_out)");
    if (x.o_in == x.o_out) throw Error(Err::ArcMismatch, "degenerate over pass (o_in == o_out)");
    ++in_count[x.u_in];
    ++in_count[x.o_in];
    ++out_count[x.u_out];
    ++out_count[x.o_out];
    if (comp_of(d, x.u_in) != comp_of(d, x.u_out))
      throw Error(Err::SlotComponentMix, "under slots straddle components");
    if (comp_of(d, x.o_in) != comp_of(d, x.o_out))
      throw Error(Err::SlotComponentMix, "over slots straddle components");
  }
  for (auto& [arc, comp] : d.arc_component) {
    if (comp < 1 || comp > m) throw Error(Err::ComponentGap, "arc component out of range");
    if (in_count[arc] != 1)
      throw Error(Err::ArcMismatch, "arc " + std::to_string(arc) + " used " +
                                        std::to_string(in_count[arc]) + " times as an in slot");
    if (out_count[arc] != 1)
      throw Error(Err::ArcMismatch, "arc " + std::to_string(arc) + " used " +
                                        std::to_string(out_count[arc]) + " times as an out slot");
  }
  for (auto& [arc, cnt] : in_count)
    if (!d.arc_component.count(arc))
      throw Error(Err::ArcMismatch, "slot references unknown arc " + std::to_string(arc));
  for (auto& [arc, cnt] : out_count)
    if (!d.arc_component.count(arc))
      throw Error(Err::ArcMismatch, "slot references unknown arc " + std::to_string(arc));

  std::vector<int> comp_arcs(m + 1, 0), comp_free(m + 1, 0);
  for (auto& [arc, comp] : d.arc_component) ++comp_arcs[comp];
  for (auto& [comp, cnt] : d.free_loops) {
    if (comp < 1 || comp > m) throw Error(Err::ComponentGap, "free loop component out of range");
    if (cnt != 1) throw Error(Err::ComponentGap, "free loop count must be 1 per component");
    comp_free[comp] = cnt;
  }
  for (int i = 1; i <= m; ++i) {
    if (comp_arcs[i] == 0 && comp_free[i] == 0)
      throw Error(Err::ComponentGap, "component " + std::to_string(i) + " unused");
    if (comp_arcs[i] > 0 && comp_free[i] > 0)
      throw Error(Err::ComponentGap, "component " + std::to_string(i) + " has both arcs and a free loop");
  }

  // each component's arcs must close into a single cycle
  ArcIndex idx(d);
  std::map<int, int> comp_lowest;
  for (auto& [arc, comp] : d.arc_component)
    if (!comp_lowest.count(comp)) comp_lowest[comp] = arc;
  for (auto& [comp, start] : comp_lowest) {
    int cur = start, seen = 0;
    do {
      if (comp_of(d, cur) != comp) throw Error(Err::SlotComponentMix, "strand wanders across components");
      cur = idx.next(d, cur);
      if (++seen > static_cast<int>(d.arc_component.size())) break;
    } while (cur != start);
    if (seen != comp_arcs[comp])
      throw Error(Err::ComponentGap, "component " + std::to_string(comp) + " is not a single circle");
  }
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  LinkingMatrix lk(d.component_count);
  std::vector<long long> acc(static_cast<size_t>(d.component_count) * d.component_count, 0);
  for (const Crossing& x : d.crossings) {
    int cu = comp_of(d, x.u_in), co = comp_of(d, x.o_in);
    if (cu != co) {
      acc[static_cast<size_t>(cu - 1) * d.component_count + (co - 1)] += x.sign;
      acc[static_cast<size_t>(co - 1) * d.component_count + (cu - 1)] += x.sign;
    }
  }
  for (int i = 1; i <= d.component_count; ++i)
    for (int j = i + 1; j <= d.component_count; ++j) {
      long long s = acc[static_cast<size_t>(i - 1) * d.component_count + (j - 1)];
      if (s % 2 != 0) throw Error(Err::ArcMismatch, "odd signed crossing count between components");
      lk.set(i, j, s / 2);
    }
  return lk;
}

long long writhe(const LinkDiagram& d, int comp) {
  long long w = 0;
  for (const Crossing& x : d.crossings)
    if (comp_of(d, x.u_in) == comp && comp_of(d, x.o_in) == comp) w += x.sign;
  return w;
}

namespace detail {

int next_arc(const LinkDiagram& d, int arc) { return ArcIndex(d).next(d, arc); }

bool is_split(const LinkDiagram& d) {
  const int m = d.component_count;
  if (m <= 1) return false;
  std::vector<int> parent(m + 1);
  for (int i = 0; i <= m; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Crossing& x : d.crossings) {
    int a = find(comp_of(d, x.u_in)), b = find(comp_of(d, x.o_in));
    if (a != b) parent[a] = b;
  }
  int root = find(1);
  for (int i = 2; i <= m; ++i)
    if (find(i) != root) return true;
  return false;
}

void recompute_components(LinkDiagram& d, const std::map<int, int>& old_arc_component,
                          const std::map<int, int>& old_free_loop_comps) {
  ArcIndex idx(d);
  // cycles of arcs
  std::map<int, int> cycle_of;  // arc -> cycle id
  struct Piece {
    int old_comp;
    long long order;  // min arc id, or large for free loops
    bool free_loop;
    std::vector<int> arcs;
  };
  std::vector<Piece> pieces;
  for (auto& [arc, oldc] : old_arc_component) {
    if (cycle_of.count(arc)) continue;
    Piece p{oldc, arc, false, {}};
    int cur = arc;
    do {
      cycle_of[cur] = static_cast<int>(pieces.size());
      p.arcs.push_back(cur);
      auto it = old_arc_component.find(cur);
      p.old_comp = std::min(p.old_comp, it->second);
      cur = idx.next(d, cur);
    } while (cur != arc);
    pieces.push_back(std::move(p));
  }
  for (auto& [comp, cnt] : old_free_loop_comps) {
    for (int k = 0; k < cnt; ++k) pieces.push_back(Piece{comp, 1LL << 40, true, {}});
  }
  std::vector<int> order(pieces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (pieces[a].old_comp != pieces[b].old_comp) return pieces[a].old_comp < pieces[b].old_comp;
    return pieces[a].order < pieces[b].order;
  });
  d.arc_component.clear();
  d.free_loops.clear();
  d.component_count = static_cast<int>(pieces.size());
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const Piece& p = pieces[order[rank]];
    int comp = static_cast<int>(rank) + 1;
    if (p.free_loop)
      d.free_loops[comp] = 1;
    else
      for (int a : p.arcs) d.arc_component[a] = comp;
  }
}

LinkDiagram switch_raw(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(d.crossings.size()))
    throw Error(Err::BadCrossing, "crossing index out of range");
  LinkDiagram r = d;
  Crossing& x = r.crossings[crossing];
  std::swap(x.u_in, x.o_in);
  std::swap(x.u_out, x.o_out);
  x.sign = -x.sign;
  return r;
}

LinkDiagram smooth_raw(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(d.crossings.size()))
    throw Error(Err::BadCrossing, "crossing index out of range");
  const Crossing X = d.crossings[crossing];
  LinkDiagram r;
  r.component_count = d.component_count;
  r.crossings.reserve(d.crossings.size() - 1);
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
    if (i != crossing) r.crossings.push_back(d.crossings[i]);
  std::map<int, int> arcs = d.arc_component;  // arc -> old comp (working copy)
  std::map<int, int> freed;                   // old comp -> count of new free circles

  // oriented reconnection: u_in continues into o_out's head, o_in into u_out's head
  auto splice = [&](int keep, int drop) {
    if (keep == drop) {  // the piece closes into a crossing-free circle
      ++freed[arcs.at(keep)];
      arcs.erase(keep);
      return;
    }
    for (Crossing& y : r.crossings) {
      if (y.u_in == drop) y.u_in = keep;
      if (y.o_in == drop) y.o_in = keep;
      if (y.u_out == drop) y.u_out = keep;
      if (y.o_out == drop) y.o_out = keep;
    }
    arcs.erase(drop);
  };
  splice(X.u_in, X.o_out);
  splice(X.o_in, X.u_out);

  std::map<int, int> old_free = d.free_loops;  // comp -> 1
  std::map<int, int> free_comps;
  for (auto& [c, cnt] : old_free) free_comps[c] += cnt;
  for (auto& [c, cnt] : freed) free_comps[c] += cnt;

  r.arc_component = arcs;
  recompute_components(r, arcs, free_comps);
  return r;
}

LinkDiagram insert_kink(const LinkDiagram& d, int comp, int sign) {
  LinkDiagram r = d;
  int a = -1;
  for (auto& [arc, c] : r.arc_component)
    if (c == comp) { a = arc; break; }
  if (a < 0) throw Error(Err::BadComponent, "insert_kink: component has no arcs");
  int base = fresh_arc_base(r);
  int q = base, nr = base + 1;
  // a's old head slot now receives nr
  ArcIndex idx(r);
  SlotRef head = idx.in_at.at(a);
  Crossing& hx = r.crossings[head.crossing];
  if (head.over) hx.o_in = nr; else hx.u_in = nr;
  r.crossings.push_back(Crossing{sign, a, q, q, nr});
  r.arc_component[q] = comp;
  r.arc_component[nr] = comp;
  return r;
}

// Blackboard cable grid; normalize_writhe controls the compensating kinks.
LinkDiagram cable_core(const LinkDiagram& d, const std::vector<int>& mult, bool connected,
                       bool normalize_writhe) {
  const int m = d.component_count;
  if (static_cast<int>(mult.size()) != m)
    throw Error(Err::BadMultiplicity, "multiplicity vector length != component count");
  for (int v : mult)
    if (v < 1) throw Error(Err::BadMultiplicity, "cable multiplicity must be >= 1");

  LinkDiagram work = d;
  if (normalize_writhe) {
    for (int i = 1; i <= m; ++i) {
      if (mult[i - 1] < 2) continue;  // a 1-cable is the identity; leave the component alone
      long long w = writhe(work, i);
      int s = w > 0 ? -1 : 1;
      for (long long k = 0; k < std::llabs(w); ++k) work = insert_kink(work, i, s);
    }
  }

  LinkDiagram r;
  int next_id = 1;
  std::map<int, std::vector<int>> copies;  // original arc -> copy arcs (1..lam)
  auto copy_arc = [&](int arc) -> std::vector<int>& {
    auto it = copies.find(arc);
    if (it != copies.end()) return it->second;
    int lam = mult[comp_of(work, arc) - 1];
    std::vector<int> v(lam);
    for (int s = 0; s < lam; ++s) v[s] = next_id++;
    return copies.emplace(arc, std::move(v)).first->second;
  };

  // component index of copy s (1-based) of original component i
  std::vector<int> offset(m + 1, 0);
  for (int i = 1; i <= m; ++i) offset[i] = offset[i - 1] + mult[i - 1];
  auto comp_copy = [&](int i, int s) { return connected ? i : offset[i - 1] + s; };

  struct NewArc {
    int comp;
  };
  std::map<int, int> new_arc_comp;
  auto reg = [&](int arc, int comp) { new_arc_comp[arc] = comp; };

  for (const Crossing& X : work.crossings) {
    int iu = comp_of(work, X.u_in), io = comp_of(work, X.o_in);
    int lu = mult[iu - 1], lo = mult[io - 1];
    int eps = X.sign;
    std::vector<std::vector<int>> G(lu + 1, std::vector<int>(lo + 1, -1));
    size_t base = r.crossings.size();
    for (int s = 1; s <= lu; ++s)
      for (int t = 1; t <= lo; ++t) {
        G[s][t] = static_cast<int>(r.crossings.size());
        r.crossings.push_back(Crossing{eps, 0, 0, 0, 0});
      }
    (void)base;
    auto& uin_c = copy_arc(X.u_in);
    auto& uout_c = copy_arc(X.u_out);
    auto& oin_c = copy_arc(X.o_in);
    auto& oout_c = copy_arc(X.o_out);
    // under copy s crosses the over copies in an orientation-dependent order
    for (int s = 1; s <= lu; ++s) {
      int prev = uin_c[s - 1];
      reg(prev, comp_copy(iu, s));
      for (int k = 0; k < lo; ++k) {
        int t = (eps > 0) ? (lo - k) : (k + 1);
        Crossing& g = r.crossings[G[s][t]];
        g.u_in = prev;
        if (k + 1 == lo) {
          g.u_out = uout_c[s - 1];
          reg(g.u_out, comp_copy(iu, s));
        } else {
          g.u_out = next_id++;
          reg(g.u_out, comp_copy(iu, s));
        }
        prev = g.u_out;
      }
    }
    for (int t = 1; t <= lo; ++t) {
      int prev = oin_c[t - 1];
      reg(prev, comp_copy(io, t));
      for (int k = 0; k < lu; ++k) {
        int s = (eps > 0) ? (k + 1) : (lu - k);
        Crossing& g = r.crossings[G[s][t]];
        g.o_in = prev;
        if (k + 1 == lu) {
          g.o_out = oout_c[t - 1];
          reg(g.o_out, comp_copy(io, t));
        } else {
          g.o_out = next_id++;
          reg(g.o_out, comp_copy(io, t));
        }
        prev = g.o_out;
      }
    }
  }

  // close each cabled component into one circle with a single-carrier block
  if (connected) {
    for (int i = 1; i <= m; ++i) {
      int lam = mult[i - 1];
      if (lam < 2) continue;
      int astar = -1;
      for (auto& [arc, c] : work.arc_component)
        if (c == i) { astar = arc; break; }
      if (astar < 0) continue;  // free-loop component
      auto& ac = copies.at(astar);
      std::vector<int> tails(lam + 1), heads(lam + 1);
      for (int s = 1; s <= lam; ++s) {
        int dead = ac[s - 1];
        tails[s] = next_id++;
        heads[s] = next_id++;
        reg(tails[s], comp_copy(i, s));
        reg(heads[s], comp_copy(i, s));
        bool seen_out = false, seen_in = false;
        for (Crossing& y : r.crossings) {
          if (!seen_out) {
            if (y.u_out == dead) { y.u_out = tails[s]; seen_out = true; }
            else if (y.o_out == dead) { y.o_out = tails[s]; seen_out = true; }
          }
          if (!seen_in) {
            if (y.u_in == dead) { y.u_in = heads[s]; seen_in = true; }
            else if (y.o_in == dead) { y.o_in = heads[s]; seen_in = true; }
          }
        }
        if (!seen_in || !seen_out) throw Error(Err::ArcMismatch, "cable: lost arc copy");
        new_arc_comp.erase(dead);
      }
      // carrier = copy 1, passing over copies 2..lam; copy s rejoins head s-1
      int carrier = tails[1];
      for (int s = 2; s <= lam; ++s) {
        int out = (s == lam) ? heads[lam] : next_id++;
        if (s != lam) reg(out, comp_copy(i, 1));
        r.crossings.push_back(Crossing{+1, tails[s], heads[s - 1], carrier, out});
        carrier = out;
      }
    }
  }

  // when connected, copy components all collapse onto the original index
  if (connected) {
    r.component_count = m;
  } else {
    r.component_count = offset[m];
  }
  r.arc_component.clear();
  for (auto& [arc, c] : new_arc_comp) r.arc_component[arc] = c;

  // free loops: a crossing-free circle cables to lam parallel crossing-free circles
  for (auto& [comp, cnt] : work.free_loops) {
    int lam = mult[comp - 1];
    if (connected) {
      r.free_loops[comp] = 1;
    } else {
      for (int s = 1; s <= lam; ++s) r.free_loops[comp_copy(comp, s)] = 1;
    }
  }

  return renumber(r);
}

bool sphere_consistent(const LinkDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return true;
  // half-edges: 4 per crossing, id = 4*ci + k with k indexing the CCW rotation
  // sign +1: (o_in, u_in, o_out, u_out); sign -1: (o_in, u_out, o_out, u_in)
  // arc a joins the half-edge where a leaves (out slot) to where it enters.
  std::unordered_map<int, int> arc_out_he, arc_in_he;
  auto slot_order = [](const Crossing& x) {
    return x.sign > 0 ? std::array<int, 4>{x.o_in, x.u_in, x.o_out, x.u_out}
                      : std::array<int, 4>{x.o_in, x.u_out, x.o_out, x.u_in};
  };
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& x = d.crossings[ci];
    auto ord = slot_order(x);
    for (int k = 0; k < 4; ++k) {
      int he = 4 * ci + k;
      int arc = ord[k];
      // rotation positions of the out slots: (o_out, u_out) sit at 2,3 for
      // positive crossings and (u_out, o_out) at 1,2 for negative ones
      bool is_out = x.sign > 0 ? (k == 2 || k == 3) : (k == 1 || k == 2);
      if (is_out)
        arc_out_he[arc] = he;
      else
        arc_in_he[arc] = he;
    }
  }
  // alpha: other end of the same arc; sigma: next half-edge CCW at the vertex
  auto alpha = [&](int he) {
    int ci = he / 4, k = he % 4;
    const Crossing& x = d.crossings[ci];
    auto ord = slot_order(x);
    int arc = ord[k];
    bool is_out = x.sign > 0 ? (k == 2 || k == 3) : (k == 1 || k == 2);
    return is_out ? arc_in_he.at(arc) : arc_out_he.at(arc);
  };
  auto sigma = [&](int he) { return (he & ~3) | ((he + 1) & 3); };

  // faces of the rotation system
  std::vector<char> seen(4 * n, 0);
  long long faces = 0;
  for (int h = 0; h < 4 * n; ++h) {
    if (seen[h]) continue;
    ++faces;
    int cur = h;
    do {
      seen[cur] = 1;
      cur = sigma(alpha(cur));
    } while (cur != h);
  }
  // connected pieces of the crossing graph (via shared arcs)
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::unordered_map<int, int> arc_first;
  for (int ci = 0; ci < n; ++ci) {
    for (int arc : {d.crossings[ci].u_in, d.crossings[ci].o_in}) {
      auto [it, fresh] = arc_first.emplace(arc, ci);
      if (!fresh) {
        int a = find(it->second), b = find(ci);
        if (a != b) parent[a] = b;
      }
    }
    for (int arc : {d.crossings[ci].u_out, d.crossings[ci].o_out}) {
      auto [it, fresh] = arc_first.emplace(arc, ci);
      if (!fresh) {
        int a = find(it->second), b = find(ci);
        if (a != b) parent[a] = b;
      }
    }
  }
  long long pieces = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++pieces;
  // V - E + F = 2 per piece; V = n, E = 2n
  return faces == 2 * pieces + n;
}

}  // namespace detail

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  if (comp < 1 || comp > d.component_count)
    throw Error(Err::BadComponent, "component index out of range");
  LinkDiagram r = d;
  for (Crossing& x : r.crossings) {
    bool under = comp_of(d, x.u_in) == comp;
    bool over = comp_of(d, x.o_in) == comp;
    if (under) std::swap(x.u_in, x.u_out);
    if (over) std::swap(x.o_in, x.o_out);
    if (under != over) x.sign = -x.sign;
  }
  return renumber(r);
}

LinkDiagram reverse_all(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (Crossing& x : r.crossings) {
    std::swap(x.u_in, x.u_out);
    std::swap(x.o_in, x.o_out);
  }
  return renumber(r);
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (Crossing& x : r.crossings) {
    std::swap(x.u_in, x.o_in);
    std::swap(x.u_out, x.o_out);
    x.sign = -x.sign;
  }
  return renumber(r);
}

LinkDiagram delete_component(const LinkDiagram& d, int comp) {
  const int m = d.component_count;
  if (comp < 1 || comp > m) throw Error(Err::BadComponent, "component index out of range");

  std::map<int, int> parent;  // arc merging (dead arc -> absorbing arc)
  std::function<int(int)> find = [&](int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    return it->second = find(it->second);
  };
  std::set<int> freed_comps;

  LinkDiagram r;
  for (const Crossing& x : d.crossings) {
    int cu = comp_of(d, x.u_in), co = comp_of(d, x.o_in);
    if (cu == comp && co == comp) continue;
    if (cu == comp) {  // over strand survives; its pass through this crossing dissolves
      int keep = find(x.o_in), drop = find(x.o_out);
      if (keep == drop) freed_comps.insert(co);
      else parent[drop] = keep;
      continue;
    }
    if (co == comp) {
      int keep = find(x.u_in), drop = find(x.u_out);
      if (keep == drop) freed_comps.insert(cu);
      else parent[drop] = keep;
      continue;
    }
    r.crossings.push_back(x);
  }
  for (Crossing& x : r.crossings) {
    x.u_in = find(x.u_in);
    x.u_out = find(x.u_out);
    x.o_in = find(x.o_in);
    x.o_out = find(x.o_out);
  }
  std::set<int> used;
  for (const Crossing& x : r.crossings) {
    used.insert(x.u_in);
    used.insert(x.u_out);
    used.insert(x.o_in);
    used.insert(x.o_out);
  }
  std::vector<int> comp_passes(m + 1, 0);
  for (const Crossing& x : r.crossings) {
    ++comp_passes[comp_of(d, x.u_in)];
    ++comp_passes[comp_of(d, x.o_in)];
  }
  auto shift = [&](int c) { return c > comp ? c - 1 : c; };
  for (auto& [arc, c] : d.arc_component)
    if (c != comp && used.count(find(arc)) && find(arc) == arc) r.arc_component[arc] = shift(c);
  for (int c = 1; c <= m; ++c) {
    if (c == comp) continue;
    bool had_arcs = false;
    for (auto& [arc, cc] : d.arc_component)
      if (cc == c) { had_arcs = true; break; }
    if ((had_arcs && comp_passes[c] == 0) || freed_comps.count(c)) r.free_loops[shift(c)] = 1;
  }
  for (auto& [c, cnt] : d.free_loops)
    if (c != comp) r.free_loops[shift(c)] = cnt;
  r.component_count = m - 1;
  if (r.component_count == 0) return r;
  return renumber(r);
}

LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& perm) {
  const int m = d.component_count;
  if (static_cast<int>(perm.size()) != m) throw Error(Err::BadComponent, "permutation length != m");
  std::vector<bool> hit(m + 1, false);
  for (int v : perm) {
    if (v < 1 || v > m || hit[v]) throw Error(Err::BadComponent, "not a permutation of 1..m");
    hit[v] = true;
  }
  LinkDiagram r = d;
  for (auto& [arc, c] : r.arc_component) c = perm[c - 1];
  std::map<int, int> fl;
  for (auto& [c, cnt] : r.free_loops) fl[perm[c - 1]] = cnt;
  r.free_loops = fl;
  return renumber(r);
}

LinkDiagram skein_switch(const LinkDiagram& d, int crossing) {
  return renumber(detail::switch_raw(d, crossing));
}

LinkDiagram skein_smooth(const LinkDiagram& d, int crossing) {
  return renumber(detail::smooth_raw(d, crossing));
}

LinkDiagram cable(const LinkDiagram& d, const std::vector<int>& mult, bool connected) {
  return detail::cable_core(d, mult, connected, true);
}

LinkDiagram renumber(const LinkDiagram& d) {
  ArcIndex idx(d);
  std::map<int, int> lowest;  // component -> lowest arc id
  for (auto& [arc, c] : d.arc_component)
    if (!lowest.count(c)) lowest[c] = arc;  // map iterates ascending arc ids
  std::unordered_map<int, int> newid;
  newid.reserve(d.arc_component.size() * 2);
  int counter = 1;
  for (int c = 1; c <= d.component_count; ++c) {
    auto it = lowest.find(c);
    if (it == lowest.end()) continue;
    int start = it->second, cur = start;
    do {
      newid[cur] = counter++;
      cur = idx.next(d, cur);
    } while (cur != start);
  }
  LinkDiagram r;
  r.component_count = d.component_count;
  r.free_loops = d.free_loops;
  for (auto& [arc, c] : d.arc_component) r.arc_component[newid.at(arc)] = c;
  r.crossings = d.crossings;
  for (Crossing& x : r.crossings) {
    x.u_in = newid.at(x.u_in);
    x.u_out = newid.at(x.u_out);
    x.o_in = newid.at(x.o_in);
    x.o_out = newid.at(x.o_out);
  }
  std::sort(r.crossings.begin(), r.crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.u_in, a.u_out, a.o_in, a.o_out, a.sign) <
           std::tie(b.u_in, b.u_out, b.o_in, b.o_out, b.sign);
  });
  return r;
}

std::string canonical_key(const LinkDiagram& d) {
  ArcIndex idx(d);
  std::vector<int> tokens;
  tokens.push_back(d.component_count);
  for (auto& [c, cnt] : d.free_loops) {
    tokens.push_back(-c);  // free loop marker
  }

  // emission position per crossing pass; 0 = not yet emitted
  std::vector<int> first_pos(d.crossings.size(), 0);
  int global_pos = 0;

  std::map<int, std::vector<int>> comp_arcs;
  for (auto& [arc, c] : d.arc_component) comp_arcs[c].push_back(arc);

  for (int c = 1; c <= d.component_count; ++c) {
    auto it = comp_arcs.find(c);
    if (it == comp_arcs.end()) continue;
    const std::vector<int>& arcs = it->second;

    auto segment = [&](int start, std::vector<int>& out) {
      // simulate the walk of this component from `start`; refs to passes emitted
      // in this very segment get tentative positions
      std::unordered_map<int, int> local_pos;  // crossing -> tentative first position
      int cur = start, pos = global_pos;
      do {
        auto sr = idx.in_at.at(cur);
        const Crossing& x = d.crossings[sr.crossing];
        ++pos;
        int ref = first_pos[sr.crossing];
        if (ref == 0) {
          auto lp = local_pos.find(sr.crossing);
          if (lp != local_pos.end()) ref = lp->second;
          else local_pos[sr.crossing] = pos;
        }
        out.push_back(sr.over ? 1 : 0);
        out.push_back(x.sign);
        out.push_back(ref);
        cur = sr.over ? x.o_out : x.u_out;
      } while (cur != start);
    };

    int best_start = arcs.front();
    std::vector<int> best;
    segment(best_start, best);
    for (size_t i = 1; i < arcs.size(); ++i) {
      std::vector<int> cand;
      segment(arcs[i], cand);
      if (cand < best) {
        best = std::move(cand);
        best_start = arcs[i];
      }
    }
    // commit: replay the walk to fix real positions
    {
      int cur = best_start;
      do {
        auto sr = idx.in_at.at(cur);
        const Crossing& x = d.crossings[sr.crossing];
        ++global_pos;
        if (first_pos[sr.crossing] == 0) first_pos[sr.crossing] = global_pos;
        cur = sr.over ? x.o_out : x.u_out;
      } while (cur != best_start);
    }
    tokens.push_back(1 << 20);  // component separator
    tokens.insert(tokens.end(), best.begin(), best.end());
  }

  std::string key;
  key.resize(tokens.size() * sizeof(int));
  std::memcpy(key.data(), tokens.data(), key.size());
  return key;
}

}  // namespace m3
