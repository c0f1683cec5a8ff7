// Oriented link diagrams as abstract signed-crossing data (Gauss-code style):
// crossings carry explicit signs and the four arc slots of their two strand
// passes; arcs are positive integers, each used exactly once as an "in" slot
// and once as an "out" slot. Planarity/realizability is never checked; every
// diagram this library constructs (braid closures, cables, reversals, skein
// resolutions) is realizable by construction.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace m3 {

enum class Err {
  ArcMismatch,
  ComponentGap,
  SlotComponentMix,
  BadComponent,
  BadCrossing,
  BadMultiplicity,
  BadBraid,
  EmptyDiagram,
  ParityViolation,
  WrongComponentCount,
  ZeroLinking,
  NotGood,
  TooLarge,
  BadFigure,
  Parse,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct Crossing {
  int sign = 1;   // +1 or -1, stored explicitly (never derived from embedding data)
  int u_in = 0;   // arc entering on the under-strand
  int u_out = 0;  // arc leaving on the under-strand
  int o_in = 0;   // arc entering on the over-strand
  int o_out = 0;  // arc leaving on the over-strand
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::map<int, int> arc_component;  // arc id -> component index (1..m)
  int component_count = 0;
  std::map<int, int> free_loops;  // component index -> 1 for a crossing-free circle
};

struct LinkingMatrix {
  int m = 0;
  std::vector<long long> e;  // m*m, symmetric, diagonal zero

  explicit LinkingMatrix(int m_ = 0) : m(m_), e(static_cast<size_t>(m_) * m_, 0) {}
  long long at(int i, int j) const { return e[static_cast<size_t>(i - 1) * m + (j - 1)]; }
  void set(int i, int j, long long v) {
    e[static_cast<size_t>(i - 1) * m + (j - 1)] = v;
    e[static_cast<size_t>(j - 1) * m + (i - 1)] = v;
  }
  friend bool operator==(const LinkingMatrix& a, const LinkingMatrix& b) {
    return a.m == b.m && a.e == b.e;
  }
};

// Throws Error on any violated invariant (ArcMismatch / ComponentGap / SlotComponentMix).
void validate(const LinkDiagram& d);

LinkingMatrix linking_matrix(const LinkDiagram& d);

// Sum of crossing signs over self-crossings of one component.
long long writhe(const LinkDiagram& d, int comp);

LinkDiagram reverse_component(const LinkDiagram& d, int comp);
LinkDiagram reverse_all(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram delete_component(const LinkDiagram& d, int comp);
// perm[i-1] = new index of old component i; must be a bijection on 1..m.
LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& perm);

// Crossing ops take an index into d.crossings.
LinkDiagram skein_switch(const LinkDiagram& d, int crossing);
LinkDiagram skein_smooth(const LinkDiagram& d, int crossing);

// Zero-writhe blackboard cable: each component's self-writhe is first cancelled
// with compensating kinks, then every arc of component i becomes mult[i-1]
// parallel strands. connected=true closes each cabled component into a single
// circle through a one-carrier permutation block.
LinkDiagram cable(const LinkDiagram& d, const std::vector<int>& mult, bool connected);

// Deterministic arc renumbering: walk each component from its lowest arc id,
// components kept in order; crossing list sorted. All public operations return
// renumbered diagrams so results are reproducible byte for byte.
LinkDiagram renumber(const LinkDiagram& d);

// Label-free encoding used as memo key: per component the start arc is chosen
// to minimize the encoded pass sequence, so equal diagrams that differ only by
// arc relabeling (component order preserved) share a key.
std::string canonical_key(const LinkDiagram& d);

namespace detail {
// Raw variants skip the final renumbering (hot paths of the skein engine).
LinkDiagram switch_raw(const LinkDiagram& d, int crossing);
LinkDiagram smooth_raw(const LinkDiagram& d, int crossing);
// Arc successor along its strand (the out-arc of the pass the arc enters).
int next_arc(const LinkDiagram& d, int arc);
// true if the crossings touch fewer than all components (some sublink splits off)
bool is_split(const LinkDiagram& d);
// Recompute components from arc cycles after a structural edit. Keys order the
// new components by (smallest old component index, smallest old arc id).
void recompute_components(LinkDiagram& d, const std::map<int, int>& old_arc_component,
                          const std::map<int, int>& old_free_loop_comps);
LinkDiagram insert_kink(const LinkDiagram& d, int comp, int sign);
// Cable grid with the writhe normalization made optional (family generators
// supply their own framing kinks).
LinkDiagram cable_core(const LinkDiagram& d, const std::vector<int>& mult, bool connected,
                       bool normalize_writhe);
// Diagnostic: the crossing signs induce a rotation system on the underlying
// 4-valent graph; a diagram of a genuine plane projection has Euler
// characteristic 2 on every connected piece. Used to vet generator wirings in
// the tests; validate() deliberately does not call this.
bool sphere_consistent(const LinkDiagram& d);
}  // namespace detail

}  // namespace m3
