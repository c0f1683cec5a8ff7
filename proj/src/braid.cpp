#include "m3/braid.hpp"

#include <algorithm>
#include <numeric>

namespace m3 {

void validate(const BraidWord& b) {
  if (b.strands < 1) throw Error(Err::BadBraid, "braid needs at least one strand");
  for (int k : b.letters) {
    if (k == 0) throw Error(Err::BadBraid, "braid letter 0");
    if (std::abs(k) >= b.strands)
      throw Error(Err::BadBraid, "braid letter |" + std::to_string(k) + "| >= strand count");
  }
}

LinkDiagram braid_closure(const BraidWord& b) {
  validate(b);
  const int n = b.strands;
  LinkDiagram d;

  std::vector<int> init(n + 1), current(n + 1), strand_at(n + 1);
  int next_id = 1;
  for (int p = 1; p <= n; ++p) {
    init[p] = next_id++;
    current[p] = init[p];
    strand_at[p] = p;
  }
  std::vector<int> arc_strand(init.size());
  std::map<int, int> arc_to_strand;
  for (int p = 1; p <= n; ++p) arc_to_strand[init[p]] = p;

  for (int L : b.letters) {
    int k = std::abs(L);
    int a = current[k], bb = current[k + 1];
    int x = next_id++;  // continuation of the strand from position k (moves to k+1)
    int y = next_id++;  // continuation of the strand from position k+1 (moves to k)
    if (L > 0)
      d.crossings.push_back(Crossing{+1, bb, y, a, x});
    else
      d.crossings.push_back(Crossing{-1, a, x, bb, y});
    arc_to_strand[x] = strand_at[k];
    arc_to_strand[y] = strand_at[k + 1];
    current[k + 1] = x;
    current[k] = y;
    std::swap(strand_at[k], strand_at[k + 1]);
  }

  // trace closure: the final arc at position p is the initial arc of position p
  std::vector<bool> untouched(n + 1, false);
  for (int p = 1; p <= n; ++p) {
    if (current[p] == init[p]) {
      untouched[p] = true;
      continue;
    }
    int dead = current[p], keep = init[p];
    for (Crossing& x : d.crossings) {
      if (x.u_out == dead) x.u_out = keep;
      if (x.o_out == dead) x.o_out = keep;
    }
    arc_to_strand.erase(dead);
  }

  // components = cycles of strand -> its end position
  std::vector<int> end_pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) end_pos[strand_at[p]] = p;
  std::vector<int> comp(n + 1, 0);
  int m = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    ++m;
    int cur = s;
    while (!comp[cur]) {
      comp[cur] = m;
      cur = end_pos[cur];
    }
  }
  d.component_count = m;
  for (auto& [arc, s] : arc_to_strand) {
    if (untouched[s] && arc == init[s]) continue;  // becomes a free loop below
    d.arc_component[arc] = comp[s];
  }
  for (int p = 1; p <= n; ++p)
    if (untouched[p]) d.free_loops[comp[p]] = 1;

  return renumber(d);
}

}  // namespace m3
