#include "m3/families.hpp"

#include <cstdlib>

namespace m3 {
namespace {

struct PassRef {
  int crossing;
  bool over;
};

// Stitch components from their ordered pass sequences; crossings arrive with
// signs set and slots empty.
LinkDiagram assemble(int m, const std::vector<std::vector<PassRef>>& seqs,
                     std::vector<Crossing> crossings) {
  LinkDiagram d;
  d.component_count = m;
  d.crossings = std::move(crossings);
  int next = 1;
  for (int i = 0; i < m; ++i) {
    const auto& seq = seqs[i];
    if (seq.empty()) {
      d.free_loops[i + 1] = 1;
      continue;
    }
    const int k = static_cast<int>(seq.size());
    std::vector<int> arcs(k);
    for (int j = 0; j < k; ++j) {
      arcs[j] = next++;
      d.arc_component[arcs[j]] = i + 1;
    }
    for (int j = 0; j < k; ++j) {
      int in_arc = arcs[(j + k - 1) % k];
      int out_arc = arcs[j];
      Crossing& x = d.crossings[seq[j].crossing];
      if (seq[j].over) {
        x.o_in = in_arc;
        x.o_out = out_arc;
      } else {
        x.u_in = in_arc;
        x.u_out = out_arc;
      }
    }
  }
  return renumber(d);
}

}  // namespace

LinkDiagram hopf2(long long p) {
  BraidWord b;
  b.strands = 2;
  int letter = p >= 0 ? 1 : -1;
  for (long long i = 0; i < 2 * std::llabs(p); ++i) b.letters.push_back(letter);
  return braid_closure(b);
}

LinkDiagram hopf2_op(long long p) { return reverse_component(hopf2(-p), 2); }

LinkDiagram l0(long long a, long long b, long long c) {
  // three round circles in a chain; adjacent circles face each other with
  // opposite strand directions, so stacked clasps give the c1 = 0 pair type
  struct Region {
    int X, Y;
    long long q;
  };
  const Region regions[3] = {{1, 2, c}, {2, 3, a}, {3, 1, b}};
  std::vector<Crossing> crossings;
  std::vector<std::vector<PassRef>> xpass(3), ypass(3);
  for (int r = 0; r < 3; ++r) {
    long long q = regions[r].q;
    int s = q >= 0 ? 1 : -1;
    std::vector<std::vector<PassRef>> yclasp;  // per clasp, Y's two passes
    for (long long i = 0; i < std::llabs(q); ++i) {
      int cA = static_cast<int>(crossings.size());
      crossings.push_back(Crossing{s, 0, 0, 0, 0});
      int cB = static_cast<int>(crossings.size());
      crossings.push_back(Crossing{s, 0, 0, 0, 0});
      bool x_under_first = (s < 0);
      xpass[r].push_back({cA, !x_under_first});
      xpass[r].push_back({cB, x_under_first});
      yclasp.push_back({{cB, !x_under_first}, {cA, x_under_first}});
    }
    // Y runs through the stack, and through each clasp, the opposite way
    for (auto it = yclasp.rbegin(); it != yclasp.rend(); ++it) {
      ypass[r].push_back((*it)[0]);
      ypass[r].push_back((*it)[1]);
    }
  }
  std::vector<std::vector<PassRef>> seqs(3);
  for (int comp = 1; comp <= 3; ++comp) {
    for (int r = 0; r < 3; ++r)
      if (regions[r].X == comp)
        for (auto& pr : xpass[r]) seqs[comp - 1].push_back(pr);
    for (int r = 0; r < 3; ++r)
      if (regions[r].Y == comp)
        for (auto& pr : ypass[r]) seqs[comp - 1].push_back(pr);
  }
  return assemble(3, seqs, std::move(crossings));
}

LinkDiagram unknot_with_kinks(long long p) {
  LinkDiagram d;
  d.component_count = 1;
  if (p == 0) {
    d.free_loops[1] = 1;
    return d;
  }
  const int s = p > 0 ? 1 : -1;
  const int n = static_cast<int>(std::llabs(p));
  // kink i: comes in on arc A_i, loops on Q_i, leaves on A_(i+1)
  for (int i = 0; i < n; ++i) {
    int A = 2 * i + 1, Q = 2 * i + 2, Anext = 2 * ((i + 1) % n) + 1;
    d.crossings.push_back(Crossing{s, A, Q, Q, Anext});
    d.arc_component[A] = 1;
    d.arc_component[Q] = 1;
  }
  return renumber(d);
}

LinkDiagram hopf3(long long p) {
  return detail::cable_core(unknot_with_kinks(p), {3}, false, false);
}

LinkDiagram hopf_fibers(int s1, int s2, int s3) {
  for (int s : {s1, s2, s3})
    if (s != 1 && s != -1) throw Error(Err::BadComponent, "hopf_fibers signs must be +-1");
  LinkDiagram d = hopf3(1);
  if (s1 < 0) d = reverse_component(d, 1);
  if (s2 < 0) d = reverse_component(d, 2);
  if (s3 < 0) d = reverse_component(d, 3);
  return d;
}

LinkDiagram paper_figure(int n) {
  switch (n) {
    case 6:
      return hopf_fibers(1, 1, 1);
    case 7:
      return reverse_component(hopf3(-1), 1);
    case 8:
      return cable(hopf_fibers(1, 1, 1), {2, 1, 1}, true);
    case 9:
      return cable(hopf3(-1), {4, 1, 1}, true);
    case 10:
      return cable(hopf_fibers(1, 1, -1), {2, 1, 1}, true);
    case 11:
      return hopf3(2);
    default:
      throw Error(Err::BadFigure, "figure must be in 6..11");
  }
}

LinkDiagram make_family(const FamilySpec& spec) {
  auto arity = [&](size_t n) {
    if (spec.params.size() != n)
      throw Error(Err::Parse, "family " + spec.name + " takes " + std::to_string(n) +
                                  " parameter(s), got " + std::to_string(spec.params.size()));
  };
  if (spec.name == "hopf2") {
    arity(1);
    return hopf2(spec.params[0]);
  }
  if (spec.name == "hopf2_op") {
    arity(1);
    return hopf2_op(spec.params[0]);
  }
  if (spec.name == "l0") {
    arity(3);
    return l0(spec.params[0], spec.params[1], spec.params[2]);
  }
  if (spec.name == "hopf3") {
    arity(1);
    return hopf3(spec.params[0]);
  }
  if (spec.name == "hopf_fibers") {
    arity(3);
    return hopf_fibers(static_cast<int>(spec.params[0]), static_cast<int>(spec.params[1]),
                       static_cast<int>(spec.params[2]));
  }
  if (spec.name == "figure") {
    arity(1);
    return paper_figure(static_cast<int>(spec.params[0]));
  }
  throw Error(Err::Parse, "unknown family: " + spec.name);
}

}  // namespace m3
