#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m3/braid.hpp"
#include "m3/conway.hpp"
#include "m3/diagram.hpp"
#include "m3/families.hpp"

using namespace m3;

namespace {

LinkDiagram unknot() {
  LinkDiagram d;
  d.component_count = 1;
  d.free_loops[1] = 1;
  return d;
}

std::string dump(const LinkDiagram& d) {
  std::string s = std::to_string(d.component_count) + ";";
  for (auto& x : renumber(d).crossings)
    s += std::to_string(x.sign) + ":" + std::to_string(x.u_in) + "," + std::to_string(x.u_out) +
         "," + std::to_string(x.o_in) + "," + std::to_string(x.o_out) + ";";
  return s;
}

}  // namespace

TEST_CASE("validate accepts the basic shapes") {
  CHECK_NOTHROW(validate(unknot()));
  CHECK_NOTHROW(validate(hopf2(1)));
  CHECK_NOTHROW(validate(braid_closure(BraidWord{2, {1, 1, 1}})));
}

TEST_CASE("validate rejects broken diagrams") {
  LinkDiagram d = hopf2(1);
  d.crossings[0].u_out = d.crossings[1].u_out;  // arc used twice as out
  CHECK_THROWS_AS(validate(d), Error);
  try {
    validate(d);
  } catch (const Error& e) {
    CHECK(e.code == Err::ArcMismatch);
  }

  LinkDiagram gap = hopf2(1);
  gap.component_count = 3;  // component 3 unused
  try {
    validate(gap);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::ComponentGap);
  }

  LinkDiagram mix = hopf2(1);
  mix.arc_component[mix.crossings[0].u_out] = 2;
  mix.arc_component[mix.crossings[0].u_in] = 1;
  CHECK_THROWS(validate(mix));

  LinkDiagram empty;
  empty.component_count = 0;
  CHECK_THROWS_AS(validate(empty), Error);
}

TEST_CASE("braid closure basics") {
  LinkDiagram h = braid_closure(BraidWord{2, {1, 1}});
  CHECK(h.component_count == 2);
  CHECK(h.crossings.size() == 2);
  CHECK(linking_matrix(h).at(1, 2) == 1);

  LinkDiagram u = braid_closure(BraidWord{1, {}});
  CHECK(u.component_count == 1);
  CHECK(u.free_loops.at(1) == 1);

  LinkDiagram t = braid_closure(BraidWord{2, {1, 1, 1}});
  CHECK(t.component_count == 1);
  CHECK(t.crossings.size() == 3);

  CHECK_THROWS_AS(braid_closure(BraidWord{2, {0}}), Error);
  CHECK_THROWS_AS(braid_closure(BraidWord{2, {2}}), Error);
}

TEST_CASE("linking numbers of twist closures") {
  for (long long p = -4; p <= 4; ++p) CHECK(linking_matrix(hopf2(p)).at(1, 2) == p);
  LinkDiagram split = braid_closure(BraidWord{2, {}});
  CHECK(linking_matrix(split).at(1, 2) == 0);
}

TEST_CASE("reverse_component flips rows of the linking matrix") {
  LinkDiagram d = hopf_fibers(1, 1, 1);
  LinkDiagram r = reverse_component(d, 1);
  LinkingMatrix lk = linking_matrix(r);
  CHECK(lk.at(1, 2) == -1);
  CHECK(lk.at(3, 1) == -1);
  CHECK(lk.at(2, 3) == 1);
  CHECK(dump(reverse_component(r, 1)) == dump(d));  // involution up to relabeling
  CHECK_THROWS_AS(reverse_component(d, 4), Error);

  // both components reversed: linking numbers restored
  LinkDiagram h = hopf2(3);
  LinkDiagram hh = reverse_component(reverse_component(h, 1), 2);
  CHECK(linking_matrix(hh).at(1, 2) == 3);
}

TEST_CASE("mirror negates the linking matrix") {
  LinkDiagram d = hopf_fibers(1, 1, 1);
  LinkingMatrix lk = linking_matrix(mirror(d));
  CHECK(lk.at(1, 2) == -1);
  CHECK(lk.at(2, 3) == -1);
  CHECK(lk.at(3, 1) == -1);
  CHECK(dump(mirror(mirror(d))) == dump(d));
  CHECK(dump(mirror(hopf2(1))) == dump(hopf2(-1)));
}

TEST_CASE("delete and permute") {
  LinkDiagram d = hopf_fibers(1, 1, 1);
  LinkDiagram sub = delete_component(d, 3);
  CHECK(sub.component_count == 2);
  CHECK(linking_matrix(sub).at(1, 2) == 1);

  LinkDiagram one = delete_component(sub, 2);
  CHECK(one.component_count == 1);

  LinkDiagram none = delete_component(one, 1);
  CHECK(none.component_count == 0);
  CHECK_THROWS(validate(none));

  // permutation conjugates the linking matrix
  LinkDiagram f8 = paper_figure(8);
  std::vector<int> perm = {2, 3, 1};
  LinkingMatrix a = linking_matrix(f8), b = linking_matrix(permute_components(f8, perm));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(b.at(perm[i - 1], perm[j - 1]) == a.at(i, j));
  CHECK_THROWS_AS(permute_components(f8, {1, 1, 2}), Error);
}

TEST_CASE("skein smooth changes the component count by one") {
  LinkDiagram h = hopf2(1);
  LinkDiagram s = skein_smooth(h, 0);
  CHECK(s.component_count == 1);

  LinkDiagram t = braid_closure(BraidWord{2, {1, 1, 1}});
  LinkDiagram ts = skein_smooth(t, 0);
  CHECK(ts.component_count == 2);

  LinkDiagram sw = skein_switch(h, 0);
  CHECK(sw.component_count == 2);
  CHECK(sw.crossings.size() == 2);
  CHECK_THROWS_AS(skein_smooth(h, 5), Error);
}

TEST_CASE("cable multiplies linking numbers") {
  LinkDiagram d = hopf_fibers(1, 1, 1);
  LinkDiagram c = cable(d, {2, 1, 1}, true);
  LinkingMatrix lk = linking_matrix(c);
  CHECK(lk.at(1, 2) == 2);
  CHECK(lk.at(2, 3) == 1);
  CHECK(lk.at(3, 1) == 2);

  LinkDiagram c9 = cable(hopf3(-1), {4, 1, 1}, true);
  LinkingMatrix lk9 = linking_matrix(c9);
  CHECK(lk9.at(1, 2) == -4);
  CHECK(lk9.at(2, 3) == -1);
  CHECK(lk9.at(3, 1) == -4);

  CHECK(dump(cable(d, {1, 1, 1}, true)) == dump(d));
  CHECK_THROWS_AS(cable(d, {0, 1, 1}, true), Error);
  CHECK_THROWS_AS(cable(d, {2, 1}, true), Error);

  // disconnected cable splits copies into separate components
  LinkDiagram dc = cable(hopf2(1), {2, 1}, false);
  CHECK(dc.component_count == 3);
}

TEST_CASE("cable linking multiplicativity across random braids") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 12; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w{n, {}};
    int len = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      int k = 1 + static_cast<int>(rng() % (n - 1));
      w.letters.push_back(rng() % 2 ? k : -k);
    }
    LinkDiagram d = braid_closure(w);
    std::vector<int> mult;
    for (int i = 0; i < d.component_count; ++i) mult.push_back(1 + static_cast<int>(rng() % 3));
    LinkDiagram c = cable(d, mult, true);
    CHECK_NOTHROW(validate(c));
    CHECK(detail::sphere_consistent(c));
    LinkingMatrix a = linking_matrix(d), b = linking_matrix(c);
    for (int i = 1; i <= d.component_count; ++i)
      for (int j = i + 1; j <= d.component_count; ++j)
        CHECK(b.at(i, j) == static_cast<long long>(mult[i - 1]) * mult[j - 1] * a.at(i, j));
  }
}

TEST_CASE("all operations keep diagrams valid and plane-consistent") {
  std::vector<LinkDiagram> corpus = {hopf2(2),         hopf2_op(-2),       l0(1, -2, 1),
                                     hopf3(1),         hopf_fibers(1, -1, 1), paper_figure(8),
                                     braid_closure(BraidWord{3, {1, -2, 1, -2}})};
  for (const LinkDiagram& d : corpus) {
    CHECK_NOTHROW(validate(d));
    CHECK(detail::sphere_consistent(d));
    for (int i = 1; i <= d.component_count; ++i) {
      CHECK_NOTHROW(validate(reverse_component(d, i)));
      if (d.component_count > 1) CHECK_NOTHROW(validate(delete_component(d, i)));
    }
    CHECK_NOTHROW(validate(mirror(d)));
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
      CHECK_NOTHROW(validate(skein_switch(d, c)));
      CHECK_NOTHROW(validate(skein_smooth(d, c)));
      CHECK(detail::sphere_consistent(skein_smooth(d, c)));
    }
  }
}

TEST_CASE("renumber is deterministic and stable") {
  LinkDiagram d = paper_figure(8);
  CHECK(dump(d) == dump(renumber(renumber(d))));
  // arcs are 1..A with every component walked from its lowest arc
  LinkDiagram r = renumber(d);
  int expect = 1;
  for (auto& [arc, comp] : r.arc_component) CHECK(arc == expect++);
}

TEST_CASE("canonical keys ignore arc labels") {
  LinkDiagram d = l0(2, 1, -1);
  // relabel arcs by shifting ids
  LinkDiagram shifted = d;
  shifted.arc_component.clear();
  for (auto& [arc, comp] : d.arc_component) shifted.arc_component[arc + 1000] = comp;
  for (auto& x : shifted.crossings) {
    x.u_in += 1000;
    x.u_out += 1000;
    x.o_in += 1000;
    x.o_out += 1000;
  }
  CHECK(canonical_key(d) == canonical_key(shifted));
  CHECK(canonical_key(d) != canonical_key(mirror(d)));
}

TEST_CASE("writhe") {
  CHECK(writhe(braid_closure(BraidWord{2, {1, 1, 1}}), 1) == 3);
  CHECK(writhe(hopf2(1), 1) == 0);
  CHECK(writhe(unknot_with_kinks(-2), 1) == -2);
}
