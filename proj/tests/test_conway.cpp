#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m3/braid.hpp"
#include "m3/conway.hpp"
#include "m3/families.hpp"

using namespace m3;

namespace {

LinkDiagram unknot() {
  LinkDiagram d;
  d.component_count = 1;
  d.free_loops[1] = 1;
  return d;
}

IntPolynomial poly(std::vector<long long> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("base cases") {
  CHECK(conway(unknot()) == IntPolynomial::one());
  CHECK(conway(braid_closure(BraidWord{2, {}})) == IntPolynomial::zero());
  CHECK(conway(braid_closure(BraidWord{3, {}})) == IntPolynomial::zero());
  LinkDiagram empty;
  CHECK_THROWS_AS(conway(empty), Error);
}

TEST_CASE("known polynomials") {
  CHECK(conway(hopf2(1)) == poly({0, 1}));                                   // z
  CHECK(conway(hopf2(-1)) == poly({0, -1}));                                 // -z
  CHECK(conway(braid_closure(BraidWord{2, {1, 1, 1}})) == poly({1, 0, 1}));  // trefoil
  CHECK(conway(hopf2(2)) == poly({0, 2, 0, 1}));                             // 2z + z^3
  CHECK(conway(braid_closure(BraidWord{3, {1, -2, 1, -2}})) == poly({1, 0, -1}));  // figure eight
  // split sum with an extra free loop dies
  LinkDiagram s = braid_closure(BraidWord{3, {1, 1}});
  CHECK(s.component_count == 3);
  CHECK(conway(s) == IntPolynomial::zero());
}

TEST_CASE("extract_coeff and parity structure") {
  IntPolynomial p = poly({0, 2, 0, 1});
  CHECK(extract_coeff(p, 2, 0) == 2);
  CHECK(extract_coeff(p, 2, 1) == 1);
  CHECK_THROWS_AS(extract_coeff(p, 1, 0), Error);  // parity violated for m=1
  CHECK_THROWS_AS(extract_coeff(p, 2, 2), Error);
  CHECK(extract_coeff(IntPolynomial::zero(), 3, 1) == 0);
  CHECK(extract_coeff(poly({1, 0, 1}), 1, 1) == 1);  // trefoil c1
}

TEST_CASE("conway is invariant under relabeling and reversal of all components") {
  for (const LinkDiagram& d : {hopf2(2), l0(1, 1, 1), hopf3(1), paper_figure(7)}) {
    IntPolynomial p = conway(d);
    CHECK(conway(renumber(d)) == p);
    CHECK(conway(reverse_all(d)) == p);
  }
}

TEST_CASE("skein relation holds at every crossing of small diagrams") {
  MemoCache cache;
  for (const LinkDiagram& d :
       {hopf2(2), braid_closure(BraidWord{2, {1, 1, 1}}), l0(1, 1, 1), hopf3(-1)}) {
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
      LinkDiagram plus = d.crossings[c].sign > 0 ? d : skein_switch(d, c);
      LinkDiagram minus = d.crossings[c].sign > 0 ? skein_switch(d, c) : d;
      LinkDiagram smooth = skein_smooth(d, c);
      IntPolynomial lhs = conway(plus, &cache) - conway(minus, &cache);
      IntPolynomial rhs = conway(smooth, &cache).shifted(1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("c0 equals the linking-matrix form") {
  for (long long p = -4; p <= 4; ++p) {
    C01 c = conway_c01(hopf2(p));
    CHECK(c.c0 == p);
  }
  CHECK(hoste_c0(linking_matrix(hopf3(1))) == 3);
  CHECK(conway_c01(hopf3(1)).c0 == 3);
  CHECK(conway_c01(hopf3(2)).c0 == 12);
  // knots have c0 = 1
  CHECK(conway_c01(braid_closure(BraidWord{2, {1, 1, 1}})).c0 == 1);
}

TEST_CASE("window engine agrees with the full polynomial") {
  MemoCache cache;
  for (const LinkDiagram& d : {hopf2(3), hopf2_op(2), l0(2, -1, 1), hopf3(2), paper_figure(8),
                               cable(hopf2(1), {2, 1}, true)}) {
    IntPolynomial p = conway(d, &cache);
    C01 c = conway_c01(d, &cache);
    CHECK(c.c0 == extract_coeff(p, d.component_count, 0));
    CHECK(c.c1 == extract_coeff(p, d.component_count, 1));
  }
}

TEST_CASE("series determinant path agrees with the skein engines") {
  // mid-size diagrams above the determinant threshold, every structural kind
  std::vector<LinkDiagram> mids = {
      cable(hopf_fibers(1, 1, 1), {2, 1, 1}, true),
      cable(hopf_fibers(1, -1, 1), {2, 2, 1}, true),
      cable(hopf3(-1), {4, 1, 1}, true),
      reverse_component(cable(hopf_fibers(1, 1, 1), {2, 2, 2}, true), 2),
      mirror(cable(hopf3(2), {2, 1, 1}, true)),
      cable(braid_closure(BraidWord{3, {1, 1, 2, 2, 1, 1}}), {2, 2, 1}, true),
  };
  for (const LinkDiagram& d : mids) {
    LinkingMatrix lk = linking_matrix(d);
    BigInt c0 = hoste_c0(lk);
    if (c0 == 0) continue;
    auto det = detail::c1_series_det(d, c0, d.component_count);
    REQUIRE(det.has_value());
    // reference: full skein walk (memoized) on the same diagram
    MemoCache cache;
    IntPolynomial p = conway(d, &cache);
    CHECK(*det == extract_coeff(p, d.component_count, 1));
  }
}

TEST_CASE("memo caches can be shared") {
  MemoCache cache;
  cache.shared = true;
  IntPolynomial a = conway(hopf3(1), &cache);
  IntPolynomial b = conway(hopf3(1), &cache);
  CHECK(a == b);
  CHECK(cache.size() > 0);
}

TEST_CASE("structural self-check counters stay clean") {
  engine_stats().reset();
  MemoCache cache;
  conway_c01(paper_figure(8), &cache);
  conway_c01(l0(2, 2, -2), &cache);
  CHECK(engine_stats().c0_violations.load() == 0);
  CHECK(engine_stats().parity_violations.load() == 0);
}
