#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m3/conway.hpp"
#include "m3/diagram.hpp"
#include "m3/families.hpp"

using namespace m3;

namespace {

std::string dump(const LinkDiagram& d) {
  std::string s = std::to_string(d.component_count) + ";";
  for (auto& x : renumber(d).crossings)
    s += std::to_string(x.sign) + ":" + std::to_string(x.u_in) + "," + std::to_string(x.u_out) +
         "," + std::to_string(x.o_in) + "," + std::to_string(x.o_out) + ";";
  return s;
}

}  // namespace

TEST_CASE("every generator output is valid and plane-consistent") {
  std::vector<LinkDiagram> all;
  for (long long p = -4; p <= 4; ++p) {
    all.push_back(hopf2(p));
    all.push_back(hopf2_op(p));
  }
  for (long long p : {-2LL, -1LL, 0LL, 1LL, 2LL}) all.push_back(hopf3(p));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) all.push_back(hopf_fibers(s1, s2, s3));
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b) all.push_back(l0(a, b, 1 - a));
  for (int n = 6; n <= 11; ++n) all.push_back(paper_figure(n));
  for (const LinkDiagram& d : all) {
    CHECK_NOTHROW(validate(d));
    CHECK(detail::sphere_consistent(d));
  }
}

TEST_CASE("linking matrices follow the family parameters") {
  for (long long p = -4; p <= 4; ++p) {
    CHECK(linking_matrix(hopf2(p)).at(1, 2) == p);
    CHECK(linking_matrix(hopf2_op(p)).at(1, 2) == p);
    LinkingMatrix lk = linking_matrix(hopf3(p));
    CHECK(lk.at(1, 2) == p);
    CHECK(lk.at(2, 3) == p);
    CHECK(lk.at(3, 1) == p);
  }
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b)
      for (long long c = -2; c <= 2; ++c) {
        LinkingMatrix lk = linking_matrix(l0(a, b, c));
        CHECK(lk.at(2, 3) == a);
        CHECK(lk.at(3, 1) == b);
        CHECK(lk.at(1, 2) == c);
      }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        LinkingMatrix lk = linking_matrix(hopf_fibers(s1, s2, s3));
        CHECK(lk.at(2, 3) == s2 * s3);
        CHECK(lk.at(3, 1) == s3 * s1);
        CHECK(lk.at(1, 2) == s1 * s2);
      }
}

TEST_CASE("components of the named families are unknotted") {
  MemoCache cache;
  std::vector<LinkDiagram> all = {hopf2(3), hopf2_op(-3), l0(2, -2, 1), hopf3(2), hopf3(-1)};
  for (const LinkDiagram& d : all) {
    for (int i = 1; i <= d.component_count; ++i) {
      LinkDiagram comp = d;
      // strip to component i; deleting in decreasing order keeps indices valid
      for (int j = d.component_count; j >= 1; --j)
        if (j != i) comp = delete_component(comp, j);
      CHECK(conway(comp, &cache) == IntPolynomial::one());
      CHECK(conway_c01(comp, &cache).c1 == 0);
    }
  }
}

TEST_CASE("hopf2 relates to hopf2_op by reversing the second component") {
  for (long long p = -3; p <= 3; ++p)
    CHECK(dump(hopf2(p)) == dump(reverse_component(hopf2_op(-p), 2)));
}

TEST_CASE("hopf2_op has vanishing c1") {
  MemoCache cache;
  for (long long p = -4; p <= 4; ++p) CHECK(conway_c01(hopf2_op(p), &cache).c1 == 0);
}

TEST_CASE("l0 sublinks have vanishing c1") {
  MemoCache cache;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b)
      for (long long c = -2; c <= 2; ++c) {
        LinkDiagram d = l0(a, b, c);
        for (int i = 1; i <= 3; ++i) CHECK(conway_c01(delete_component(d, i), &cache).c1 == 0);
      }
}

TEST_CASE("degenerate family members") {
  LinkDiagram z = l0(0, 0, 0);
  CHECK(z.component_count == 3);
  CHECK(z.crossings.empty());
  CHECK(conway(z) == IntPolynomial::zero());

  LinkDiagram h0 = hopf3(0);
  CHECK(h0.component_count == 3);
  CHECK(h0.crossings.empty());

  CHECK(hopf2(0).component_count == 2);
}

TEST_CASE("figure generators") {
  CHECK(dump(paper_figure(6)) == dump(hopf_fibers(1, 1, 1)));
  CHECK(dump(paper_figure(11)) == dump(hopf3(2)));
  CHECK(paper_figure(8).component_count == 3);
  CHECK_THROWS_AS(paper_figure(5), Error);
  CHECK_THROWS_AS(paper_figure(12), Error);
  LinkingMatrix lk10 = linking_matrix(paper_figure(10));
  CHECK(lk10.at(2, 3) == -1);
  CHECK(lk10.at(3, 1) == -2);
  CHECK(lk10.at(1, 2) == 2);
}

TEST_CASE("family spec dispatch") {
  CHECK(make_family({"hopf3", {2}}).component_count == 3);
  CHECK(make_family({"hopf_fibers", {1, -1, 1}}).component_count == 3);
  CHECK(make_family({"l0", {1, 1, 1}}).crossings.size() == 6);
  CHECK_THROWS_AS(make_family({"hopf3", {1, 2}}), Error);
  CHECK_THROWS_AS(make_family({"nosuch", {1}}), Error);
  CHECK_THROWS_AS(make_family({"hopf_fibers", {2, 1, 1}}), Error);
}
