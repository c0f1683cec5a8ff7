// Deterministic generators for the special links: two-component twist links
// hopf2 / hopf2_op, the three-component chain link l0 with prescribed pairwise
// linking numbers and vanishing gamma, the resolved-circle link hopf3, its
// orientation variants hopf_fibers, and the worked-example diagrams.
#pragma once

#include <string>
#include <vector>

#include "m3/braid.hpp"
#include "m3/diagram.hpp"

namespace m3 {

struct FamilySpec {
  std::string name;              // hopf2, hopf2_op, l0, hopf3, hopf_fibers, figure
  std::vector<long long> params;
};

LinkDiagram hopf2(long long p);     // closure of sigma_1^(2p), lk = p
LinkDiagram hopf2_op(long long p);  // hopf2(-p) with the second component reversed, lk = p
// chain of three round components; a = lk(2,3), b = lk(3,1), c = lk(1,2);
// every 2-component sublink has c1 = 0 and gamma vanishes identically
LinkDiagram l0(long long a, long long b, long long c);
// plane circle with self-linking p resolved into three parallel components,
// pairwise lk = p (3-strand disconnected cable of a p-kinked unknot)
LinkDiagram hopf3(long long p);
// hopf3(+1) with component i reversed where s_i = -1
LinkDiagram hopf_fibers(int s1, int s2, int s3);
// the worked-example diagrams, n in 6..11
LinkDiagram paper_figure(int n);

LinkDiagram make_family(const FamilySpec& spec);

// circle carrying |p| kinks of sign p (framing curve for hopf3)
LinkDiagram unknot_with_kinks(long long p);

}  // namespace m3
