// Independent slow verification: a full skein tree with no memoization and no
// simplification, plus the closed-form identity suite evaluated against
// diagram-level computation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "m3/conway.hpp"
#include "m3/diagram.hpp"

namespace m3 {

struct OracleConfig {
  int max_crossings = 12;
  bool random_order = false;  // pick among bad crossings at random instead of lowest index
  std::uint64_t seed = 0;
};

// Exponential-tree evaluation of the skein relation; must equal conway().
IntPolynomial conway_bruteforce(const LinkDiagram& d, const OracleConfig& cfg = {});

enum class IdentityStatus { pass, fail, sign_flagged };

struct IdentityResult {
  std::string identity;
  std::string detail;
  IdentityStatus status = IdentityStatus::pass;
};

// Closed forms checked over parameter boxes; identities with documented
// source-value conflicts report sign_flagged with both values instead of fail.
std::vector<IdentityResult> closed_form_suite();

// Named small diagrams (<= max_crossings) used for engine/oracle equivalence.
std::vector<std::pair<std::string, LinkDiagram>> oracle_corpus(int max_crossings);

}  // namespace m3
