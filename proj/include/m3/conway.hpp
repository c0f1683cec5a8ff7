// Conway polynomial engines.
//
// conway(): exact full polynomial by descending-diagram skein recursion with
// memoization on canonical diagram encodings, R1 kink removal and split
// shortcuts. conway_c01(): the c0/c1 coefficient window (degrees m-1, m+1)
// used by the invariant tower; it runs the same skein walk truncated to the
// window, terminates self-smoothings with the linking-matrix closed form for
// the lowest coefficient, and switches to a series determinant evaluator for
// large diagrams with nonzero c0. Every path cross-checks c0 against the
// linking-matrix value and counts violations.
#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "m3/diagram.hpp"
#include "m3/numeric.hpp"

namespace m3 {

struct C01 {
  BigInt c0, c1;
};

struct MemoCache {
  std::unordered_map<std::string, IntPolynomial> poly;
  std::unordered_map<std::string, C01> window;
  std::mutex mu;
  bool shared = false;  // lock around accesses when used from several threads

  size_t size() const { return poly.size() + window.size(); }
};

struct EngineStats {
  std::atomic<long long> parity_checks{0};
  std::atomic<long long> parity_violations{0};
  std::atomic<long long> c0_checks{0};
  std::atomic<long long> c0_violations{0};
  std::atomic<long long> det_calls{0};
  std::atomic<long long> det_fallbacks{0};
  void reset() {
    parity_checks = parity_violations = c0_checks = c0_violations = 0;
    det_calls = det_fallbacks = 0;
  }
};
EngineStats& engine_stats();

// Exact Conway polynomial. Throws EmptyDiagram for m = 0.
IntPolynomial conway(const LinkDiagram& d, MemoCache* cache = nullptr);

// Coefficient of z^(m-1+2k), k in {0,1}; rejects polynomials violating the
// z^(m-1)(c0 + c1 z^2 + ...) degree/parity structure.
BigInt extract_coeff(const IntPolynomial& p, int m, int k);

// Lowest Conway coefficient from pairwise linking numbers (weighted
// spanning-tree determinant of the linking matrix; 1 for knots).
BigInt hoste_c0(const LinkingMatrix& lk);

C01 conway_c01(const LinkDiagram& d, MemoCache* cache = nullptr);

// R1 kink removal; preserves the link type and all component indices.
LinkDiagram simplify_r1(const LinkDiagram& d);

namespace detail {
// First crossing met on its under-strand before its over-strand along the
// fixed walk (components in order, basepoint = lowest arc id).
std::optional<int> first_bad_crossing(const LinkDiagram& d);
// Series determinant evaluator (Alexander matrix expanded at t = e^h); exact
// c1 for diagrams with nonzero c0, or nullopt when any self-check fails.
std::optional<BigInt> c1_series_det(const LinkDiagram& d, const BigInt& c0, int m);
}  // namespace detail

}  // namespace m3
