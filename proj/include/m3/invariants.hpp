// The invariant tower over the Conway engine: Sato-Levine beta, the gamma
// invariant, the raw combination m_tilde, the correction polynomials p1 and
// r, the orientation average m_av, good-link normalization, and the
// asymptotic invariant M (scaling as (l1 l2 l3)^4 under connected cabling).
#pragma once

#include <array>
#include <optional>

#include "m3/conway.hpp"
#include "m3/diagram.hpp"
#include "m3/numeric.hpp"

namespace m3 {

struct GoodLinkCertificate {
  long long mu1 = 1, mu2 = 1, mu3 = 1;
  long long sqrt_k = 1;  // mu1^2 mu2^2 mu3^2
  long long k = 1;       // sqrt_k^2 = |lk12 lk23 lk31|
};

struct InvariantReport {
  LinkingMatrix lk;
  std::array<BigInt, 3> c1_components{};  // c1(L1), c1(L2), c1(L3)
  std::array<BigInt, 3> c1_sublinks{};    // c1(L2 u L3), c1(L3 u L1), c1(L1 u L2)
  BigInt c1_link;
  std::array<BigInt, 3> betas{};  // beta23, beta31, beta12
  BigInt gamma;
  Rational m_tilde, p1, r, m_av, m;
  std::optional<GoodLinkCertificate> good;

  long long k() const { return lk.at(1, 2) * lk.at(2, 3) * lk.at(3, 1); }
  long long k_norm() const { return k() * k(); }
};

BigInt beta(const LinkDiagram& d, MemoCache* cache = nullptr);             // m = 2
BigInt gamma_invariant(const LinkDiagram& d, MemoCache* cache = nullptr);  // m = 3
Rational m_tilde(const LinkDiagram& d, MemoCache* cache = nullptr);        // m = 3

Rational p1_poly(const LinkingMatrix& lk);
Rational r_poly(const LinkingMatrix& lk);
Rational jump_op1(const LinkingMatrix& lk);

// Average of m_tilde over the four orientation classes, computed by literally
// reversing components of the diagram.
Rational m_av(const LinkDiagram& d, MemoCache* cache = nullptr);

std::optional<GoodLinkCertificate> good_link_check(const LinkingMatrix& lk);

// Connected cable with multiplicities (|lk23|, |lk31|, |lk12|); all pairwise
// linking numbers of the result equal +-k.
LinkDiagram normalize(const LinkDiagram& d);
// Cable of the normalized link by (sqrt_k, sqrt_k, sqrt_k); pairwise linking
// numbers become +-k^2.
LinkDiagram normalize_secondary(const LinkDiagram& d_norm, const GoodLinkCertificate& cert);

// Sign-pattern reduction, then m_av (+ r for all-positive linking numbers).
Rational m_invariant(const LinkDiagram& d, MemoCache* cache = nullptr);
// M = k^-2 k_norm^-3 m_av(secondary normalization); cross-check route for
// good links.
Rational m_via_normalization(const LinkDiagram& d, const GoodLinkCertificate& cert,
                             MemoCache* cache = nullptr);

InvariantReport invariant_report(const LinkDiagram& d, MemoCache* cache = nullptr);

}  // namespace m3
