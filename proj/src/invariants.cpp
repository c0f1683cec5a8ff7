#include "m3/invariants.hpp"

#include <cmath>

namespace m3 {
namespace {

void need_components(const LinkDiagram& d, int m, const char* what) {
  if (d.component_count != m)
    throw Error(Err::WrongComponentCount,
                std::string(what) + " needs " + std::to_string(m) + " components, got " +
                    std::to_string(d.component_count));
}

BigInt c1_of(const LinkDiagram& d, MemoCache* cache) { return conway_c01(d, cache).c1; }

struct C1Pack {
  LinkingMatrix lk{3};
  BigInt full, sub23, sub31, sub12, comp1, comp2, comp3;
};

C1Pack c1_pack(const LinkDiagram& d, MemoCache* cache) {
  C1Pack p;
  p.lk = linking_matrix(d);
  p.full = c1_of(d, cache);
  LinkDiagram d23 = delete_component(d, 1);
  LinkDiagram d31 = delete_component(d, 2);
  LinkDiagram d12 = delete_component(d, 3);
  p.sub23 = c1_of(d23, cache);
  p.sub31 = c1_of(d31, cache);
  p.sub12 = c1_of(d12, cache);
  p.comp1 = c1_of(delete_component(d12, 2), cache);
  p.comp2 = c1_of(delete_component(d12, 1), cache);
  p.comp3 = c1_of(delete_component(d23, 1), cache);
  return p;
}

BigInt gamma_from_pack(const C1Pack& p) {
  BigInt a12(p.lk.at(1, 2)), a23(p.lk.at(2, 3)), a31(p.lk.at(3, 1));
  BigInt g = p.full;
  g -= (a12 * a23 + a23 * a31 + a31 * a12) * (p.comp1 + p.comp2 + p.comp3);
  g -= (a31 + a23) * (p.sub12 - a12 * (p.comp1 + p.comp2));
  g -= (a12 + a31) * (p.sub23 - a23 * (p.comp2 + p.comp3));
  g -= (a23 + a12) * (p.sub31 - a31 * (p.comp3 + p.comp1));
  return g;
}

BigInt m_tilde_from_pack(const C1Pack& p) {
  BigInt a12(p.lk.at(1, 2)), a23(p.lk.at(2, 3)), a31(p.lk.at(3, 1));
  BigInt beta23 = p.sub23 - a23 * (p.comp2 + p.comp3);
  BigInt beta31 = p.sub31 - a31 * (p.comp3 + p.comp1);
  BigInt beta12 = p.sub12 - a12 * (p.comp1 + p.comp2);
  BigInt mt = -(a12 * a23 * a31) * gamma_from_pack(p);
  mt += a12 * a12 * a31 * a31 * beta23;
  mt += a23 * a23 * a12 * a12 * beta31;
  mt += a31 * a31 * a23 * a23 * beta12;
  return mt;
}

}  // namespace

BigInt beta(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 2, "beta");
  LinkingMatrix lk = linking_matrix(d);
  BigInt full = c1_of(d, cache);
  BigInt c1a = c1_of(delete_component(d, 2), cache);
  BigInt c1b = c1_of(delete_component(d, 1), cache);
  return full - BigInt(lk.at(1, 2)) * (c1a + c1b);
}

BigInt gamma_invariant(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 3, "gamma");
  return gamma_from_pack(c1_pack(d, cache));
}

Rational m_tilde(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 3, "m_tilde");
  return Rational(m_tilde_from_pack(c1_pack(d, cache)));
}

Rational p1_poly(const LinkingMatrix& lk) {
  BigInt a12(lk.at(1, 2)), a23(lk.at(2, 3)), a31(lk.at(3, 1));
  Rational t1(a12 * a12 * a23 * a23 * a31 * a31 * (a12 + a23 + a31), BigInt(6));
  Rational t2(a12 * a23 * a31 * (a12 * a23 + a23 * a31 + a31 * a12), BigInt(12));
  return t1 + t2;
}

Rational r_poly(const LinkingMatrix& lk) {
  BigInt a12(lk.at(1, 2)), a23(lk.at(2, 3)), a31(lk.at(3, 1));
  auto cube = [](const BigInt& x) { return x * x * x; };
  BigInt s = cube(a12) * cube(a23) * (cube(a31) - a31);
  s += cube(a23) * cube(a31) * (cube(a12) - a12);
  s += cube(a31) * cube(a12) * (cube(a23) - a23);
  return Rational(s, BigInt(24));
}

Rational jump_op1(const LinkingMatrix& lk) {
  BigInt a12(lk.at(1, 2)), a23(lk.at(2, 3)), a31(lk.at(3, 1));
  Rational t1(a12 * a12 * a23 * a23 * a31 * a31 * (a12 + a31), BigInt(3));
  Rational t2(a12 * a23 * a31 * (a12 * a23 + a23 * a31), BigInt(6));
  return -t1 - t2;
}

Rational m_av(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 3, "m_av");
  Rational sum = m_tilde(reverse_all(d), cache);
  sum = sum + m_tilde(reverse_component(d, 3), cache);
  sum = sum + m_tilde(reverse_component(d, 1), cache);
  sum = sum + m_tilde(reverse_component(d, 2), cache);
  return sum / Rational(4);
}

namespace {

long long isqrt_exact(long long v) {  // -1 when v is not a perfect square
  if (v < 0) return -1;
  long long r = std::llround(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

std::optional<GoodLinkCertificate> good_link_check(const LinkingMatrix& lk) {
  if (lk.m != 3) throw Error(Err::WrongComponentCount, "good_link_check needs 3 components");
  long long a12 = lk.at(1, 2), a23 = lk.at(2, 3), a31 = lk.at(3, 1);
  if (a12 == 0 || a23 == 0 || a31 == 0)
    throw Error(Err::ZeroLinking, "good_link_check: zero linking number");
  long long s12 = isqrt_exact(std::llabs(a12));
  long long s23 = isqrt_exact(std::llabs(a23));
  long long s31 = isqrt_exact(std::llabs(a31));
  if (s12 < 0 || s23 < 0 || s31 < 0) return std::nullopt;
  // mu1^2 = s12 s31 / s23
  if ((s12 * s31) % s23 != 0) return std::nullopt;
  long long mu1 = isqrt_exact(s12 * s31 / s23);
  if (mu1 <= 0) return std::nullopt;
  if (s12 % mu1 != 0) return std::nullopt;
  long long mu2 = s12 / mu1;
  if (mu2 <= 0 || mu2 * mu1 != s12) return std::nullopt;
  if (s23 % mu2 != 0) return std::nullopt;
  long long mu3 = s23 / mu2;
  if (mu3 <= 0 || mu2 * mu3 != s23 || mu3 * mu1 != s31) return std::nullopt;
  GoodLinkCertificate cert;
  cert.mu1 = mu1;
  cert.mu2 = mu2;
  cert.mu3 = mu3;
  cert.sqrt_k = mu1 * mu1 * mu2 * mu2 * mu3 * mu3;
  cert.k = cert.sqrt_k * cert.sqrt_k;
  return cert;
}

LinkDiagram normalize(const LinkDiagram& d) {
  need_components(d, 3, "normalize");
  LinkingMatrix lk = linking_matrix(d);
  long long a12 = lk.at(1, 2), a23 = lk.at(2, 3), a31 = lk.at(3, 1);
  if (a12 == 0 || a23 == 0 || a31 == 0) throw Error(Err::ZeroLinking, "normalize: zero linking number");
  std::vector<int> mult = {static_cast<int>(std::llabs(a23)), static_cast<int>(std::llabs(a31)),
                           static_cast<int>(std::llabs(a12))};
  return cable(d, mult, true);
}

LinkDiagram normalize_secondary(const LinkDiagram& d_norm, const GoodLinkCertificate& cert) {
  need_components(d_norm, 3, "normalize_secondary");
  int s = static_cast<int>(cert.sqrt_k);
  return cable(d_norm, {s, s, s}, true);
}

Rational m_invariant(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 3, "m_invariant");
  LinkingMatrix lk = linking_matrix(d);
  long long a12 = lk.at(1, 2), a23 = lk.at(2, 3), a31 = lk.at(3, 1);
  long long k = a12 * a23 * a31;
  if (k == 0) return m_av(d, cache);
  if (k < 0) return -m_invariant(mirror(d), cache);
  int negatives = (a12 < 0) + (a23 < 0) + (a31 < 0);
  if (negatives == 2) {
    // reverse the component shared by the two negative entries
    int comp;
    if (a12 < 0 && a23 < 0) comp = 2;
    else if (a23 < 0 && a31 < 0) comp = 3;
    else comp = 1;  // (3,1) and (1,2) negative
    return m_invariant(reverse_component(d, comp), cache);
  }
  return m_av(d, cache) + r_poly(lk);
}

Rational m_via_normalization(const LinkDiagram& d, const GoodLinkCertificate& cert,
                             MemoCache* cache) {
  need_components(d, 3, "m_via_normalization");
  LinkDiagram norm = normalize(d);
  LinkDiagram big = normalize_secondary(norm, cert);
  Rational val = m_av(big, cache);
  BigInt k2 = BigInt(cert.k) * cert.k;
  BigInt k8 = k2 * k2 * k2 * k2;  // k^2 * k_norm^3 = |k|^8
  return val / Rational(k8);
}

InvariantReport invariant_report(const LinkDiagram& d, MemoCache* cache) {
  need_components(d, 3, "invariant_report");
  MemoCache local;
  MemoCache* mc = cache ? cache : &local;
  InvariantReport rep;
  C1Pack p = c1_pack(d, mc);
  rep.lk = p.lk;
  rep.c1_link = p.full;
  rep.c1_sublinks = {p.sub23, p.sub31, p.sub12};
  rep.c1_components = {p.comp1, p.comp2, p.comp3};
  BigInt a12(p.lk.at(1, 2)), a23(p.lk.at(2, 3)), a31(p.lk.at(3, 1));
  rep.betas = {p.sub23 - a23 * (p.comp2 + p.comp3), p.sub31 - a31 * (p.comp3 + p.comp1),
               p.sub12 - a12 * (p.comp1 + p.comp2)};
  rep.gamma = gamma_from_pack(p);
  rep.m_tilde = Rational(m_tilde_from_pack(p));
  rep.p1 = p1_poly(p.lk);
  rep.r = r_poly(p.lk);
  rep.m_av = m_av(d, mc);
  rep.m = m_invariant(d, mc);
  if (p.lk.at(1, 2) != 0 && p.lk.at(2, 3) != 0 && p.lk.at(3, 1) != 0)
    rep.good = good_link_check(p.lk);
  return rep;
}

}  // namespace m3
