#include "m3/conway.hpp"

#include <algorithm>
#include <unordered_map>

namespace m3 {

EngineStats& engine_stats() {
  static EngineStats s;
  return s;
}

LinkDiagram simplify_r1(const LinkDiagram& d0) {
  LinkDiagram d = d0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
      const Crossing X = d.crossings[ci];
      int loop, keep, drop;
      if (X.u_out == X.o_in) {
        loop = X.u_out;
        keep = X.u_in;
        drop = X.o_out;
      } else if (X.o_out == X.u_in) {
        loop = X.o_out;
        keep = X.o_in;
        drop = X.u_out;
      } else {
        continue;
      }
      int comp = d.arc_component.at(loop);
      d.crossings.erase(d.crossings.begin() + ci);
      d.arc_component.erase(loop);
      if (keep == drop) {  // the kink was the component's only crossing
        d.arc_component.erase(keep);
        d.free_loops[comp] = 1;
      } else {
        for (Crossing& y : d.crossings) {
          if (y.u_in == drop) y.u_in = keep;
          if (y.o_in == drop) y.o_in = keep;
          if (y.u_out == drop) y.u_out = keep;
          if (y.o_out == drop) y.o_out = keep;
        }
        d.arc_component.erase(drop);
      }
      changed = true;
      break;
    }
  }
  return d;
}

namespace detail {

std::optional<int> first_bad_crossing(const LinkDiagram& d) {
  std::unordered_map<int, std::pair<int, bool>> in_at;  // arc -> (crossing, over?)
  in_at.reserve(d.arc_component.size() * 2);
  for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
    in_at[d.crossings[ci].u_in] = {ci, false};
    in_at[d.crossings[ci].o_in] = {ci, true};
  }
  std::vector<char> visited(d.crossings.size(), 0);
  std::map<int, int> lowest;
  for (auto& [arc, c] : d.arc_component)
    if (!lowest.count(c)) lowest[c] = arc;
  for (auto& [comp, start] : lowest) {
    int cur = start;
    do {
      auto [ci, over] = in_at.at(cur);
      if (!visited[ci]) {
        visited[ci] = 1;
        if (!over) return ci;
      }
      cur = over ? d.crossings[ci].o_out : d.crossings[ci].u_out;
    } while (cur != start);
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

void check_parity(const IntPolynomial& p, int m) {
  auto& st = engine_stats();
  ++st.parity_checks;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    if (k < m - 1 || ((k - (m - 1)) % 2) != 0) {
      ++st.parity_violations;
      throw Error(Err::ParityViolation,
                  "Conway coefficient at degree " + std::to_string(k) + " for " +
                      std::to_string(m) + " components");
    }
  }
}

IntPolynomial conway_impl(const LinkDiagram& d0, MemoCache* cache) {
  LinkDiagram d = simplify_r1(d0);
  const int m = d.component_count;
  if (d.crossings.empty()) return m == 1 ? IntPolynomial::one() : IntPolynomial::zero();
  if (detail::is_split(d)) return IntPolynomial::zero();

  std::string key;
  if (cache) {
    key = canonical_key(d);
    if (cache->shared) {
      std::lock_guard<std::mutex> g(cache->mu);
      auto it = cache->poly.find(key);
      if (it != cache->poly.end()) return it->second;
    } else {
      auto it = cache->poly.find(key);
      if (it != cache->poly.end()) return it->second;
    }
  }

  IntPolynomial result = IntPolynomial::zero();
  LinkDiagram cur = d;
  for (;;) {
    auto bad = detail::first_bad_crossing(cur);
    if (!bad) {
      if (m == 1) result += IntPolynomial::one();
      break;
    }
    int eps = cur.crossings[*bad].sign;
    result += conway_impl(detail::smooth_raw(cur, *bad), cache).shifted(1, BigInt(eps));
    cur = simplify_r1(detail::switch_raw(cur, *bad));
    if (cur.crossings.empty()) {
      if (m == 1) result += IntPolynomial::one();
      break;
    }
    if (detail::is_split(cur)) break;
  }

  check_parity(result, m);
  if (cache) {
    if (cache->shared) {
      std::lock_guard<std::mutex> g(cache->mu);
      cache->poly[key] = result;
    } else {
      cache->poly[key] = result;
    }
  }
  return result;
}

}  // namespace

IntPolynomial conway(const LinkDiagram& d, MemoCache* cache) {
  if (d.component_count < 1) throw Error(Err::EmptyDiagram, "conway of an empty diagram");
  MemoCache local;
  return conway_impl(d, cache ? cache : &local);
}

BigInt extract_coeff(const IntPolynomial& p, int m, int k) {
  if (k != 0 && k != 1) throw Error(Err::Parse, "extract_coeff index must be 0 or 1");
  if (m < 1) throw Error(Err::EmptyDiagram, "extract_coeff needs m >= 1");
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    if (i < m - 1 || ((i - (m - 1)) % 2) != 0)
      throw Error(Err::ParityViolation, "coefficient at degree " + std::to_string(i) +
                                            " violates the z^(m-1) parity structure");
  }
  return p.coeff(m - 1 + 2 * k);
}

BigInt hoste_c0(const LinkingMatrix& lk) {
  const int m = lk.m;
  if (m < 1) throw Error(Err::EmptyDiagram, "linking matrix of an empty diagram");
  if (m == 1) return BigInt(1);
  // reduced graph Laplacian of the linking weights (component m deleted)
  const int n = m - 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 1; i <= n; ++i) {
    BigInt diag = 0;
    for (int j = 1; j <= m; ++j)
      if (j != i) diag += lk.at(i, j);
    a[i - 1][i - 1] = diag;
    for (int j = 1; j <= n; ++j)
      if (j != i) a[i - 1][j - 1] = -BigInt(lk.at(i, j));
  }
  // Bareiss fraction-free elimination
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return BigInt(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

constexpr int kDetMinCrossings = 26;
constexpr int kMemoMaxCrossings = 6000;

C01 c01_impl(const LinkDiagram& d0, MemoCache* cache) {
  LinkDiagram d = simplify_r1(d0);
  const int m = d.component_count;
  if (d.crossings.empty()) return m == 1 ? C01{1, 0} : C01{0, 0};
  if (detail::is_split(d)) return C01{0, 0};

  std::string key;
  const bool memo = cache && static_cast<int>(d.crossings.size()) <= kMemoMaxCrossings;
  if (memo) {
    key = canonical_key(d);
    if (cache->shared) {
      std::lock_guard<std::mutex> g(cache->mu);
      auto it = cache->window.find(key);
      if (it != cache->window.end()) return it->second;
    } else {
      auto it = cache->window.find(key);
      if (it != cache->window.end()) return it->second;
    }
  }

  const LinkingMatrix lk = linking_matrix(d);
  const BigInt h0 = hoste_c0(lk);
  auto& st = engine_stats();

  C01 result{0, 0};
  bool solved = false;
  if (static_cast<int>(d.crossings.size()) > kDetMinCrossings && m >= 2 && h0 != 0) {
    ++st.det_calls;
    auto c1 = detail::c1_series_det(d, h0, m);
    if (c1) {
      result = C01{h0, *c1};
      solved = true;
    } else {
      ++st.det_fallbacks;
    }
  }

  if (!solved) {
    LinkDiagram cur = d;
    for (;;) {
      auto bad = detail::first_bad_crossing(cur);
      if (!bad) {
        if (m == 1) result.c0 += 1;
        break;
      }
      BigInt eps(cur.crossings[*bad].sign);
      LinkDiagram sm = detail::smooth_raw(cur, *bad);
      if (sm.component_count == m - 1) {
        C01 r = c01_impl(sm, cache);
        result.c0 += eps * r.c0;
        result.c1 += eps * r.c1;
      } else {
        // self smoothing raises the component count; only its lowest
        // coefficient reaches the window, and that one is the linking form
        result.c1 += eps * hoste_c0(linking_matrix(sm));
      }
      cur = simplify_r1(detail::switch_raw(cur, *bad));
      if (cur.crossings.empty()) {
        if (m == 1) result.c0 += 1;
        break;
      }
      if (detail::is_split(cur)) break;
    }
    ++st.c0_checks;
    if (result.c0 != h0) {
      ++st.c0_violations;
      throw Error(Err::ParityViolation, "skein c0 disagrees with the linking-matrix value");
    }
  }

  if (memo) {
    if (cache->shared) {
      std::lock_guard<std::mutex> g(cache->mu);
      cache->window[key] = result;
    } else {
      cache->window[key] = result;
    }
  }
  return result;
}

}  // namespace

C01 conway_c01(const LinkDiagram& d, MemoCache* cache) {
  if (d.component_count < 1) throw Error(Err::EmptyDiagram, "conway_c01 of an empty diagram");
  MemoCache local;
  return c01_impl(d, cache ? cache : &local);
}

}  // namespace m3
