#include "specwave/triple_product.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specwave {

namespace {

struct Extent {
  int m_max = 0;
  int n_max = 0;
  int wedge_max = 0;  // max m+n over stored modes
};

Extent extent_of(const SpectralField& f) {
  Extent e;
  for (const auto& [mode, c] : f.coeffs()) {
    if (mode.m > e.m_max) e.m_max = mode.m;
    if (mode.n > e.n_max) e.n_max = mode.n;
    if (mode.m + mode.n > e.wedge_max) e.wedge_max = mode.m + mode.n;
  }
  return e;
}

double product_tail(const SpectralField& u, const SpectralField& v,
                    const SpectralField& w) {
  return u.tail_budget() * norm(v) * norm(w) + norm(u) * v.tail_budget() * norm(w) +
         norm(u) * norm(v) * w.tail_budget();
}

void require_same_weight(const SpectralField& u, const SpectralField& v,
                         const SpectralField& w) {
  if (!(u.weight() == v.weight()) || !(u.weight() == w.weight()))
    throw std::invalid_argument("triple_product: mismatched weight configurations");
}

}  // namespace

SpectralField triple_product_reference(const SpectralField& u, const SpectralField& v,
                                       const SpectralField& w) {
  require_same_weight(u, v, w);
  SpectralField out(u.weight());
  out.set_tail(product_tail(u, v, w));

  // sin A sin B sin C = (1/4)[-sin(A+B+C) + sin(-A+B+C) + sin(A-B+C) + sin(A+B-C)]
  for (const auto& [p1, c1] : u.coeffs()) {
    for (const auto& [p2, c2] : v.coeffs()) {
      const double c12 = c1 * c2;
      for (const auto& [p3, c3] : w.coeffs()) {
        const double c = c12 * c3 / 16.0;
        const int mt[4] = {p1.m + p2.m + p3.m + 1, -p1.m + p2.m + p3.m,
                           p1.m - p2.m + p3.m, p1.m + p2.m - p3.m};
        const int mx[4] = {p1.n + p2.n + p3.n + 1, -p1.n + p2.n + p3.n,
                           p1.n - p2.n + p3.n, p1.n + p2.n - p3.n};
        for (int i = 0; i < 4; ++i) {
          const double si = (i == 0) ? -1.0 : 1.0;
          for (int j = 0; j < 4; ++j) {
            const double sj = (j == 0) ? -1.0 : 1.0;
            out.accumulate(mt[i], mx[j], si * sj * c);
          }
        }
      }
    }
  }
  return out;
}

SpectralField triple_product(const SpectralField& u, const SpectralField& v,
                             const SpectralField& w) {
  require_same_weight(u, v, w);
  SpectralField out(u.weight());
  out.set_tail(product_tail(u, v, w));
  if (u.empty() || v.empty() || w.empty()) return out;

  const Extent eu = extent_of(u), ev = extent_of(v), ew = extent_of(w);

  // Stage 1: scatter u*v onto the even cosine lattice
  //   sin a sin b = (1/2)[cos(a-b) - cos(a+b)],
  // giving cells cos(2p tau) cos(2r x) with p,r >= 0.
  const int p_max = eu.m_max + ev.m_max + 1;
  const int r_max = eu.n_max + ev.n_max + 1;
  const std::size_t stride = static_cast<std::size_t>(r_max) + 1;
  std::vector<double> lattice((static_cast<std::size_t>(p_max) + 1) * stride, 0.0);
  auto cell = [&](int p, int r) -> double& {
    return lattice[static_cast<std::size_t>(p) * stride + static_cast<std::size_t>(r)];
  };
  for (const auto& [p1, c1] : u.coeffs()) {
    for (const auto& [p2, c2] : v.coeffs()) {
      const double c = 0.25 * c1 * c2;
      const int pd = p1.m >= p2.m ? p1.m - p2.m : p2.m - p1.m;
      const int ps = p1.m + p2.m + 1;
      const int rd = p1.n >= p2.n ? p1.n - p2.n : p2.n - p1.n;
      const int rs = p1.n + p2.n + 1;
      cell(pd, rd) += c;
      cell(pd, rs) -= c;
      cell(ps, rd) -= c;
      cell(ps, rs) += c;
    }
  }

  // Stage 2: gather each output sine mode from w against the lattice,
  //   cos(2p t) sin((2m+1)t) = (1/2)[sin((2(m+p)+1)t) + sin((2(m-p)+1)t)],
  // so output index M collects p = M-m3 and p = m3-M (both at p=0 when
  // M = m3, which restores the full cos(0) weight) plus the reflected
  // branch p = M+m3+1 with a minus sign.
  std::vector<std::pair<ModeIndex, double>> wm(w.coeffs().begin(), w.coeffs().end());
  const int m_out = eu.m_max + ev.m_max + ew.m_max + 1;
  const int n_out = eu.n_max + ev.n_max + ew.n_max + 1;
  const int wedge_out = eu.wedge_max + ev.wedge_max + ew.wedge_max + 2;
  const std::size_t out_stride = static_cast<std::size_t>(n_out) + 1;
  std::vector<double> result((static_cast<std::size_t>(m_out) + 1) * out_stride, 0.0);

#pragma omp parallel for schedule(static)
  for (int M = 0; M <= m_out; ++M) {
    const int n_hi = std::min(n_out, wedge_out - M);
    for (int N = 0; N <= n_hi; ++N) {
      double acc = 0.0;
      for (const auto& [p3, c3] : wm) {
        // Cells beyond the scatter lattice hold no mass; skip those branches.
        int pt[3];
        double st[3];
        int nt = 0;
        if (M >= p3.m && M - p3.m <= p_max) { pt[nt] = M - p3.m; st[nt++] = 0.5; }
        if (p3.m >= M && p3.m - M <= p_max) { pt[nt] = p3.m - M; st[nt++] = 0.5; }
        if (M + p3.m + 1 <= p_max) { pt[nt] = M + p3.m + 1; st[nt++] = -0.5; }
        int rx[3];
        double sx[3];
        int nx = 0;
        if (N >= p3.n && N - p3.n <= r_max) { rx[nx] = N - p3.n; sx[nx++] = 0.5; }
        if (p3.n >= N && p3.n - N <= r_max) { rx[nx] = p3.n - N; sx[nx++] = 0.5; }
        if (N + p3.n + 1 <= r_max) { rx[nx] = N + p3.n + 1; sx[nx++] = -0.5; }
        double term = 0.0;
        for (int i = 0; i < nt; ++i) {
          const double* row = lattice.data() + static_cast<std::size_t>(pt[i]) * stride;
          double rowsum = 0.0;
          for (int j = 0; j < nx; ++j) rowsum += sx[j] * row[rx[j]];
          term += st[i] * rowsum;
        }
        acc += c3 * term;
      }
      result[static_cast<std::size_t>(M) * out_stride + static_cast<std::size_t>(N)] = acc;
    }
  }

  for (int M = 0; M <= m_out; ++M)
    for (int N = 0; N <= n_out; ++N) {
      const double c = result[static_cast<std::size_t>(M) * out_stride + static_cast<std::size_t>(N)];
      if (c != 0.0) out.set(M, N, c);
    }
  return out;
}

}  // namespace specwave
