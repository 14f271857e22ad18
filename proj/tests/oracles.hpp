#pragma once

// Deliberately naive reference implementations. None of them calls into the
// library's elimination, restriction or enumeration code.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fano/cubic.hpp"

namespace oracle {

using QRow = std::vector<mpq_class>;
using QMat = std::vector<QRow>;

/// Textbook Gaussian elimination over Q with rational pivots.
inline std::size_t rank_q(QMat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// dim ker by counting all solutions of m x = 0 over F_p; p^cols must be small.
inline std::size_t kernel_dim_fp_bruteforce(const std::vector<std::vector<long>>& m, long p,
                                            std::size_t cols) {
  std::vector<long> x(cols, 0);
  std::size_t count = 0;
  for (;;) {
    bool zero = true;
    for (const auto& row : m) {
      long acc = 0;
      for (std::size_t k = 0; k < cols; ++k) acc = (acc + row[k] * x[k]) % p;
      if (acc != 0) {
        zero = false;
        break;
      }
    }
    count += zero;
    std::size_t k = 0;
    while (k < cols && ++x[k] == p) x[k++] = 0;
    if (k == cols) break;
  }
  std::size_t dim = 0;
  for (std::size_t c = count; c > 1; c /= static_cast<std::size_t>(p)) ++dim;
  return dim;
}

/// Sparse polynomial in five variables over Q.
using Poly5 = std::map<std::array<int, 5>, mpq_class>;

inline Poly5 mul(const Poly5& a, const Poly5& b) {
  Poly5 out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::array<int, 5> e{};
      for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline void add_into(Poly5& a, const Poly5& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

/// det of a 6 x 6 matrix of polynomials by Laplace expansion along rows,
/// memoized on the set of remaining columns.
inline Poly5 det_laplace(const std::array<std::array<Poly5, 6>, 6>& m) {
  std::map<unsigned, Poly5> memo;
  auto rec = [&](auto&& self, int row, unsigned mask) -> Poly5 {
    if (row == 6) return Poly5{{std::array<int, 5>{}, mpq_class(1)}};
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly5 acc;
    int sign = 1;
    for (int c = 0; c < 6; ++c) {
      if (!(mask & (1U << c))) continue;
      if (!m[row][c].empty()) add_into(acc, mul(m[row][c], self(self, row + 1, mask & ~(1U << c))), sign);
      sign = -sign;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, 0, 0x3FU);
}

/// Evaluates a sparse form at an integer vector mod p, straight from its terms.
inline long eval_mod(const fano::MultiForm& f, const std::vector<long>& x, long p) {
  long acc = 0;
  for (const auto& [e, c] : f.terms()) {
    long t = static_cast<long>(c.in_field(static_cast<std::uint32_t>(p)).residue());
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t = t * x[i] % p;
    }
    acc = (acc + t) % p;
  }
  return acc;
}

/// Canonical form of the span of two vectors mod p (own small RREF).
inline std::vector<long> span_key(std::vector<long> a, std::vector<long> b, long p) {
  auto inv = [p](long v) {
    long r = 1, base = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<long>> rows{std::move(a), std::move(b)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < 6 && r < 2; ++c) {
    std::size_t piv = r;
    while (piv < 2 && rows[piv][c] == 0) ++piv;
    if (piv == 2) continue;
    std::swap(rows[piv], rows[r]);
    const long s = inv(rows[r][c]);
    for (auto& v : rows[r]) v = v * s % p;
    for (std::size_t i = 0; i < 2; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (std::size_t k = 0; k < 6; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
    }
    ++r;
  }
  std::vector<long> key = rows[0];
  key.insert(key.end(), rows[1].begin(), rows[1].end());
  return key;
}

/// Lines on {F = 0} over F_p from pairs of points: every point of P^5(F_p)
/// is tested, and a pair spans a line on Y when all p + 1 points of the span
/// vanish (enough for a cubic since p + 1 > 3).
inline std::set<std::vector<long>> lines_by_point_pairs(const fano::MultiForm& f, long p) {
  std::vector<std::vector<long>> pts;
  std::vector<long> x(6, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < 6 && ++x[k] == p) x[k++] = 0;
    if (k == 6) break;
    long lead = 0;
    for (int i = 5; i >= 0; --i) {
      if (x[i] != 0) lead = x[i];
    }
    if (lead != 1) continue;
    if (eval_mod(f, x, p) == 0) pts.push_back(x);
  }
  std::set<std::vector<long>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool all = true;
      std::vector<long> y(6);
      for (long t = 1; t < p && all; ++t) {
        for (int k = 0; k < 6; ++k) y[k] = (pts[i][k] + t * pts[j][k]) % p;
        all = eval_mod(f, y, p) == 0;
      }
      if (all) lines.insert(span_key(pts[i], pts[j], p));
    }
  }
  return lines;
}

inline std::size_t points_on(const fano::MultiForm& f, long p) {
  std::size_t n = 0;
  std::vector<long> x(6, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < 6 && ++x[k] == p) x[k++] = 0;
    if (k == 6) break;
    long lead = 0;
    for (int i = 5; i >= 0; --i) {
      if (x[i] != 0) lead = x[i];
    }
    n += lead == 1 && eval_mod(f, x, p) == 0;
  }
  return n;
}

/// Binary form as dense coefficients of t0^(d-k) t1^k.
using Dense = std::vector<mpq_class>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// h^0(N(j)) for the rational cubic f and line rows a0, a1, built from
/// scratch: own partial derivatives, own substitution, a frame chosen
/// greedily from e_0..e_5, and a dense matrix of the multiplication map
/// O(j+1)^4 -> O(j+3).
inline int h0_normal_twist(const fano::MultiForm& f, const QRow& a0, const QRow& a1, int j) {
  if (j < -1) return 0;
  std::vector<QRow> frame;
  QMat acc{a0, a1};
  for (int e = 0; e < 6 && frame.size() < 4; ++e) {
    QRow v(6, 0);
    v[e] = 1;
    QMat trial = acc;
    trial.push_back(v);
    if (rank_q(trial) == trial.size()) {
      acc = trial;
      frame.push_back(v);
    }
  }
  // q_i = sum_k d_k F(s a0 + t a1) * frame_i[k]
  std::array<Dense, 4> q{Dense(3), Dense(3), Dense(3), Dense(3)};
  for (const auto& [e, c] : f.terms()) {
    const mpq_class cq = c.rational_value();
    for (int k = 0; k < 6; ++k) {
      if (e[k] == 0) continue;
      Dense prod{cq * e[k]};
      for (int v = 0; v < 6; ++v) {
        const int pw = e[v] - (v == k ? 1 : 0);
        for (int r = 0; r < pw; ++r) prod = dense_mul(prod, Dense{a0[v], a1[v]});
      }
      for (int i = 0; i < 4; ++i) {
        if (frame[i][k] == 0) continue;
        for (int m = 0; m < 3; ++m) q[i][m] += frame[i][k] * prod[m];
      }
    }
  }
  const int in_deg = j + 1;
  const int out_deg = j + 3;
  QMat m(out_deg + 1, QRow(4 * (in_deg + 1), 0));
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k <= in_deg; ++k) {
      for (int r = 0; r < 3; ++r) m[k + r][i * (in_deg + 1) + k] += q[i][r];
    }
  }
  return 4 * (in_deg + 1) - static_cast<int>(rank_q(m));
}

}  // namespace oracle
