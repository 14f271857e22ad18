#include "fano/pfaffian.hpp"

#include <map>
#include <random>

#include "fano/errors.hpp"

namespace fano {

namespace {

struct Matching {
  std::array<std::pair<std::size_t, std::size_t>, 3> pairs;
  int sign;
};

int permutation_sign(const std::array<std::size_t, 6>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Matchings of {0..5}: pair the smallest free index with each later free
// index in turn; the sign is that of the permutation (i1 j1 i2 j2 i3 j3).
std::vector<Matching> perfect_matchings() {
  std::vector<Matching> out;
  std::array<std::size_t, 6> perm{};
  std::array<bool, 6> used{};
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == 3) {
      Matching m;
      for (std::size_t k = 0; k < 3; ++k) m.pairs[k] = {perm[2 * k], perm[2 * k + 1]};
      m.sign = permutation_sign(perm);
      out.push_back(m);
      return;
    }
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    for (std::size_t j = first + 1; j < 6; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm[2 * depth] = first;
      perm[2 * depth + 1] = j;
      self(self, depth + 1);
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec, 0);
  return out;
}

Scalar random_coefficient(std::mt19937_64& rng, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  return Scalar(static_cast<long>(rng() % width) - bound);
}

long long graded_dim(int e) { return e < 0 ? 0 : binomial_poly(e + 4, 4); }

}  // namespace

long long binomial_poly(long long n, int k) {
  // n (n-1) ... (n-k+1) / k!, exact at every step.
  long long num = 1;
  long long den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

SkewLinearMatrix::SkewLinearMatrix(const std::array<std::array<Vector, 6>, 6>& coeffs)
    : coeffs_(coeffs) {
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      Vector v = coeffs_[r][c];
      if (v.empty()) v.assign(5, Scalar());
      if (v.size() != 5) throw GradingError("skew matrix entries must be linear in 5 variables");
      coeffs_[r][c] = v;
    }
  }
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      for (std::size_t k = 0; k < 5; ++k) {
        if (!(coeffs_[r][c][k] + coeffs_[c][r][k]).is_zero()) {
          throw GradingError("matrix of linear forms is not skew-symmetric");
        }
      }
      entries_[r][c] = MultiForm::linear(coeffs_[r][c]);
    }
  }
}

ExactMatrix SkewLinearMatrix::evaluate(const Vector& x) const {
  if (x.size() != 5) throw GradingError("point of P^4 needs 5 coordinates");
  ExactMatrix out(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      Scalar v;
      for (std::size_t k = 0; k < 5; ++k) v += coeffs_[r][c][k] * x[k];
      out(r, c) = v;
    }
  }
  return out;
}

SkewLinearMatrix SkewLinearMatrix::random(std::uint64_t seed, int coeff_bound) {
  std::mt19937_64 rng(seed);
  std::array<std::array<Vector, 6>, 6> c;
  for (auto& row : c) row.fill(Vector(5));
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t s = r + 1; s < 6; ++s) {
      for (std::size_t k = 0; k < 5; ++k) {
        c[r][s][k] = random_coefficient(rng, coeff_bound);
        c[s][r][k] = -c[r][s][k];
      }
    }
  }
  return SkewLinearMatrix(c);
}

MultiForm pfaffian(const SkewLinearMatrix& m) {
  static const std::vector<Matching> kMatchings = perfect_matchings();
  MultiForm out(5, 3);
  for (const auto& mt : kMatchings) {
    MultiForm term = m.entry(mt.pairs[0].first, mt.pairs[0].second) *
                     m.entry(mt.pairs[1].first, mt.pairs[1].second) *
                     m.entry(mt.pairs[2].first, mt.pairs[2].second);
    out += Scalar(mt.sign) * term;
  }
  return out;
}

CubicThreefold restrict_to_hyperplane(const CubicFourfold& y, const Vector& h) {
  if (h.size() != 6) throw GradingError("hyperplane in P^5 needs 6 coefficients");
  int k = -1;
  for (int i = 5; i >= 0; --i) {
    if (!h[static_cast<std::size_t>(i)].is_zero()) {
      k = i;
      break;
    }
  }
  if (k < 0) throw DegenerateHyperplaneError("zero linear form does not define a hyperplane");
  // x_i = y_col(i) for i != k, x_k = -(1/h_k) sum_{i != k} h_i x_i.
  ExactMatrix sub(6, 5);
  const Scalar inv = h[static_cast<std::size_t>(k)].inverse();
  std::size_t col = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (static_cast<int>(i) == k) continue;
    sub(i, col) = 1;
    sub(static_cast<std::size_t>(k), col) = -(h[i] * inv);
    ++col;
  }
  return {y.form().substitute(sub)};
}

std::vector<std::size_t> rank_profile(const SkewLinearMatrix& m, const CubicThreefold& x,
                                      const std::vector<Vector>& points) {
  std::vector<std::size_t> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    if (!x.form.evaluate(pt).is_zero()) throw PointOffVarietyError("point is not on the threefold");
    out.push_back(rank(m.evaluate(pt)));
  }
  return out;
}

std::vector<Vector> kernel_at(const SkewLinearMatrix& m, const Vector& x) {
  return kernel_basis(m.evaluate(x));
}

std::vector<Vector> points_mod_p(const CubicThreefold& x, std::uint32_t p, std::size_t limit) {
  require_odd_prime(p);
  const MultiForm f = x.form.in_field(p);
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < 5 && out.size() < limit; ++lead) {
    const std::size_t free = 4 - lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t code = 0; code < total && out.size() < limit; ++code) {
      Vector pt(5, Scalar::modp(0, p));
      pt[lead] = Scalar::modp(1, p);
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < 5; ++i) {
        pt[i] = Scalar::modp(static_cast<std::int64_t>(c % p), p);
        c /= p;
      }
      if (f.evaluate(pt).is_zero()) out.push_back(std::move(pt));
    }
  }
  return out;
}

const CohomologyRow* CohomologyTable::find(int d) const {
  for (const auto& r : rows) {
    if (r.d == d) return &r;
  }
  return nullptr;
}

bool CohomologyTable::vanishing_band() const {
  for (int d : {-3, -2, -1}) {
    const CohomologyRow* r = find(d);
    if (r == nullptr) return false;
    for (long long v : r->h) {
      if (v != 0) return false;
    }
  }
  return true;
}

ExactMatrix graded_piece(const SkewLinearMatrix& m, int e, bool transposed) {
  const auto src = monomials(5, e);
  const auto dst = monomials(5, e + 1);
  ExactMatrix out(6 * dst.size(), 6 * src.size());
  if (src.empty()) return out;
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      const Vector& lin = transposed ? m.coefficients(c, r) : m.coefficients(r, c);
      for (std::size_t a = 0; a < src.size(); ++a) {
        for (std::size_t k = 0; k < 5; ++k) {
          if (lin[k].is_zero()) continue;
          Exponent e1 = src[a];
          ++e1[k];
          out(r * dst.size() + index.at(e1), c * src.size() + a) += lin[k];
        }
      }
    }
  }
  return out;
}

CohomologyTable graded_cohomology_table(const SkewLinearMatrix& m, int d_lo, int d_hi) {
  if (pfaffian(m).is_zero()) throw DegenerateRepresentationError("Pfaffian vanishes identically");
  std::map<std::pair<int, bool>, long long> rank_cache;
  auto piece_rank = [&](int e, bool transposed) -> long long {
    if (e < 0) return 0;
    auto [it, inserted] = rank_cache.try_emplace({e, transposed}, 0);
    if (inserted) it->second = static_cast<long long>(rank(graded_piece(m, e, transposed)));
    return it->second;
  };
  CohomologyTable table;
  for (int d = d_lo; d <= d_hi; ++d) {
    CohomologyRow row;
    row.d = d;
    const long long r0 = piece_rank(d - 1, false);
    if (r0 != 6 * graded_dim(d - 1)) {
      throw InconsistencyError("M is not injective on global sections");
    }
    row.h[0] = 6 * graded_dim(d) - r0;
    const long long r3 = piece_rank(-d - 5, true);
    row.h[3] = 6 * graded_dim(-d - 4) - r3;
    row.h[4] = 6 * graded_dim(-d - 5) - r3;
    row.euler_expected = 6 * binomial_poly(d + 4, 4) - 6 * binomial_poly(d + 3, 4);
    table.rows.push_back(row);
  }
  return table;
}

bool zero_locus_member(const SkewLinearMatrix& m, const Vector& s, const Vector& x) {
  if (s.size() != 6) throw GradingError("section representative needs 6 entries");
  if (!pfaffian(m).evaluate(x).is_zero()) throw PointOffVarietyError("point is not on Pf(M) = 0");
  const ExactMatrix mx = m.evaluate(x);
  if (rank(mx) != 4) throw NonLocallyFreePointError("M(x) does not have rank 4");
  ExactMatrix aug(6, 7);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) aug(r, c) = mx(r, c);
    aug(r, 6) = s[r];
  }
  return rank(aug) == 4;
}

SkewLinearMatrix generic_skew_linear(std::uint64_t seed, int coeff_bound,
                                     std::uint32_t probe_prime, std::size_t probes) {
  for (std::uint64_t s = seed;; ++s) {
    SkewLinearMatrix m = SkewLinearMatrix::random(s, coeff_bound);
    const MultiForm pf = pfaffian(m);
    if (pf.is_zero() || pf.in_field(probe_prime).is_zero()) continue;
    bool ok = true;
    for (const auto& pt : points_mod_p({pf}, probe_prime, probes)) {
      if (rank(m.evaluate(pt)) != 4) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
}

}  // namespace fano
