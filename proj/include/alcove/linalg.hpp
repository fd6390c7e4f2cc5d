#pragma once

// Small dense exact linear algebra: vectors of rationals, matrices,
// Gaussian elimination (solve / inverse / kernel), and an exact
// feasibility test for "target is a convex combination of given points"
// (phase-1 simplex with Bland's rule).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

using Vec = std::vector<Rat>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}
inline void internal_check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec operator+(const Vec& a, const Vec& b) {
  internal_check(a.size() == b.size(), "vector dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
  internal_check(a.size() == b.size(), "vector dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline Vec operator*(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rat dot(const Vec& a, const Vec& b) {
  internal_check(a.size() == b.size(), "vector dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (const Rat& x : a) if (!x.is_zero()) return false;
  return true;
}

inline bool is_integral(const Vec& a) {
  for (const Rat& x : a) if (!x.is_integer()) return false;
  return true;
}

// lexicographic order, usable as set/map comparator
inline int vec_cmp(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_cmp(a, b) < 0; }
};

inline std::string vec_str(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols) {
    internal_check(!cols.empty(), "from_columns on empty list");
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      internal_check(cols[j].size() == m.rows, "column size mismatch");
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  Vec apply(const Vec& v) const {
    internal_check(v.size() == cols, "matrix/vector dimension mismatch");
    Vec r(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
      Rat s(0);
      for (std::size_t j = 0; j < cols; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Mat mul(const Mat& o) const {
    internal_check(cols == o.rows, "matrix dimension mismatch");
    Mat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        if (!at(i, k).is_zero())
          for (std::size_t j = 0; j < o.cols; ++j)
            if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
  }

  Vec row(std::size_t i) const {
    Vec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(std::size_t j) const {
    Vec r(rows);
    for (std::size_t i = 0; i < rows; ++i) r[i] = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline int mat_cmp(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) return x.rows < y.rows ? -1 : 1;
  if (x.cols != y.cols) return x.cols < y.cols ? -1 : 1;
  return vec_cmp(x.a, y.a);
}

// Solve M t = v.  Returns the unique solution when M has full column rank
// and the system is consistent; nullopt when inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& v) {
  internal_check(m.rows == v.size(), "solve: dimension mismatch");
  Mat w = m;
  Vec b = v;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t p = r;
    while (p < w.rows && w.at(p, c).is_zero()) ++p;
    if (p == w.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(r, j));
      std::swap(b[p], b[r]);
    }
    const Rat inv = Rat(1) / w.at(r, c);
    for (std::size_t j = 0; j < w.cols; ++j) w.at(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == r || w.at(i, c).is_zero()) continue;
      const Rat f = w.at(i, c);
      for (std::size_t j = 0; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < w.rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  internal_check(pivot_col.size() == w.cols, "solve: matrix not full column rank");
  Vec t(w.cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) t[pivot_col[i]] = b[i];
  return t;
}

inline Mat inverse(const Mat& m) {
  internal_check(m.rows == m.cols, "inverse of non-square matrix");
  const std::size_t n = m.rows;
  Mat w = m, inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c).is_zero()) ++p;
    internal_check(p < n, "inverse of singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(p, j), w.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    const Rat d = Rat(1) / w.at(c, c);
    for (std::size_t j = 0; j < n; ++j) { w.at(c, j) *= d; inv.at(c, j) *= d; }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w.at(i, c).is_zero()) continue;
      const Rat f = w.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

// Basis of the kernel {x : M x = 0}, columns scaled to primitive integer
// vectors, in echelon order.
inline std::vector<Vec> kernel(const Mat& m) {
  Mat w = m;
  std::vector<int> pivot_of_col(w.cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t p = r;
    while (p < w.rows && w.at(p, c).is_zero()) ++p;
    if (p == w.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(r, j));
    const Rat inv = Rat(1) / w.at(r, c);
    for (std::size_t j = 0; j < w.cols; ++j) w.at(r, j) *= inv;
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == r || w.at(i, c).is_zero()) continue;
      const Rat f = w.at(i, c);
      for (std::size_t j = 0; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_of_col[c] = int(r);
    ++r;
  }
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < w.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec x(w.cols, Rat(0));
    x[c] = Rat(1);
    for (std::size_t j = 0; j < w.cols; ++j)
      if (pivot_of_col[j] >= 0) x[j] = -w.at(std::size_t(pivot_of_col[j]), c);
    // scale to primitive integer vector
    std::int64_t l = 1;
    for (const Rat& e : x) l = std::lcm(l, e.den);
    std::int64_t g = 0;
    for (Rat& e : x) { e *= Rat(l); g = std::gcd(g, e.num); }
    if (g > 1) for (Rat& e : x) e = Rat(e.num / g);
    basis.push_back(x);
  }
  return basis;
}

// Exact feasibility of: target in conv(points).  Phase-1 simplex, Bland's
// rule, on coefficients t >= 0 with sum t = 1 and sum t_k p_k = target.
inline bool in_convex_hull(const std::vector<Vec>& points, const Vec& target) {
  if (points.empty()) return false;
  const std::size_t d = target.size(), n = points.size();
  const std::size_t m = d + 1;  // equality constraints
  // rows: [p_k coords; 1] t = [target; 1], artificial variables for phase 1
  std::vector<Vec> tab(m, Vec(n + m + 1, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < n; ++k) tab[i][k] = points[k][i];
    tab[i][n + m] = target[i];
  }
  for (std::size_t k = 0; k < n; ++k) tab[d][k] = Rat(1);
  tab[d][n + m] = Rat(1);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab[i][n + m] < Rat(0))
      for (std::size_t j = 0; j < n + m + 1; ++j) tab[i][j] = -tab[i][j];
    tab[i][n + i] = Rat(1);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective: minimize sum of artificials; reduced costs
  Vec cost(n + m + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n + m + 1; ++j) cost[j] += tab[i][j];
  for (;;) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n; ++j)  // artificials never re-enter
      if (cost[j] > Rat(0)) { enter = j; break; }  // Bland: first improving
    if (enter == n + m) break;
    std::size_t leave = m;
    Rat best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= Rat(0)) continue;
      const Rat ratio = tab[i][n + m] / tab[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))
        { leave = i; best = ratio; }
    }
    if (leave == m) break;  // unbounded cannot happen here
    const Rat piv = Rat(1) / tab[leave][enter];
    for (auto& x : tab[leave]) x *= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      const Rat f = tab[i][enter];
      for (std::size_t j = 0; j < n + m + 1; ++j) tab[i][j] -= f * tab[leave][j];
    }
    {
      const Rat f = cost[enter];
      for (std::size_t j = 0; j < n + m + 1; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return cost[n + m].is_zero();
}

// FNV-1a over the canonical (num,den) words of a rational vector
inline std::uint64_t vec_hash(const Vec& v) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const Rat& r : v) {
    mix(std::uint64_t(r.num));
    mix(std::uint64_t(r.den));
  }
  return h;
}

} // namespace alcove
