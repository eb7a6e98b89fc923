#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library: arithmetic is Boost.Multiprecision, algorithms are the naive
// textbook ones.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Mat = std::vector<std::vector<Rat>>;

inline Int binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n)
    return 0;
  // Pascal's rule, row by row.
  std::vector<Int> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 1);
    for (long j = 1; j < i; ++j)
      next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[r];
}

/// Leibniz expansion over all permutations.
inline Int leibniz_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        inversions += p[i] > p[j];
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Plain Gaussian elimination over Q.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Rat det(Mat m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j)
        m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Rat>(c, 0)); }

// ---------------------------------------------------------------- characters

enum class Fam { A, B, C, D };

/// I_0 in Bourbaki numbering, written out by hand from the highest roots.
inline std::set<int> i0(Fam f, int n) {
  std::set<int> all;
  for (int i = 1; i <= n; ++i)
    all.insert(i);
  switch (f) {
  case Fam::A:
  case Fam::C: return all;
  case Fam::B: return {1, n};
  case Fam::D: return {1, n - 1, n};
  }
  return {};
}

/// c_s by expanding the product copy by copy: every copy of a node outside
/// I_0 picks some j, contributing omega_{i-2j} with weight C(j+k-1, j).
inline std::map<std::vector<long>, Int> hom_rank(Fam f, int n, const std::vector<long>& s, long k) {
  const auto I0 = i0(f, n);
  std::vector<int> copies;
  for (int i = 1; i <= n; ++i)
    for (long c = 0; c < s[i - 1]; ++c)
      copies.push_back(i);
  std::map<std::vector<long>, Int> out;
  std::vector<long> weight(n, 0);
  auto rec = [&](auto&& self, std::size_t idx, Int mult) -> void {
    if (idx == copies.size()) {
      out[weight] += mult;
      return;
    }
    const int i = copies[idx];
    for (int j = 0; i - 2 * j >= 0; ++j) {
      if (I0.count(i) && j > 0)
        break;
      Int w = I0.count(i) ? Int(1) : (k == 0 ? Int(j == 0 ? 1 : 0) : binomial(j + k - 1, j));
      if (w == 0)
        continue;
      const int node = i - 2 * j;
      if (node > 0)
        ++weight[node - 1];
      self(self, idx + 1, mult * w);
      if (node > 0)
        --weight[node - 1];
    }
  };
  rec(rec, 0, 1);
  return out;
}

// ---------------------------------------------------------------- sl_n modules

/// Raising operators E_a (a = 1..n-1) and weights on Lambda^i C^n, built from
/// the action on the natural module e_b -> delta_{b,a+1} e_a, extended to
/// wedges by the Leibniz rule with explicit sorting signs.
struct Exterior {
  std::vector<std::vector<int>> basis;
  std::vector<Mat> e;
  std::vector<std::vector<long>> weights;
};

inline Exterior exterior(int n, int i) {
  Exterior out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i)
      continue;
    std::vector<int> s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b))
        s.push_back(b + 1);
    out.basis.push_back(s);
  }
  std::sort(out.basis.begin(), out.basis.end());
  const std::size_t d = out.basis.size();
  auto find = [&](const std::vector<int>& s) {
    return static_cast<std::size_t>(std::find(out.basis.begin(), out.basis.end(), s) - out.basis.begin());
  };
  for (int a = 1; a < n; ++a) {
    Mat m = zeros(d, d);
    for (std::size_t col = 0; col < d; ++col) {
      const auto& s = out.basis[col];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        if (s[pos] != a + 1)
          continue;
        std::vector<int> t = s;
        t[pos] = a;
        // sort t, tracking the sign; repeated entries give zero
        int sign = 1;
        for (std::size_t x = 0; x < t.size(); ++x)
          for (std::size_t y = 0; y + 1 < t.size() - x; ++y)
            if (t[y] > t[y + 1]) {
              std::swap(t[y], t[y + 1]);
              sign = -sign;
            }
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
          continue;
        m[find(t)][col] += sign;
      }
    }
    out.e.push_back(m);
  }
  for (const auto& s : out.basis) {
    std::vector<long> w(n - 1, 0);
    for (int a = 1; a < n; ++a)
      w[a - 1] = (std::count(s.begin(), s.end(), a) ? 1 : 0) - (std::count(s.begin(), s.end(), a + 1) ? 1 : 0);
    out.weights.push_back(w);
  }
  return out;
}

/// dim { v of weight mu : sum_j p_j^d (E_a acting on factor j) v = 0, all a, d < m }
/// for evaluation modules Lambda^{i_j} C^n at the points p_j.
inline std::size_t loop_invariant_dim(int n, const std::vector<int>& nodes, const std::vector<Rat>& points,
                                      const std::vector<long>& mu) {
  std::vector<Exterior> mods;
  for (int i : nodes)
    mods.push_back(exterior(n, i));
  std::size_t total = 1;
  for (const auto& m : mods)
    total *= m.basis.size();
  // weights of the tensor basis
  std::vector<std::vector<long>> wts{std::vector<long>(n - 1, 0)};
  for (const auto& m : mods) {
    std::vector<std::vector<long>> next;
    for (const auto& w : wts)
      for (const auto& x : m.weights) {
        auto y = w;
        for (int a = 0; a < n - 1; ++a)
          y[a] += x[a];
        next.push_back(y);
      }
    wts = next;
  }
  std::vector<std::size_t> cols;
  for (std::size_t b = 0; b < total; ++b)
    if (wts[b] == mu)
      cols.push_back(b);
  if (cols.empty())
    return 0;
  // Image of each weight-mu basis vector under every constraint operator,
  // computed factor by factor; the rank of these images is the rank of the
  // constraint matrix restricted to the weight space.
  Mat images;
  for (auto c : cols) {
    std::vector<std::size_t> idx(mods.size());
    std::size_t rest = c;
    for (std::size_t j = mods.size(); j-- > 0;) {
      idx[j] = rest % mods[j].basis.size();
      rest /= mods[j].basis.size();
    }
    std::vector<Rat> image;
    for (int a = 0; a < n - 1; ++a)
      for (std::size_t d = 0; d < nodes.size(); ++d) {
        std::vector<Rat> out(total, 0);
        for (std::size_t j = 0; j < mods.size(); ++j) {
          Rat pd = 1;
          for (std::size_t p = 0; p < d; ++p)
            pd *= points[j];
          const auto& e = mods[j].e[a];
          for (std::size_t r = 0; r < e.size(); ++r) {
            if (e[r][idx[j]] == 0)
              continue;
            auto moved = idx;
            moved[j] = r;
            std::size_t flat = 0;
            for (std::size_t q = 0; q < mods.size(); ++q)
              flat = flat * mods[q].basis.size() + moved[q];
            out[flat] += pd * e[r][idx[j]];
          }
        }
        image.insert(image.end(), out.begin(), out.end());
      }
    images.push_back(image);
  }
  return cols.size() - rank(images);
}

} // namespace oracle
