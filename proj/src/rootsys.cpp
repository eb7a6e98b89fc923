#include "weylhom/rootsys.hpp"

#include "weylhom/errors.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace weylhom {

char family_letter(Family f) {
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::C: return 'C';
  case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw ValidationError("unknown family '" + text + "' (expected one of A, B, C, D)");
}

std::string RootSystem::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

Rational RootSystem::form(const IntVector& a, const IntVector& b) const {
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0)
      continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0 && cartan_[i][j] != 0)
        sum += symmetrizers_[i] * cartan_[i][j] * a[i] * b[j];
  }
  return sum;
}

std::vector<Rational> RootSystem::to_root_coords(const IntVector& w) const {
  std::vector<Rational> out(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      out[i] += inv_cartan_[i][j] * w[j];
  return out;
}

IntVector RootSystem::to_weight_coords(const IntVector& r) const {
  IntVector out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      out[i] += cartan_[i][j] * r[j];
  return out;
}

namespace {

std::vector<std::vector<long>> cartan_matrix(Family family, int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    a[i][i] = 2;
  const int chain_end = family == Family::D ? n - 1 : n; // D: nodes 1..n-1 form a chain
  for (int i = 0; i + 1 < chain_end; ++i)
    a[i][i + 1] = a[i + 1][i] = -1;
  switch (family) {
  case Family::A:
    break;
  case Family::B:
    a[n - 1][n - 2] = -2;
    break;
  case Family::C:
    a[n - 2][n - 1] = -2;
    break;
  case Family::D:
    a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
    break;
  }
  return a;
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0)
      ++p; // Cartan matrices are nonsingular
    std::swap(m[p], m[c]);
    const Rational lead = m[c][c];
    for (auto& x : m[c])
      x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0)
        continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = m[i][n + j];
  return inv;
}

// Unnormalized symmetrizers: d_1 = 1 and d_i a_ij = d_j a_ji along edges.
std::vector<Rational> raw_symmetrizers(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || sgn(d[j]) != 0)
        continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      todo.push(j);
    }
  }
  return d;
}

// Root-string closure. Roots are processed in order of height; for a root
// beta and a simple root alpha_i, the alpha_i-string through beta is
// beta - p alpha_i, ..., beta + q alpha_i with p - q = <beta, alpha_i^vee>.
std::vector<IntVector> positive_root_closure(const std::vector<std::vector<long>>& a) {
  const int n = static_cast<int>(a.size());
  std::set<IntVector> roots;
  std::vector<IntVector> layer;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        long p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down))
            break;
          ++p;
        }
        long pairing = 0;
        for (int j = 0; j < n; ++j)
          pairing += a[i][j] * beta[j];
        const long q = p - pairing;
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (!roots.count(up))
            next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  std::vector<IntVector> out(roots.begin(), roots.end());
  auto ht = [](const IntVector& v) {
    long s = 0;
    for (long x : v)
      s += x;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const IntVector& x, const IntVector& y) {
    const long hx = ht(x), hy = ht(y);
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

} // namespace

RootSystemPtr build_root_system(Family family, int rank, int max_rank) {
  const int min_rank = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (rank < min_rank)
    throw ValidationError(std::string("rank ") + std::to_string(rank) + " is illegal for type " +
                          family_letter(family) + " (minimum " + std::to_string(min_rank) + ")");
  if (rank > max_rank)
    throw ValidationError("rank " + std::to_string(rank) + " exceeds the rank cap " +
                          std::to_string(max_rank));

  auto rs = std::make_shared<RootSystem>();
  rs->family_ = family;
  rs->rank_ = rank;
  rs->cartan_ = cartan_matrix(family, rank);
  rs->inv_cartan_ = inverse(rs->cartan_);
  rs->positive_roots_ = positive_root_closure(rs->cartan_);

  // theta: the unique element dominating every positive root componentwise.
  const auto& roots = rs->positive_roots_;
  for (const auto& candidate : roots) {
    const bool dominates = std::all_of(roots.begin(), roots.end(), [&](const IntVector& r) {
      for (int i = 0; i < rank; ++i)
        if (r[i] > candidate[i])
          return false;
      return true;
    });
    if (dominates) {
      rs->theta_ = candidate;
      break;
    }
  }

  rs->symmetrizers_ = raw_symmetrizers(rs->cartan_);
  const Rational theta_len = rs->form(rs->theta_, rs->theta_);
  for (auto& d : rs->symmetrizers_)
    d = d * 2 / theta_len;
  return rs;
}

std::set<int> compute_I0(const RootSystem& rs) {
  std::set<int> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (Rational(rs.theta()[i - 1]) == Rational(2) / rs.root_length2(i))
      out.insert(i);
  return out;
}

Weight::Weight(RootSystemPtr rs, IntVector coords) : rs_(std::move(rs)), coords_(std::move(coords)) {
  if (!rs_)
    throw ValidationError("weight without a root system");
  if (static_cast<int>(coords_.size()) != rs_->rank())
    throw ValidationError("weight has " + std::to_string(coords_.size()) +
                          " coordinates, root system " + rs_->name() + " needs " +
                          std::to_string(rs_->rank()));
}

Weight Weight::zero(RootSystemPtr rs) {
  const int n = rs->rank();
  return Weight(std::move(rs), IntVector(n, 0));
}

Weight Weight::fundamental(RootSystemPtr rs, int node) {
  if (node < 0 || node > rs->rank())
    throw ValidationError("node " + std::to_string(node) + " out of range for " + rs->name());
  IntVector c(rs->rank(), 0);
  if (node > 0)
    c[node - 1] = 1;
  return Weight(std::move(rs), std::move(c));
}

Weight Weight::from_root_coords(RootSystemPtr rs, const IntVector& root_coords) {
  IntVector c = rs->to_weight_coords(root_coords);
  return Weight(std::move(rs), std::move(c));
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c >= 0; });
}

std::vector<Rational> Weight::root_coords() const { return rs_->to_root_coords(coords_); }

bool Weight::in_positive_root_cone() const {
  for (const auto& q : root_coords())
    if (q.get_den() != 1 || sgn(q) < 0)
      return false;
  return true;
}

void require_same_system(const RootSystem& a, const RootSystem& b) {
  if (!(a == b))
    throw ValidationError("mixed root systems: " + a.name() + " and " + b.name());
}

Weight Weight::operator+(const Weight& other) const {
  require_same_system(*rs_, *other.rs_);
  IntVector c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += other.coords_[i];
  return Weight(rs_, std::move(c));
}

Weight Weight::operator-(const Weight& other) const {
  require_same_system(*rs_, *other.rs_);
  IntVector c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] -= other.coords_[i];
  return Weight(rs_, std::move(c));
}

Weight Weight::operator*(long scalar) const {
  IntVector c = coords_;
  for (auto& x : c)
    x *= scalar;
  return Weight(rs_, std::move(c));
}

bool operator==(const Weight& a, const Weight& b) {
  return *a.rs_ == *b.rs_ && a.coords_ == b.coords_;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  return os.str();
}

long height(const Weight& eta) {
  if (!eta.in_positive_root_cone())
    throw ValidationError("height: weight (" + eta.to_string() + ") is not in Q+");
  long h = 0;
  for (const auto& q : eta.root_coords())
    h += q.get_num().get_si();
  return h;
}

bool dominance_leq(const Weight& mu, const Weight& lambda) {
  return (lambda - mu).in_positive_root_cone();
}

} // namespace weylhom
