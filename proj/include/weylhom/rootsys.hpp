#pragma once

// Classical root systems (types A, B, C, D) and weights.
//
// Node numbering follows Bourbaki throughout the library:
//   A_n  o-o-...-o                      all nodes long
//   B_n  o-o-...-o=>o                   alpha_n short
//   C_n  o-o-...-o<=o                   alpha_n long
//   D_n  o-o-...-o<o (n-1, n)           branch at node n-2
// Membership of a node in I_0 depends on this numbering.
//
// Nodes are 1-based in every public interface (node i <-> omega_i, alpha_i);
// internally vectors are 0-based.

#include "weylhom/linalg.hpp"

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace weylhom {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(const std::string& text);

/// Default rank cap; the CLI reads WEYLHOM_MAX_RANK to override it.
inline constexpr int kDefaultMaxRank = 8;

using IntVector = std::vector<long>;

class RootSystem {
public:
  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  /// Cartan matrix a_ij = <alpha_i^vee, alpha_j>, 0-based.
  const std::vector<std::vector<long>>& cartan() const noexcept { return cartan_; }
  long cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  /// d_i with diag(d) * cartan symmetric; equals (alpha_i, alpha_i)/2 under the
  /// normalization (theta, theta) = 2.
  const std::vector<Rational>& symmetrizers() const noexcept { return symmetrizers_; }
  const std::vector<std::vector<Rational>>& inv_cartan() const noexcept { return inv_cartan_; }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }
  /// Highest root in simple-root coordinates.
  const IntVector& theta() const noexcept { return theta_; }

  /// Normalized invariant form on root coordinates; (theta, theta) = 2.
  Rational form(const IntVector& a, const IntVector& b) const;
  Rational root_length2(int node) const { return symmetrizers_[node - 1] * 2; }

  /// Converts fundamental-weight coordinates to (rational) simple-root coordinates.
  std::vector<Rational> to_root_coords(const IntVector& weight_coords) const;
  /// Converts simple-root coordinates to fundamental-weight coordinates.
  IntVector to_weight_coords(const IntVector& root_coords) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

private:
  friend std::shared_ptr<const RootSystem> build_root_system(Family, int, int);

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rational> symmetrizers_;
  std::vector<std::vector<Rational>> inv_cartan_;
  std::vector<IntVector> positive_roots_;
  IntVector theta_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Builds the root system; positive roots come from the root-string closure
/// starting at the simple roots. Throws ValidationError for an illegal rank
/// (A: >= 1, B/C: >= 2, D: >= 3) or a rank above max_rank.
RootSystemPtr build_root_system(Family family, int rank, int max_rank = kDefaultMaxRank);

/// Nodes i (1-based) whose coefficient in theta equals 2/(alpha_i, alpha_i).
std::set<int> compute_I0(const RootSystem& rs);

/// Element of the weight lattice P, in fundamental-weight coordinates.
class Weight {
public:
  Weight(RootSystemPtr rs, IntVector coords);

  static Weight zero(RootSystemPtr rs);
  /// omega_i; fundamental(rs, 0) is omega_0 = 0.
  static Weight fundamental(RootSystemPtr rs, int node);
  static Weight from_root_coords(RootSystemPtr rs, const IntVector& root_coords);

  const RootSystemPtr& root_system() const noexcept { return rs_; }
  const IntVector& coords() const noexcept { return coords_; }
  long operator[](int node) const { return coords_[node - 1]; }

  bool is_dominant() const;
  std::vector<Rational> root_coords() const;
  /// True iff the weight lies in Q^+ (nonnegative integer root coordinates).
  bool in_positive_root_cone() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator*(long scalar) const;

  friend bool operator==(const Weight& a, const Weight& b);
  /// Lexicographic order on coordinates (for containers and output ordering).
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

private:
  RootSystemPtr rs_;
  IntVector coords_;
};

void require_same_system(const RootSystem& a, const RootSystem& b);

/// Sum of simple-root coordinates; eta must lie in Q^+.
long height(const Weight& eta);

/// mu <= lambda iff lambda - mu is in Q^+.
bool dominance_leq(const Weight& mu, const Weight& lambda);

} // namespace weylhom
