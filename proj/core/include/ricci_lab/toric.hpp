#pragma once

#include "ricci_lab/integer_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ricci_lab::toric {

// Linear T^k action on a product of s copies of S^3 in C^2, given by one integer
// weight row per complex coordinate in the order u_1, v_1, ..., u_s, v_s.
class TorusWeightSystem {
 public:
  TorusWeightSystem(IntegerMatrix weights, std::vector<std::string> coordinate_names = {});

  std::size_t spheres() const { return weights_.rows() / 2; }
  std::size_t torus_rank() const { return weights_.cols(); }
  const IntegerMatrix& weights() const { return weights_; }
  const std::vector<std::string>& coordinate_names() const { return names_; }

 private:
  IntegerMatrix weights_;
  std::vector<std::string> names_;
};

enum class SphereState { generic = 0, u_vanishes = 1, v_vanishes = 2 };

// Orbit type inside prod S^3: which coordinate (if any) vanishes on each sphere.
struct VanishingStratum {
  std::vector<SphereState> states;

  std::vector<std::size_t> nonvanishing_rows() const;
  std::size_t vanishing_count() const;
  std::string to_string() const;  // e.g. "v2=v3=0", "generic"
  bool operator==(const VanishingStratum&) const = default;
};

// Z_{d_1} x ... x Z_{d_m} x T^r with 1 < d_1 | d_2 | ... .
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool finite() const { return free_rank == 0; }
  Integer order() const;  // only meaningful when finite()
  std::string to_string() const;  // "1", "Z_2", "Z_2 x Z_6", "T^1"
  bool operator==(const FiniteAbelianGroup&) const = default;
};

// Point of T^k = R^k / Z^k with rational coordinates numerators[i] / denominator,
// numerators reduced into [0, denominator).
struct TorusPoint {
  std::vector<Integer> numerators;
  Integer denominator = 1;

  static TorusPoint canonical(std::vector<Integer> numerators, Integer denominator);
  TorusPoint operator+(const TorusPoint& rhs) const;
  bool is_identity() const;
  std::string to_string() const;          // "(0, 1/2, 1/2)"
  std::string roots_of_unity() const;     // "(1, -1, -1)" for the rotation factors
  bool operator==(const TorusPoint& rhs) const;
  bool operator<(const TorusPoint& rhs) const;  // by denominator, then numerators
};

// Kernel of theta -> A theta mod Z^l on T^k.
FiniteAbelianGroup torus_kernel(const IntegerMatrix& a);

// Elements of a finite kernel; throws DomainError if the kernel has positive dimension.
std::vector<TorusPoint> kernel_elements(const IntegerMatrix& a);

FiniteAbelianGroup stratum_stabilizer(const TorusWeightSystem& action, const VanishingStratum& stratum);
std::vector<TorusPoint> stratum_stabilizer_elements(const TorusWeightSystem& action,
                                                    const VanishingStratum& stratum);

struct StratumReport {
  VanishingStratum stratum;
  FiniteAbelianGroup stabilizer;
};

// All 3^s strata in lexicographic order of the encoding generic < u < v.
std::vector<StratumReport> freeness_scan(const TorusWeightSystem& action);
std::vector<StratumReport> nontrivial_strata(const TorusWeightSystem& action);
bool acts_freely(const TorusWeightSystem& action);

// Exhaustive search over the N-torsion of T^k for N <= n_max.
struct BruteForceStabilizer {
  bool determinate = false;  // false when the stabilizer has positive dimension
  FiniteAbelianGroup group;
  std::vector<TorusPoint> elements;
};

BruteForceStabilizer brute_force_stabilizer(const TorusWeightSystem& action,
                                            const VanishingStratum& stratum, int n_max);

// Invariant factors of a finite abelian group given by its full element list,
// recovered by counting p^j-torsion.
FiniteAbelianGroup group_from_elements(const std::vector<TorusPoint>& elements);

// Weight systems used by the tool.
TorusWeightSystem vertex_cut_action();   // T^3 on S^3 x S^3 x S^3, one Z_3 stratum
TorusWeightSystem edge_cut_action();     // T^3 on S^3 x S^3 x S^3, Z_2 strata only
TorusWeightSystem hopf_diagonal_action(std::size_t spheres);  // diagonal S^1 on each factor

}  // namespace ricci_lab::toric
