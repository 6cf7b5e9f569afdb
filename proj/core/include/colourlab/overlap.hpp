#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "colourlab/overlap_matrix.hpp"

namespace colourlab {

/// Where maximize_f searches: all k x k probability matrices, or the
/// polytope B of matrices whose rows and columns all sum to 1/k.
enum class OverlapDomain { simplex, balanced };

struct MaximizeOptions {
  int starts = 64;
  double tol = 1e-10;        ///< local maxima within tol of f(barycentre) or above are reported
  int max_iterations = 20000;
  std::uint64_t seed = 1;
};

struct LocalMaximum {
  OverlapMatrix argmax;
  double value = 0.0;
  bool converged = false;
};

struct MaximizeResult {
  OverlapMatrix argmax;
  double value = 0.0;
  int n_starts = 0;
  std::vector<LocalMaximum> local_maxima;  ///< distinct, sorted by value then argmax
  bool converged = false;                  ///< every start met the stopping rule

  nlohmann::json to_json() const;
};

/// Projected-gradient ascent of f from one start point. Steps are cut so
/// every entry stays at least 1e-12; the start must lie in `domain`.
LocalMaximum ascend_f(const OverlapMatrix& start, double d, int k, OverlapDomain domain,
                      const MaximizeOptions& options = {});

/// Multi-start maximization with seeded random starts: Dirichlet(1) points
/// for the simplex, random mixtures of scaled permutation matrices for B.
MaximizeResult maximize_f(double d, int k, OverlapDomain domain, const MaximizeOptions& options = {});

/// c_{d,k} = (2(k-1) ln(k-1) - d) / (4 (k-1)^2)
double an_constant(double d, int k);

/// f(barycentre) - f(rho) - c_{d,k} (k^2 ||rho||^2 - 1).
/// Throws DomainError unless every row and column sums to 1/k (within 1e-12).
double achlioptas_naor_gap(const OverlapMatrix& rho, double d, int k);

struct StabilityClass {
  int s = 0;             ///< entries with rho_ij in (0.51/k, 1]
  bool separable = true;  ///< no entry with k rho_ij in (0.51, 1 - kappa)
  friend bool operator==(const StabilityClass&, const StabilityClass&) = default;
};

/// kappa = ln^20(k) / k. Exceeds 1 for every k below roughly e^95, so the
/// separability window (0.51, 1 - kappa) is empty at any representable k.
double separability_kappa(int k);
StabilityClass classify_stability(const OverlapMatrix& rho, int k);
/// Same scan with an explicit kappa.
StabilityClass classify_stability(const OverlapMatrix& rho, int k, double kappa);

/// The (k-1)^2 x (k-1)^2 matrix of the form eps -> ||eps||^2 on matrices with
/// zero row and column sums, in the free coordinates eps_ij (i, j < k-1).
/// Built as L^T L from the map that fills in the last row and column.
Eigen::MatrixXd hessian_H(int k);

/// (det H computed numerically, k^{2(k-1)})
std::pair<double, double> det_check(int k);

/// Ascending eigenvalues of H.
std::vector<double> hessian_eigenvalues(int k);

/// The (k-1) x (k-1) form of x -> ||x||^2 on zero-sum vectors in R^k (I + ones).
Eigen::MatrixXd zero_sum_vector_form(int k);

struct LatticeSum {
  double sum = 0.0;         ///< direct sum over the box
  double asymptotic = 0.0;  ///< (2 pi n / scale)^{p/2} det(Q)^{-1/2}
  double tail_bound = 0.0;  ///< estimate of the mass outside the box
  std::int64_t points = 0;
  bool cutoff_warning = false;  ///< tail_bound exceeds 1e-6 of the sum
};

/// Sum over y in (1/n) Z^p of exp(-n scale y^T Q y / 2), restricted to
/// |n y_i| <= cutoff * sqrt(n (Q^{-1})_ii / scale).
LatticeSum gaussian_lattice_sum(const Eigen::MatrixXd& q, int n, double scale, double cutoff = 8.0,
                                std::int64_t max_points = 200000000);

}  // namespace colourlab
