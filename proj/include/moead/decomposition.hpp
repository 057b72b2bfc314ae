#ifndef MOEAD_DECOMPOSITION_HPP_
#define MOEAD_DECOMPOSITION_HPP_

#include <string>

#include "moead/core.hpp"

namespace moead {

/// Matrix of subproblem weight vectors. Rows are nonnegative and sum to one.
struct WeightMatrix {
  Mat lambda;
  std::string provenance;

  int size() const { return static_cast<int>(lambda.size()); }
  int objectives() const { return lambda.empty() ? 0 : static_cast<int>(lambda.front().size()); }
};

/// Simplex-lattice design: all compositions of h into n_f nonnegative parts,
/// divided by h, in ascending lexicographic order. Produces
/// C(h + n_f - 1, n_f - 1) rows.
WeightMatrix decompose_sld(int h, int n_f);

/// Multiple-layer simplex-lattice design. Layer k is SLD(h[k]) contracted
/// toward the simplex centre: lambda' = tau[k] * lambda + (1 - tau[k]) / n_f.
/// Layers are concatenated in order; tau values must be pairwise distinct and
/// lie in (0, 1].
WeightMatrix decompose_msld(const std::vector<int>& h, const Vec& tau, int n_f);

/// Uniform design: picks the (n_f - 1)-tuple of distinct elements of
/// H_N = {h < N : gcd(h, N) = 1} whose good-lattice-point matrix has the
/// lowest centred L2 discrepancy, then maps it onto the simplex via the
/// power-product transformation. Candidate tuples are enumerated as ordered
/// tuples in ascending lexicographic order; ties broken by the first
/// candidate found.
WeightMatrix decompose_uniform(int n, int n_f);

/// Coprime residues below n: {h in Z>0 : h < n, gcd(h, n) = 1}.
std::vector<int> coprime_set(int n);

/// Centred L2 discrepancy of a matrix with entries in (0, 1).
double cd2_discrepancy(const Mat& u);

/// Good-lattice-point matrix for a given h-tuple, entries in {1, ..., n}:
/// u[i][j] = ((i + 1) * h[j] - 1) mod n + 1 for i = 0..n-1.
IMat glp_matrix(int n, const std::vector<int>& h);

/// Checks the weight-matrix contract: nonnegative entries, rows summing to
/// one within 1e-12. Throws std::runtime_error on violation.
void validate_weights(const WeightMatrix& w);

}  // namespace moead

#endif  // MOEAD_DECOMPOSITION_HPP_
