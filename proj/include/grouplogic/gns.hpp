#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "grouplogic/algebra.hpp"

namespace grouplogic {

/// Gram matrix of the basis deltas under the state: ⟨α,β⟩ = ω(δ_α† ⋆ δ_β).
/// Rows/columns whose modular coefficient is degenerate (support-subgroupoid
/// regime with mixed-zero λ) are zeroed and flagged.
struct GramMatrix {
  GroupoidPtr g;
  std::size_t n = 0;
  std::vector<Complex> entries;  // row-major
  std::vector<Idx> excluded;     // flagged morphism rows
  bool certified = false;

  Complex at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  double max_hermiticity_dev() const;
};

/// Assembles the Gram matrix through the actual algebra operations
/// (involution, convolution, state), parallelised over rows.
GramMatrix gram(const MeasuredGroupoid& mg, int jobs = 0);

/// Eigenvalues (ascending) of the hermitian part, by cyclic Jacobi on the
/// real part. Throws Error(Input) if the matrix is materially non-hermitian.
std::vector<double> gram_eigenvalues(const GramMatrix& gm);

/// Cyclic Jacobi for a dense real symmetric matrix; returns eigenvalues
/// ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix,
                                       std::size_t n);

/// ω(f†⋆f) <= tol.
bool in_gelfand_ideal(const MeasuredGroupoid& mg, const GroupoidFunction& f,
                      double tol = 1e-12);

/// Numerical rank of the Gram matrix: eigenvalues above tol times the
/// largest one. Dimension of the GNS space C(G)/N_ω.
std::size_t gns_dimension(const MeasuredGroupoid& mg, double tol = 1e-10);

struct NullSetCheck {
  double mu2 = 0.0;
  bool in_ideal = false;
  bool consistent = false;
};

/// μ₂(a) against membership of χ_{s⁻¹(a)} in the Gelfand ideal; consistent
/// when the two classifications agree at the tolerance.
NullSetCheck null_set_correspondence(const MeasuredGroupoid& mg,
                                     const ObjectSet& a, double tol = 1e-12);

struct GnsAtomEntry {
  std::string label;
  double mu2 = 0.0;
  bool in_ideal = false;
  bool near_threshold = false;  // within a decade of the tolerance
};

struct GnsReport {
  std::size_t dimension = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double hermiticity_dev = 0.0;
  bool certified = false;
  std::vector<GnsAtomEntry> atoms;
  std::vector<std::string> excluded_morphisms;
};

GnsReport gns_report(const MeasuredGroupoid& mg, double ideal_tol = 1e-12,
                     double rank_tol = 1e-10, int jobs = 0);

}  // namespace grouplogic
