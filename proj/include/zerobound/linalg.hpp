#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zerobound/matrix.hpp"

namespace zerobound {

// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend; column i
// of `eigenvectors` pairs with eigenvalues[i].
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius mass drops below tol * ||A||_F.
  double relative_tolerance = 1e-13;
  int max_sweeps = 60;
};

// Cyclic complex Jacobi. Throws NonSquare, NotHermitian (when
// ||A - A*||_max > 1e-12 (1 + ||A||_max)) or NoConvergence.
HermitianEigen hermitian_eigs(const ComplexMatrix& a, JacobiOptions options = {});

// Largest eigenvalue of a Hermitian matrix.
double lambda_max(const ComplexMatrix& hermitian);

// f(H) = V diag(f(lambda)) V* for Hermitian H.
ComplexMatrix hermitian_apply(const ComplexMatrix& hermitian,
                              const std::function<double(double)>& f);

// |X| = (X* X)^{1/2}. Eigenvalues of X*X down to -1e-12 ||X||_F^2 are clamped
// to zero; anything more negative is an InternalConsistency error.
ComplexMatrix psd_abs(const ComplexMatrix& x);

// Largest singular value, sqrt(lambda_max(X* X)). Accepts rectangular input.
double operator_norm(const ComplexMatrix& x);

struct SweepOptions {
  std::size_t samples = 512;
  int refine_iters = 40;
};

// w(X) = max over theta of lambda_max(Re(e^{i theta} X)). A uniform grid on
// [0, 2pi) locates the best angle, then golden-section search refines it
// inside the two neighbouring grid cells. The result never exceeds the true
// numerical radius by more than rounding.
double numerical_radius_sweep(const ComplexMatrix& x, SweepOptions options = {});

// Numerical radius of an entrywise nonnegative real matrix, which equals
// lambda_max((C + C^T)/2). Throws NegativeEntry when an entry is negative or
// has a nonzero imaginary part.
double nonneg_numrad(const ComplexMatrix& c);

}  // namespace zerobound
