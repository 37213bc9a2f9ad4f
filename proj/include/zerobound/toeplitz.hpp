#pragma once

#include <cstddef>
#include <vector>

#include "zerobound/matrix.hpp"

namespace zerobound {

// tri(b, a, c): n x n with a on the diagonal, b below it and c above it.
struct TriToeplitz {
  std::size_t n = 2;
  Complex b;
  Complex a;
  Complex c;

  ComplexMatrix assemble() const;
};

// lambda_k = a + 2 sqrt(|bc|) e^{i(arg b + arg c)/2} cos(k pi/(n+1)), k = 1..n.
// When bc = 0 the phase factor is 1, so every eigenvalue equals a.
std::vector<Complex> toeplitz_eigenvalues(const TriToeplitz& t);

// max(|lambda_1|, |lambda_n|); the spectrum is symmetric about a on a
// segment, so the extreme moduli sit at the ends.
double toeplitz_spectral_radius(const TriToeplitz& t);

// tri(b, a, c) is normal iff |b| = |c|; compared to 1e-12.
bool is_normal(const TriToeplitz& t);

}  // namespace zerobound
