#pragma once

#include "reslab/modcore.hpp"

#include <cstdint>
#include <vector>

namespace reslab {

/// Jacobi symbol (a|n) for odd n >= 1, by binary reciprocity.
int jacobi(i64 a, u64 n);

/// Quadratic symbol (u|p): +1 for residues, -1 for nonresidues, 0 at u = 0 mod p.
/// Reciprocity path; never exponentiates.
int legendre(i64 u, const PrimeModulus& m);

/// Same symbol via u^((p-1)/2) mod p. Agrees with legendre() everywhere;
/// a power outside {0, 1, p-1} means the modulus is not prime.
int euler_criterion(i64 u, const PrimeModulus& m);

/// Characteristic functions (1 +- (u|p))/2 for nonzero u.
int char_qr(u64 u, const PrimeModulus& m);
int char_qnr(u64 u, const PrimeModulus& m);

/// Residue indicator through the primitive-root double exponential sum
/// (1/p) sum_{0<=n<(p-1)/2} sum_{0<=m<=p-1} e^{2 pi i (tau^{2n} - u) m / p},
/// evaluated literally in complex arithmetic and rounded. Cross-validation
/// oracle for char_qr; cost is Theta(p^2), so p <= 1000.
int char_qr_expsum(u64 u, const PrimeModulus& m);

/// chi[u] = (u|p) for u in [0, p) as int8, built by marking squares in O(p).
std::vector<std::int8_t> symbol_table(const PrimeModulus& m);

}  // namespace reslab
