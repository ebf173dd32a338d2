#pragma once

// Integer lattice utilities: canonical row Hermite normal form, membership,
// and preimage/kernel computations. Rows span the lattice.

#include <gmpxx.h>
#include <vector>

namespace reflex {

using IntRow = std::vector<mpz_class>;
using IntMat = std::vector<IntRow>;

// canonical HNF of the row span: pivots positive, entries above a pivot reduced
// into [0, pivot), zero rows dropped. Unique for a given span.
IntMat hnf_rows(IntMat rows);

// is v in the row span of a canonical HNF?
bool hnf_member(const IntMat& hnf, IntRow v);

// basis of { x in Z^k : sum_i x_i * A[i] lies in the row span of L }
// A has k rows; L is any basis (not necessarily HNF) with the same width.
IntMat preimage_lattice(const IntMat& A, const IntMat& L);

}  // namespace reflex
