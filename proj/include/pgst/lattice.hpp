#pragma once
// Exact integer linear algebra: saturated kernels of rational constraint
// matrices via a row-style Hermite normal form, lattice membership, and a
// rational independent-row selector used to compress large sparse systems.
#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace pgst {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<mpq_class>;
using RatMat = std::vector<RatVec>;

// Row Hermite normal form of the lattice spanned by the given rows: zero
// rows dropped, pivot entries positive, entries above each pivot reduced
// into [0, pivot), pivot columns strictly increasing.  Unique per lattice.
IntMat hermite_normal_form(IntMat rows);

// Basis of the saturated integer kernel {x in Z^cols : M x = 0}, returned
// as the rows of a Hermite-normal-form matrix (deterministic).  Every
// integer solution is an integer combination of the returned rows.
// Rational constraint rows are scaled by the lcm of their denominators.
IntMat integer_kernel(const IntMat& m, std::size_t cols);
IntMat integer_kernel(const RatMat& m, std::size_t cols);

// Membership of v in the lattice spanned by rows in Hermite normal form
// (as produced by hermite_normal_form or integer_kernel).
bool in_lattice(const IntVec& v, const IntMat& hnf_basis);

// Indices of a maximal linearly independent subset of the rows, greedy in
// row order (exact rational elimination).  The selected rows span the same
// row space — and hence have the same kernel — as the input.
std::vector<std::size_t> independent_rows(const RatMat& m);

}  // namespace pgst
