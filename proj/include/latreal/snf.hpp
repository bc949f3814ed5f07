#pragma once

#include "latreal/matrix.hpp"

namespace latreal {

/// Smith decomposition left * m * right = diag, with unimodular transforms
/// and the diagonal in an ascending divisibility chain d1 | d2 | ...
struct SNFResult {
    IntMat left;
    IntMat diag;
    IntMat right;

    std::vector<BigInt> diagonal() const;
    int rank() const;
};

SNFResult smith_normal_form(const IntMat& m);

// Canonical Hermite basis (rows, echelon, positive pivots, entries above a
// pivot reduced into [0, pivot)) of the row span of m; zero rows dropped.
// Two matrices span the same row lattice iff their Hermite bases are equal.
IntMat hermite_basis(const IntMat& m);

// Does v lie in the row lattice spanned by the Hermite basis hnf?
bool hnf_member(const IntMat& hnf, std::vector<BigInt> v);

// Basis of the integer kernel {x : m x = 0}, one vector per row. The basis
// spans a saturated sublattice (primitive in Z^cols).
IntMat kernel_basis(const IntMat& m);

}  // namespace latreal
