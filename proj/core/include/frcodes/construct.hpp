#pragma once

#include "frcodes/code.hpp"
#include "frcodes/matrix.hpp"
#include "frcodes/params.hpp"

namespace fr {

/// Fills an n×theta incidence matrix with row weight d and column weight
/// rho by a deterministic left-to-right greedy sweep: each row starts at
/// the first open column, then either bulk-fills the remaining columns in
/// increasing order of current weight or, when those weights are all equal,
/// places a single 1 avoiding the columns of the earliest row that shares
/// the start column.
///
/// Deterministic: identical params always give the identical matrix.
/// Throws ConstructionStalledError when no legal placement exists and
/// IterationBoundError if the n*theta*d safety bound trips.
IncidenceMatrix fill_incidence(const FrParams& params);

/// Row-transpose adjacency fill: row 1 gets 1s in columns 2..d+1, then each
/// row inherits the mirrored cells of earlier rows, tops up right-to-left
/// until its weight is d, and is mirrored into its column. Result (when it
/// completes) is symmetric with zero diagonal and all line sums d.
/// Throws NotCompletableError naming the offending row otherwise.
IncidenceMatrix adjacency_fill_transpose(int n, int d);

/// Symmetric pair fill: sweeps i = 1..n, j = n..1 and sets a(i,j) and
/// a(j,i) whenever both row weights are still below d. Same output
/// contract as adjacency_fill_transpose.
IncidenceMatrix adjacency_fill_symmetric(int n, int d);

/// Reads a symmetric zero-diagonal adjacency matrix with row sums d as an
/// FR code with n nodes and n packets: node i holds packet j iff a(i,j)=1.
/// Replication equals d by symmetry. Rejects asymmetric or wrong-weight
/// input.
FrCode adjacency_as_incidence(const IncidenceMatrix& adjacency, int d,
                              std::string provenance = "adjacency");

}  // namespace fr
