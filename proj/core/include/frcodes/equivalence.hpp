#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frcodes/code.hpp"
#include "frcodes/matrix.hpp"
#include "frcodes/params.hpp"

namespace fr {

/// Cheap permutation-invariant summary of a code. Equal fingerprints are
/// necessary, not sufficient, for equivalence.
struct Fingerprint {
    FrParams params;
    std::vector<int> pair_profile;    // node-pair intersection sizes, ascending
    std::vector<int> column_profile;  // packet-pair co-occurrence counts, ascending

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint invariant_fingerprint(const FrCode& code);

struct CanonicalOptions {
    /// Search nodes allowed before SearchBudgetError; the default is sized
    /// so every n <= 12, theta <= 30 code canonicalizes in seconds.
    long long node_budget = 10'000'000;
};

/// Lexicographically smallest incidence matrix (rows concatenated into one
/// bit string) over all row and column permutations, found by
/// branch-and-bound over row orders with greedy per-prefix column
/// refinement. Equal canonical forms decide equivalence exactly.
IncidenceMatrix canonical_form(const FrCode& code, const CanonicalOptions& opts = {});

/// Hex SHA-256 of the canonical matrix in text format; used as the catalog
/// deduplication key.
std::string canonical_digest(const FrCode& code, const CanonicalOptions& opts = {});
std::string matrix_digest(const IncidenceMatrix& m);

/// Parameter check, fingerprint pre-filter, then canonical-form comparison.
bool are_equivalent(const FrCode& a, const FrCode& b, const CanonicalOptions& opts = {});

struct BruteForceOptions {
    /// Upper bound on n! * theta!; the default admits every code with
    /// n, theta <= 6.
    double size_bound = 1e6;
};

/// Exhaustive oracle: tries every row permutation of `a` and matches column
/// multisets against `b`. Agrees with are_equivalent wherever it runs.
/// Throws SizeTooLargeError above the bound.
bool brute_force_equivalent(const FrCode& a, const FrCode& b,
                            const BruteForceOptions& opts = {});

}  // namespace fr
