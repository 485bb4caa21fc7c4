#pragma once

namespace fr {

/// Defining tuple of a fractional repetition code: n storage nodes, theta
/// packets, d packets per node (the repair degree) and replication factor
/// rho. Feasible tuples satisfy n*d == rho*theta with d <= theta, rho <= n.
struct FrParams {
    int n = 0;
    int theta = 0;
    int d = 0;
    int rho = 0;

    friend bool operator==(const FrParams&, const FrParams&) = default;
};

/// True iff all arguments are positive, n*d == rho*theta, d <= theta and
/// rho <= n. Total function: never throws.
bool params_consistent(int n, int d, int rho, int theta);
bool params_consistent(const FrParams& p);

/// Storage-system metadata carried alongside a code (recovery node count k,
/// per-node capacity alpha, per-helper download beta, file size). Not used
/// by any construction; kept for reporting.
struct DssParams {
    int k = 0;
    int alpha = 0;
    int beta = 1;
    int file_size = 0;
};

/// Checks the FR-backed minimum-bandwidth usage: beta == 1, alpha == d and
/// k < n.
bool dss_consistent(const DssParams& dss, const FrParams& code);

}  // namespace fr
