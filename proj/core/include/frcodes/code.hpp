#pragma once

#include <string>
#include <vector>

#include "frcodes/matrix.hpp"
#include "frcodes/params.hpp"

namespace fr {

/// Set-system view of an FR code: node i stores the packets listed in
/// nodes[i]. Packet labels are 1-based and each node set is kept sorted
/// ascending.
struct FrCode {
    FrParams params;
    std::vector<std::vector<int>> nodes;
    std::string provenance;

    friend bool operator==(const FrCode&, const FrCode&) = default;
};

enum class ViolationKind {
    RowWeight,
    ColumnWeight,
    ParameterArithmetic,
    IndexRange,
};

struct Violation {
    ViolationKind kind;
    int location;  // 1-based row/column/node index, 0 when global
    long long observed;
    long long expected;
};

/// Collects every violation instead of failing fast, so diagnostics from
/// batch enumeration stay useful.
struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

std::string describe(const Violation& v);
std::string describe(const ValidationReport& report);

/// Checks parameter arithmetic plus every row weight against d and every
/// column weight against rho. Throws InvalidArgumentError when the matrix
/// dimensions disagree with (params.n, params.theta); weight violations are
/// reported, not thrown.
ValidationReport validate(const IncidenceMatrix& m, const FrParams& p);

/// Set-system analogue: node-set sizes, packet replication counts, packet
/// label ranges and parameter arithmetic.
ValidationReport validate(const FrCode& code);

/// Conversions between the two views. matrix_to_code rejects matrices that
/// do not validate; the round trip is the identity on validated matrices.
FrCode matrix_to_code(const IncidenceMatrix& m, const FrParams& p,
                      std::string provenance = "");
IncidenceMatrix code_to_matrix(const FrCode& code);

/// Swaps the node/packet roles: (n, theta, d, rho) -> (theta, n, rho, d).
/// Node i of the dual holds packet j iff node j of the original holds
/// packet i. Involution on valid codes.
FrCode transpose_dual(const FrCode& code);

/// |U_i ∩ U_j| over all node pairs i<j, sorted ascending. Invariant under
/// any relabeling of nodes and packets.
std::vector<int> intersection_profile(const FrCode& code);

/// Validates and throws InvalidArgumentError with the report text when the
/// code (or matrix) is not a well-formed FR code.
void require_valid(const FrCode& code);
void require_valid(const IncidenceMatrix& m, const FrParams& p);

}  // namespace fr
