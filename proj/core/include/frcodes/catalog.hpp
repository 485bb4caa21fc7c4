#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frcodes/code.hpp"
#include "frcodes/equivalence.hpp"
#include "frcodes/params.hpp"

namespace fr {

/// Admissibility filter for the per-n parameter sweep. The structural
/// conditions (2 <= d,rho <= n-1, integer theta, d <= theta) are always on;
/// the rho < theta cut is the recorded policy knob.
struct FilterPolicy {
    bool require_rho_lt_theta = true;

    friend bool operator==(const FilterPolicy&, const FilterPolicy&) = default;
};

/// All admissible (n, theta, d, rho) for this n, ordered by (d, rho).
std::vector<FrParams> admissible_params(int n, const FilterPolicy& policy = {});

/// One constructed code per admissible tuple. `code` is set only when the
/// fill succeeded and validated; failures keep the tuple with an error
/// message instead of aborting the batch.
struct CatalogEntry {
    FrParams params;
    std::optional<FrCode> code;
    std::string provenance = "algorithm1";
    bool valid = false;
    std::string error;             // set when !valid
    std::string canonical_digest;  // filled on demand, empty otherwise
};

std::vector<CatalogEntry> generate_catalog(int n, const FilterPolicy& policy = {});

struct CountRow {
    int n = 0;
    int admissible = 0;
    int constructed = 0;
};

/// Admissible and successfully constructed counts for n_from..n_to under
/// the policy.
std::vector<CountRow> count_table(int n_from, int n_to, const FilterPolicy& policy = {});

/// One equivalence class of valid catalog entries, grouped by canonical
/// digest. The representative is the canonical form shared by the class.
struct EquivalenceClass {
    FrParams params;
    std::string digest;
    IncidenceMatrix representative;
    std::vector<int> member_indices;  // positions in the input entry list
    int size() const { return static_cast<int>(member_indices.size()); }
};

/// Groups valid entries by canonical digest, in first-seen order. All
/// entries must be valid. Fills in each entry's canonical_digest.
std::vector<EquivalenceClass> dedupe_catalog(std::vector<CatalogEntry>& entries,
                                             const CanonicalOptions& opts = {});

}  // namespace fr
