#pragma once

#include <utility>
#include <vector>

#include "frcodes/code.hpp"

namespace fr {

/// Uncoded repair plan for one failed node: every lost packet is fetched
/// verbatim from a surviving holder.
struct RepairPlan {
    int failed_node = 0;  // 1-based
    std::vector<std::pair<int, int>> assignments;  // (packet, helper), packets ascending
};

struct RepairReport {
    int helpers_contacted = 0;
    int packets_downloaded = 0;
    long long bandwidth = 0;  // packets_downloaded * beta
};

/// Plans the repair of `failed_node`, maximizing the number of distinct
/// helpers via maximum bipartite matching (packets vs surviving holders),
/// then assigning any unmatched packet to its lowest-index holder.
/// Deterministic; throws NoReplicaError when a lost packet has no surviving
/// copy.
RepairPlan repair_plan(const FrCode& code, int failed_node);

/// Executes repair accounting: always downloads exactly d packets, one per
/// assignment, at beta packets of bandwidth each.
RepairReport simulate_failure(const FrCode& code, int failed_node, int beta = 1);

struct SubsetBudget {
    long long max_subsets = 10'000'000;
};

/// Supported file size M(k): the minimum number of distinct packets held by
/// any k nodes, computed by exhaustive subset enumeration. Throws
/// BudgetExceededError when C(n,k) exceeds the budget.
long long supported_file_size(const FrCode& code, int k, const SubsetBudget& budget = {});

/// True iff a file of `file_size` outer-coded packets can be recovered from
/// any k nodes, i.e. file_size <= M(k).
bool mds_check(const FrCode& code, int k, long long file_size,
               const SubsetBudget& budget = {});

}  // namespace fr
