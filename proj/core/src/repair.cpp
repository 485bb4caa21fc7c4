#include "frcodes/repair.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "frcodes/errors.hpp"

namespace fr {

namespace {

// Kuhn's augmenting-path matching from packets to helper nodes. Packets and
// adjacency lists are scanned in ascending order, so the matching is
// deterministic.
class HelperMatcher {
  public:
    HelperMatcher(int packet_count, int node_count)
        : packet_match_(static_cast<std::size_t>(packet_count), -1),
          node_match_(static_cast<std::size_t>(node_count), -1),
          holders_(static_cast<std::size_t>(packet_count)) {}

    void add_holder(int packet_idx, int node_idx) {
        holders_[static_cast<std::size_t>(packet_idx)].push_back(node_idx);
    }

    void solve() {
        for (int p = 0; p < static_cast<int>(holders_.size()); ++p) {
            std::vector<bool> visited(node_match_.size(), false);
            try_augment(p, visited);
        }
    }

    int matched_node(int packet_idx) const {
        return packet_match_[static_cast<std::size_t>(packet_idx)];
    }

    const std::vector<int>& holders(int packet_idx) const {
        return holders_[static_cast<std::size_t>(packet_idx)];
    }

  private:
    bool try_augment(int p, std::vector<bool>& visited) {
        for (int node : holders_[static_cast<std::size_t>(p)]) {
            if (visited[static_cast<std::size_t>(node)]) continue;
            visited[static_cast<std::size_t>(node)] = true;
            if (node_match_[static_cast<std::size_t>(node)] < 0 ||
                try_augment(node_match_[static_cast<std::size_t>(node)], visited)) {
                node_match_[static_cast<std::size_t>(node)] = p;
                packet_match_[static_cast<std::size_t>(p)] = node;
                return true;
            }
        }
        return false;
    }

    std::vector<int> packet_match_;
    std::vector<int> node_match_;
    std::vector<std::vector<int>> holders_;
};

}  // namespace

RepairPlan repair_plan(const FrCode& code, int failed_node) {
    require_valid(code);
    const int n = code.params.n;
    if (failed_node < 1 || failed_node > n)
        throw InvalidArgumentError("failed node " + std::to_string(failed_node) +
                                   " out of range 1.." + std::to_string(n));

    const auto& lost = code.nodes[static_cast<std::size_t>(failed_node - 1)];
    HelperMatcher matcher(static_cast<int>(lost.size()), n);
    for (int p = 0; p < static_cast<int>(lost.size()); ++p) {
        const int packet = lost[static_cast<std::size_t>(p)];
        bool any = false;
        for (int node = 0; node < n; ++node) {
            if (node == failed_node - 1) continue;
            const auto& held = code.nodes[static_cast<std::size_t>(node)];
            if (std::binary_search(held.begin(), held.end(), packet)) {
                matcher.add_holder(p, node);
                any = true;
            }
        }
        if (!any)
            throw NoReplicaError("packet " + std::to_string(packet) +
                                 " has no surviving replica");
    }
    matcher.solve();

    RepairPlan plan;
    plan.failed_node = failed_node;
    plan.assignments.reserve(lost.size());
    for (int p = 0; p < static_cast<int>(lost.size()); ++p) {
        int node = matcher.matched_node(p);
        if (node < 0) node = matcher.holders(p).front();  // lowest surviving holder
        plan.assignments.emplace_back(lost[static_cast<std::size_t>(p)], node + 1);
    }
    return plan;
}

RepairReport simulate_failure(const FrCode& code, int failed_node, int beta) {
    if (beta < 1) throw InvalidArgumentError("beta must be >= 1");
    const RepairPlan plan = repair_plan(code, failed_node);
    std::set<int> helpers;
    for (const auto& [packet, helper] : plan.assignments) helpers.insert(helper);
    RepairReport report;
    report.helpers_contacted = static_cast<int>(helpers.size());
    report.packets_downloaded = static_cast<int>(plan.assignments.size());
    report.bandwidth = static_cast<long long>(report.packets_downloaded) * beta;
    return report;
}

long long supported_file_size(const FrCode& code, int k, const SubsetBudget& budget) {
    require_valid(code);
    const int n = code.params.n;
    if (k < 1 || k > n)
        throw InvalidArgumentError("k must be in 1..n");

    // C(n, k) against the enumeration budget.
    double subsets = 1.0;
    for (int i = 1; i <= k; ++i) subsets = subsets * (n - k + i) / i;
    if (subsets > static_cast<double>(budget.max_subsets))
        throw BudgetExceededError("C(n,k) exceeds the subset enumeration budget");

    // Packet sets as fixed-width bitmasks.
    const int words = (code.params.theta + 63) / 64;
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) *
                                     static_cast<std::size_t>(words));
    for (int i = 0; i < n; ++i)
        for (int packet : code.nodes[static_cast<std::size_t>(i)]) {
            const int bit = packet - 1;
            masks[static_cast<std::size_t>(i) * words + bit / 64] |= 1ULL << (bit % 64);
        }

    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(words));

    long long best = code.params.theta + 1;
    while (true) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int i : pick)
            for (int w = 0; w < words; ++w)
                acc[static_cast<std::size_t>(w)] |=
                    masks[static_cast<std::size_t>(i) * words + w];
        long long covered = 0;
        for (std::uint64_t word : acc) covered += std::popcount(word);
        best = std::min(best, covered);

        // Next k-combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
}

bool mds_check(const FrCode& code, int k, long long file_size,
               const SubsetBudget& budget) {
    if (file_size < 1) throw InvalidArgumentError("file size must be >= 1");
    return file_size <= supported_file_size(code, k, budget);
}

}  // namespace fr
