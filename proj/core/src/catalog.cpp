#include "frcodes/catalog.hpp"

#include <algorithm>
#include <map>

#include "frcodes/construct.hpp"
#include "frcodes/errors.hpp"

namespace fr {

std::vector<FrParams> admissible_params(int n, const FilterPolicy& policy) {
    if (n < 3) throw InvalidArgumentError("enumeration requires n >= 3");
    std::vector<FrParams> out;
    for (int d = 2; d <= n - 1; ++d) {
        for (int rho = 2; rho <= n - 1; ++rho) {
            const long long total = static_cast<long long>(n) * d;
            if (total % rho != 0) continue;
            const int theta = static_cast<int>(total / rho);
            if (d > theta) continue;
            if (policy.require_rho_lt_theta && rho >= theta) continue;
            out.push_back(FrParams{n, theta, d, rho});
        }
    }
    return out;  // already ordered by (d, rho)
}

std::vector<CatalogEntry> generate_catalog(int n, const FilterPolicy& policy) {
    std::vector<CatalogEntry> entries;
    for (const FrParams& params : admissible_params(n, policy)) {
        CatalogEntry entry;
        entry.params = params;
        try {
            const IncidenceMatrix m = fill_incidence(params);
            const ValidationReport report = validate(m, params);
            if (report.valid()) {
                entry.code = matrix_to_code(m, params, entry.provenance);
                entry.valid = true;
            } else {
                entry.error = describe(report);
            }
        } catch (const ConstructionError& e) {
            entry.error = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CountRow> count_table(int n_from, int n_to, const FilterPolicy& policy) {
    if (n_from < 3 || n_from > n_to)
        throw InvalidArgumentError("count_table requires 3 <= n_from <= n_to");
    std::vector<CountRow> rows;
    rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (int n = n_from; n <= n_to; ++n) {
        const auto entries = generate_catalog(n, policy);
        CountRow row;
        row.n = n;
        row.admissible = static_cast<int>(entries.size());
        row.constructed = static_cast<int>(
            std::count_if(entries.begin(), entries.end(),
                          [](const CatalogEntry& e) { return e.valid; }));
        rows.push_back(row);
    }
    return rows;
}

std::vector<EquivalenceClass> dedupe_catalog(std::vector<CatalogEntry>& entries,
                                             const CanonicalOptions& opts) {
    for (const CatalogEntry& entry : entries)
        if (!entry.valid || !entry.code)
            throw InvalidArgumentError("dedupe_catalog requires all entries valid");

    std::vector<EquivalenceClass> classes;
    std::map<std::string, std::size_t> by_digest;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CatalogEntry& entry = entries[i];
        const IncidenceMatrix canonical = canonical_form(*entry.code, opts);
        entry.canonical_digest = matrix_digest(canonical);
        auto [it, inserted] = by_digest.try_emplace(entry.canonical_digest, classes.size());
        if (inserted) {
            EquivalenceClass cls;
            cls.params = entry.params;
            cls.digest = entry.canonical_digest;
            cls.representative = canonical;
            classes.push_back(std::move(cls));
        }
        classes[it->second].member_indices.push_back(static_cast<int>(i));
    }
    return classes;
}

}  // namespace fr
