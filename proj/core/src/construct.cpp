#include "frcodes/construct.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "frcodes/errors.hpp"

namespace fr {

IncidenceMatrix fill_incidence(const FrParams& params) {
    if (!params_consistent(params))
        throw InvalidArgumentError("inconsistent parameters: n=" + std::to_string(params.n) +
                                   " theta=" + std::to_string(params.theta) +
                                   " d=" + std::to_string(params.d) +
                                   " rho=" + std::to_string(params.rho));

    const int n = params.n;
    const int theta = params.theta;
    const int d = params.d;
    const int rho = params.rho;

    IncidenceMatrix m(n, theta);
    std::vector<int> col_weight(static_cast<std::size_t>(theta), 0);

    auto place = [&](int r, int c, int& row_weight) {
        m.set(r, c, true);
        ++col_weight[static_cast<std::size_t>(c)];
        ++row_weight;
    };

    // Row 1: leftmost d columns.
    {
        int w = 0;
        for (int c = 0; c < d; ++c) place(0, c, w);
    }

    const long long iteration_bound =
        static_cast<long long>(n) * theta * d + n + 1;
    long long iterations = 0;

    for (int r = 1; r < n; ++r) {
        int row_weight = 0;
        while (row_weight < d) {
            if (++iterations > iteration_bound)
                throw IterationBoundError("incidence fill exceeded " +
                                          std::to_string(iteration_bound) +
                                          " iterations at row " + std::to_string(r + 1));

            // First open column: weight below rho and cell still 0.
            int j = -1;
            for (int c = 0; c < theta; ++c) {
                if (col_weight[static_cast<std::size_t>(c)] < rho && !m.get(r, c)) {
                    j = c;
                    break;
                }
            }
            if (j < 0) throw ConstructionStalledError(r + 1, 2, m.to_text());
            place(r, j, row_weight);
            if (row_weight == d) break;
            if (j == theta - 1) continue;  // no columns to the right

            const bool all_equal = [&] {
                for (int c = j + 2; c < theta; ++c)
                    if (col_weight[static_cast<std::size_t>(c)] !=
                        col_weight[static_cast<std::size_t>(j + 1)])
                        return false;
                return true;
            }();

            if (!all_equal) {
                // Bulk pass: columns right of j by (snapshot weight, index),
                // stopping at weight d or immediately after the last column.
                std::vector<std::pair<int, int>> order;
                order.reserve(static_cast<std::size_t>(theta - j - 1));
                for (int c = j + 1; c < theta; ++c)
                    order.emplace_back(col_weight[static_cast<std::size_t>(c)], c);
                std::sort(order.begin(), order.end());
                for (const auto& [snapshot, c] : order) {
                    if (col_weight[static_cast<std::size_t>(c)] >= rho || m.get(r, c))
                        continue;
                    place(r, c, row_weight);
                    if (row_weight == d || c == theta - 1) break;
                }
                continue;
            }

            // Right-of-j weights all equal: copy-avoidance against the first
            // earlier row that also uses column j.
            int ref = -1;
            for (int rr = 0; rr < r; ++rr) {
                if (m.get(rr, j)) {
                    ref = rr;
                    break;
                }
            }
            bool placed = false;
            if (ref >= 0) {
                for (int c = j + 1; c < theta; ++c) {
                    if (!m.get(ref, c) && !m.get(r, c) &&
                        col_weight[static_cast<std::size_t>(c)] < rho) {
                        place(r, c, row_weight);
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) {
                // Single minimum-(weight, index) placement right of j.
                int best = -1;
                for (int c = j + 1; c < theta; ++c) {
                    if (col_weight[static_cast<std::size_t>(c)] >= rho || m.get(r, c))
                        continue;
                    if (best < 0 || col_weight[static_cast<std::size_t>(c)] <
                                        col_weight[static_cast<std::size_t>(best)])
                        best = c;
                }
                if (best >= 0) place(r, best, row_weight);
                // Otherwise loop back: the next first-open-column pick moves
                // past j or stalls.
            }
        }
    }
    return m;
}

IncidenceMatrix adjacency_fill_transpose(int n, int d) {
    if (d < 1 || d >= n)
        throw InvalidArgumentError("adjacency fill requires 1 <= d < n, got n=" +
                                   std::to_string(n) + " d=" + std::to_string(d));

    IncidenceMatrix a(n, n);
    for (int c = 1; c <= d; ++c) a.set(0, c, true);
    for (int r = 0; r < n; ++r) a.set(r, 0, a.get(0, r));

    for (int i = 1; i < n; ++i) {
        int w = a.row_weight(i);  // inherited from earlier column mirrors
        if (w > d)
            throw NotCompletableError(i + 1, "inherited row weight " + std::to_string(w) +
                                                 " exceeds d=" + std::to_string(d));
        for (int j = n - 1; j >= 0 && w < d; --j) {
            if (j == i || a.get(i, j)) continue;
            a.set(i, j, true);
            ++w;
        }
        if (w < d)
            throw NotCompletableError(i + 1, "right-to-left fill reached weight " +
                                                 std::to_string(w) + " < d=" +
                                                 std::to_string(d));
        for (int j = 0; j < n; ++j) a.set(j, i, a.get(i, j));
    }

    // Later column mirrors can disturb rows that were already complete.
    for (int i = 0; i < n; ++i) {
        const int w = a.row_weight(i);
        if (w != d)
            throw NotCompletableError(i + 1, "final row weight " + std::to_string(w) +
                                                 " != d=" + std::to_string(d));
    }
    return a;
}

IncidenceMatrix adjacency_fill_symmetric(int n, int d) {
    if (d < 1 || d >= n)
        throw InvalidArgumentError("adjacency fill requires 1 <= d < n, got n=" +
                                   std::to_string(n) + " d=" + std::to_string(d));

    IncidenceMatrix a(n, n);
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = n - 1; j >= 0; --j) {
            if (i == j || a.get(i, j)) continue;
            if (weight[static_cast<std::size_t>(i)] >= d ||
                weight[static_cast<std::size_t>(j)] >= d)
                continue;
            a.set(i, j, true);
            a.set(j, i, true);
            ++weight[static_cast<std::size_t>(i)];
            ++weight[static_cast<std::size_t>(j)];
        }
    }
    for (int i = 0; i < n; ++i) {
        if (weight[static_cast<std::size_t>(i)] != d)
            throw NotCompletableError(i + 1, "final row weight " +
                                                 std::to_string(weight[static_cast<std::size_t>(i)]) +
                                                 " != d=" + std::to_string(d));
    }
    return a;
}

FrCode adjacency_as_incidence(const IncidenceMatrix& adjacency, int d,
                              std::string provenance) {
    const int n = adjacency.rows();
    if (adjacency.cols() != n)
        throw InvalidArgumentError("adjacency matrix must be square");
    if (!adjacency.is_symmetric())
        throw InvalidArgumentError("adjacency matrix must be symmetric");
    if (!adjacency.has_zero_diagonal())
        throw InvalidArgumentError("adjacency matrix must have a zero diagonal");
    for (int r = 0; r < n; ++r) {
        const int w = adjacency.row_weight(r);
        if (w != d)
            throw InvalidArgumentError("adjacency row " + std::to_string(r + 1) +
                                       " has weight " + std::to_string(w) +
                                       ", expected d=" + std::to_string(d));
    }
    return matrix_to_code(adjacency, FrParams{n, n, d, d}, std::move(provenance));
}

}  // namespace fr
