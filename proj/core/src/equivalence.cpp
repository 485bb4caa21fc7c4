#include "frcodes/equivalence.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <numeric>

#include "frcodes/errors.hpp"

namespace fr {

Fingerprint invariant_fingerprint(const FrCode& code) {
    Fingerprint fp;
    fp.params = code.params;
    fp.pair_profile = intersection_profile(code);
    // Packet co-occurrence counts are the node-pair intersections of the
    // transposed incidence matrix.
    fp.column_profile = intersection_profile(transpose_dual(code));
    return fp;
}

namespace {

// Branch-and-bound search for the lexicographically smallest row/column
// relabeling of a 0/1 matrix, rows concatenated row-major. Rows are chosen
// depth by depth; columns follow the unique refinement order (zeros before
// ones inside every block), which is optimal for any fixed row order.
class CanonicalSearch {
  public:
    CanonicalSearch(const IncidenceMatrix& m, long long budget)
        : n_(m.rows()), cols_(m.cols()), budget_(budget) {
        rows_.resize(static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r) {
            rows_[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols_));
            for (int c = 0; c < cols_; ++c)
                rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    m.get(r, c) ? 1 : 0;
        }
    }

    IncidenceMatrix run() {
        best_.clear();
        current_.assign(static_cast<std::size_t>(n_), {});
        used_.assign(static_cast<std::size_t>(n_), false);
        nodes_ = 0;

        std::vector<std::vector<int>> blocks;
        if (cols_ > 0) {
            blocks.emplace_back(static_cast<std::size_t>(cols_));
            std::iota(blocks.back().begin(), blocks.back().end(), 0);
        }
        descend(0, blocks, /*prefix_equals_best=*/true);

        IncidenceMatrix out(n_, cols_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (best_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
                    out.set(r, c, true);
        return out;
    }

  private:
    using Row = std::vector<std::uint8_t>;

    // Row content at this depth: within every block, zeros come first.
    Row emit(const Row& row, const std::vector<std::vector<int>>& blocks) const {
        Row out;
        out.reserve(static_cast<std::size_t>(cols_));
        for (const auto& block : blocks) {
            std::size_t ones = 0;
            for (int c : block) ones += row[static_cast<std::size_t>(c)];
            for (std::size_t i = 0; i < block.size() - ones; ++i) out.push_back(0);
            for (std::size_t i = 0; i < ones; ++i) out.push_back(1);
        }
        return out;
    }

    std::vector<std::vector<int>> refine(const Row& row,
                                         const std::vector<std::vector<int>>& blocks) const {
        std::vector<std::vector<int>> out;
        out.reserve(blocks.size());
        for (const auto& block : blocks) {
            std::vector<int> zeros, ones;
            for (int c : block)
                (row[static_cast<std::size_t>(c)] ? ones : zeros).push_back(c);
            if (!zeros.empty()) out.push_back(std::move(zeros));
            if (!ones.empty()) out.push_back(std::move(ones));
        }
        return out;
    }

    std::string best_text() const {
        std::string text;
        for (const auto& row : best_) {
            for (auto bit : row) text.push_back(bit ? '1' : '0');
            text.push_back('\n');
        }
        return text;
    }

    // `prefix_equals_best` is true when the rows chosen so far match the
    // incumbent best row-for-row; false means the current prefix is already
    // strictly smaller, so every leaf below replaces the incumbent. Returns
    // true when the incumbent was replaced somewhere in this subtree, which
    // lets callers resume comparing against it.
    bool descend(int depth, const std::vector<std::vector<int>>& blocks,
                 bool prefix_equals_best) {
        if (++nodes_ > budget_) throw SearchBudgetError(best_text());

        if (depth == n_) {
            if (!prefix_equals_best || best_.empty()) {
                best_ = current_;
                return true;
            }
            return false;
        }

        struct Candidate {
            Row emitted;
            int row;
        };
        std::vector<Candidate> candidates;
        candidates.reserve(static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r) {
            if (used_[static_cast<std::size_t>(r)]) continue;
            // Identical raw rows are interchangeable; keep the first.
            bool duplicate = false;
            for (const auto& c : candidates)
                if (rows_[static_cast<std::size_t>(c.row)] == rows_[static_cast<std::size_t>(r)]) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            candidates.push_back({emit(rows_[static_cast<std::size_t>(r)], blocks), r});
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                             return a.emitted < b.emitted;
                         });

        bool replaced_any = false;
        bool equal_here = prefix_equals_best;
        for (const auto& c : candidates) {
            bool child_equal;
            if (equal_here && !best_.empty()) {
                const Row& reference = best_[static_cast<std::size_t>(depth)];
                // Candidates are ascending, and a replacement only shrinks
                // the reference, so everything after the first overshoot is
                // prunable too.
                if (c.emitted > reference) break;
                child_equal = c.emitted == reference;
            } else {
                child_equal = false;
            }

            used_[static_cast<std::size_t>(c.row)] = true;
            current_[static_cast<std::size_t>(depth)] = c.emitted;
            const bool replaced =
                descend(depth + 1, refine(rows_[static_cast<std::size_t>(c.row)], blocks),
                        child_equal);
            used_[static_cast<std::size_t>(c.row)] = false;

            if (replaced) {
                replaced_any = true;
                // The new incumbent starts with the current prefix.
                equal_here = true;
            }
        }
        return replaced_any;
    }

    int n_;
    int cols_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<Row> rows_;
    std::vector<Row> best_;
    std::vector<Row> current_;
    std::vector<bool> used_;
};

}  // namespace

IncidenceMatrix canonical_form(const FrCode& code, const CanonicalOptions& opts) {
    const IncidenceMatrix m = code_to_matrix(code);
    CanonicalSearch search(m, opts.node_budget);
    return search.run();
}

std::string matrix_digest(const IncidenceMatrix& m) {
    const std::string text = m.to_text();
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int hash_len = 0;
    if (EVP_Digest(text.data(), text.size(), hash, &hash_len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * hash_len);
    for (unsigned int i = 0; i < hash_len; ++i) {
        out.push_back(hex[hash[i] >> 4]);
        out.push_back(hex[hash[i] & 0xf]);
    }
    return out;
}

std::string canonical_digest(const FrCode& code, const CanonicalOptions& opts) {
    return matrix_digest(canonical_form(code, opts));
}

bool are_equivalent(const FrCode& a, const FrCode& b, const CanonicalOptions& opts) {
    if (a.params != b.params) return false;
    if (invariant_fingerprint(a) != invariant_fingerprint(b)) return false;
    return canonical_form(a, opts) == canonical_form(b, opts);
}

namespace {

double factorial(int k) {
    double out = 1.0;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

}  // namespace

bool brute_force_equivalent(const FrCode& a, const FrCode& b,
                            const BruteForceOptions& opts) {
    if (a.params != b.params) return false;
    require_valid(a);
    require_valid(b);

    const int n = a.params.n;
    const int theta = a.params.theta;
    if (factorial(n) * factorial(theta) > opts.size_bound)
        throw SizeTooLargeError("n! * theta! exceeds the brute-force bound for n=" +
                                std::to_string(n) + " theta=" + std::to_string(theta));

    const IncidenceMatrix ma = code_to_matrix(a);
    const IncidenceMatrix mb = code_to_matrix(b);

    // Columns of b as a sorted multiset of top-down bit strings.
    std::vector<std::string> b_columns(static_cast<std::size_t>(theta));
    for (int c = 0; c < theta; ++c) {
        std::string& col = b_columns[static_cast<std::size_t>(c)];
        col.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = mb.get(r, c) ? '1' : '0';
    }
    std::sort(b_columns.begin(), b_columns.end());

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> a_columns(static_cast<std::size_t>(theta));
    do {
        for (int c = 0; c < theta; ++c) {
            std::string& col = a_columns[static_cast<std::size_t>(c)];
            col.resize(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r)
                col[static_cast<std::size_t>(r)] =
                    ma.get(perm[static_cast<std::size_t>(r)], c) ? '1' : '0';
        }
        std::sort(a_columns.begin(), a_columns.end());
        if (a_columns == b_columns) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace fr
