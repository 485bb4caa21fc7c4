#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fr {

/// Dense 0/1 matrix, row-major storage. Rows and columns are 0-based in
/// this API; 1-based packet labels only appear in FrCode (column c holds
/// packet c+1).
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return cells_[index(r, c)] != 0; }
    void set(int r, int c, bool value) { cells_[index(r, c)] = value ? 1 : 0; }

    int row_weight(int r) const;
    int col_weight(int c) const;
    long long total_weight() const;

    bool is_symmetric() const;
    bool has_zero_diagonal() const;

    BinaryMatrix transposed() const;

    /// One '0'/'1' character per cell, one line per row, each line
    /// newline-terminated.
    std::string to_text() const;
    /// Parses the to_text format. Throws InvalidArgumentError on ragged
    /// lines or characters other than '0'/'1'.
    static BinaryMatrix from_text(const std::string& text);

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Node-packet incidence view: rows are nodes, columns are packets.
using IncidenceMatrix = BinaryMatrix;

}  // namespace fr
