#include "frcodes/matrix.hpp"

#include <numeric>
#include <sstream>

#include "frcodes/errors.hpp"

namespace fr {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw InvalidArgumentError("matrix dimensions must be non-negative");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

std::size_t BinaryMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InvalidArgumentError("matrix index (" + std::to_string(r) + "," +
                                   std::to_string(c) + ") out of range for " +
                                   std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

int BinaryMatrix::row_weight(int r) const {
    int w = 0;
    for (int c = 0; c < cols_; ++c) w += get(r, c) ? 1 : 0;
    return w;
}

int BinaryMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
    return w;
}

long long BinaryMatrix::total_weight() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

bool BinaryMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

bool BinaryMatrix::has_zero_diagonal() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        if (get(r, r)) return false;
    return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (static_cast<std::size_t>(cols_) + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix BinaryMatrix::from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    if (lines.empty()) return BinaryMatrix(0, 0);

    const std::size_t width = lines.front().size();
    BinaryMatrix m(static_cast<int>(lines.size()), static_cast<int>(width));
    for (int r = 0; r < m.rows(); ++r) {
        if (lines[r].size() != width)
            throw InvalidArgumentError("matrix text line " + std::to_string(r + 1) +
                                       " has inconsistent length");
        for (int c = 0; c < m.cols(); ++c) {
            const char ch = lines[r][static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1')
                throw InvalidArgumentError("matrix text contains character '" +
                                           std::string(1, ch) + "'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

}  // namespace fr
