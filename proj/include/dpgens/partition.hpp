#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpgens {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Weakly decreasing positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "5,4^2,3" style text; whitespace is ignored.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based, zero beyond the length.
    int operator[](int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    std::string str() const;          // "4,4,2,1"
    std::string compact_str() const;  // "4^2,2,1"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition conjugate(const Partition& lambda);

// delta[k-1] = δ_k for k = 1..n.
std::vector<int> delta(const Partition& lambda);

// ν ⊆ μ as Young diagrams.
bool contains(const Partition& nu, const Partition& mu);

// Partitions of b with at most max_length parts, in reverse lexicographic
// order: (b), (b-1,1), ... The empty partition is the only partition of 0.
std::vector<Partition> partitions_of(int b, int max_length);
void for_each_partition(int b, int max_length, const std::function<void(const Partition&)>& f);

// Cells are (row, col) with row 0 the bottom row and col 0 the leftmost column.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Filling {
public:
    Filling() = default;
    Filling(Partition shape, std::vector<std::vector<int>> columns);

    // Row lengths from the bottom row upward.
    const Partition& shape() const { return shape_; }
    int columns() const { return static_cast<int>(cols_.size()); }
    int height(int col) const { return static_cast<int>(cols_.at(col).size()); }
    int at(int row, int col) const { return cols_.at(col).at(row); }
    int at(Cell c) const { return at(c.row, c.col); }
    int bottom(int col) const { return cols_.at(col).front(); }
    int top(int col) const { return cols_.at(col).back(); }
    // Entries of a column, listed from the top cell down to the bottom cell.
    std::vector<int> column_top_down(int col) const;

    std::map<Cell, int> entries() const;

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> cols_;  // cols_[c][row], row 0 = bottom
};

Filling regular_filling(const Partition& lambda);
Filling antidiagonal_filling(const Partition& lambda);

// Keep only the rightmost occurrence of every value and let the surviving
// cells of each column drop down.
Filling rightmost_deletion(const Filling& af);

struct TopCellData {
    std::vector<int> b;  // b[k-1] = b_k for k = 1..t
    int t = 0;
    int s = 0;
    std::optional<int> b_s;

    // Labeled columns in order: 1..t, then s when s > t.
    std::vector<std::pair<int, int>> labeled() const;
};

TopCellData top_cells(const Partition& lambda);

class WeymanDiagram {
public:
    WeymanDiagram() = default;
    WeymanDiagram(int n, std::vector<std::pair<int, int>> column_ranges);

    int n() const { return n_; }
    int columns() const { return static_cast<int>(ranges_.size()); }
    // X's of column i occupy p = top(i) .. bottom(i).
    int top(int i) const { return ranges_.at(i).first; }
    int bottom(int i) const { return ranges_.at(i).second; }
    bool has(int i, int p) const {
        return i >= 0 && i < columns() && p >= top(i) && p <= bottom(i);
    }
    std::vector<std::pair<int, int>> cells() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> ranges_;
};

WeymanDiagram weyman_diagram(const Partition& lambda);

// Labeled top cells (i, b_i) that pass the segment test.
std::vector<std::pair<int, int>> conjectured_cells(const Partition& lambda);
bool passes_segment_test(const WeymanDiagram& w, int i, int p);

std::string render_ascii(const Filling& f);
std::string render_ascii(const WeymanDiagram& w, const std::vector<std::pair<int, int>>& marked);

}  // namespace dpgens
