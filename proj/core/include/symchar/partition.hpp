#pragma once

#include <symchar/arith.hpp>

#include <functional>
#include <string>
#include <vector>

namespace symchar {

// A box of a Young diagram. Rows and columns are 1-indexed; row 1 is the
// longest row. The content (column - row) is the z-coordinate along the
// diagonal.
struct Box {
    int row = 0;
    int column = 0;

    int content() const { return column - row; }
    friend bool operator==(const Box&, const Box&) = default;
};

// Concave (addable) and convex (removable) corner contents of a diagram.
// They strictly interlace: x_1 < y_1 < x_2 < ... < y_{d-1} < x_d.
struct CornerCoordinates {
    std::vector<int> minima;  // contents of addable boxes, increasing
    std::vector<int> maxima;  // contents of removable boxes, increasing
};

// A Young diagram: weakly decreasing positive row lengths. The empty
// diagram is a valid value. Immutable after construction.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);
    Partition(std::initializer_list<int> rows)
        : Partition(std::vector<int>(rows)) {}

    static Partition parse(const std::string& text);
    // (k, k-1, ..., 1); the smallest diagram admitting every k-edge map.
    static Partition staircase(int k);

    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const {  // 1-indexed, 0 beyond the last row
        return (i >= 1 && i <= static_cast<int>(rows_.size())) ? rows_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(rows_.size()); }
    long size() const { return n_; }
    bool empty() const { return rows_.empty(); }

    bool contains(const Box& b) const {
        return b.row >= 1 && b.column >= 1 && b.column <= row(b.row);
    }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> rows_;
    long n_ = 0;
};

// Each box replaced by an s x s grid. Rejects s <= 0.
Partition dilate(const Partition& lambda, int s);

// Transpose diagram; an involution.
Partition conjugate(const Partition& lambda);

// One content value (column - row) per box, row-major order.
std::vector<int> contents(const Partition& lambda);

CornerCoordinates corner_coordinates(const Partition& lambda);

// Removable corner boxes, top row first.
std::vector<Box> removable_corners(const Partition& lambda);

// Hook length of the box at (row, column), both 1-indexed.
int hook_length(const Partition& lambda, int row, int column);

// All partitions of n in descending-lexicographic order; p(0) = { () }.
std::vector<Partition> partitions_of(int n);

// All partitions of every size 0..max_size, smaller sizes first.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace symchar
