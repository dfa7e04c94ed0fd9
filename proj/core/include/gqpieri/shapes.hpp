#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gqpieri/errors.hpp"

namespace gqpieri {

// A strict partition: strictly decreasing sequence of positive integers.
// The empty partition is allowed and prints as "-".
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts);

    static StrictPartition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length read as 0.
    int part(std::size_t i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    // |lambda|, the number of cells of the shifted diagram
    int weight() const;

    bool contains(const StrictPartition& inner) const;

    std::string str() const;

    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Cell of a shifted diagram, 1-based. Row i occupies columns i .. i+lambda_i-1,
// so every cell satisfies row <= col; the cell is diagonal iff row == col.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Sorted, duplicate-free list of cells.
using CellSet = std::vector<Cell>;

CellSet shifted_diagram(const StrictPartition& lambda);

// Skew shifted diagram mu/lambda. Throws NotContained unless lambda <= mu.
class SkewShape {
public:
    SkewShape(StrictPartition outer, StrictPartition inner);

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }
    const CellSet& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }

private:
    StrictPartition outer_;
    StrictPartition inner_;
    CellSet cells_;
};

SkewShape skew(const StrictPartition& mu, const StrictPartition& lambda);

// A rim contains no 2x2 square of cells. The empty set is a rim.
bool is_rim(const CellSet& cells);
bool is_rim(const SkewShape& theta);

enum class ShapeKind { Row, Column, Neither };

struct Classification {
    ShapeKind kind = ShapeKind::Neither;
    bool touches_diagonal = false;
};

// Row iff all cells share a row index, column iff all share a column index.
// A single cell is both; it is reported as Row. Throws EmptyShape.
Classification classify(const CellSet& cells);
Classification classify(const SkewShape& theta);

struct ArmDecomposition {
    CellSet arm;
    CellSet remainder;
    int size = 0;
    ShapeKind kind = ShapeKind::Row;
    bool connected = false;  // some arm cell shares an edge with the remainder
};

// North-east arm of a rim: let B be the cell with maximal column (minimal row
// on ties) and S_k the k x k square of cells whose upper-right corner is B.
// The arm is theta intersect S_k for the largest k at which that intersection
// is still a single row or a single column. Throws EmptyShape / NotARim.
ArmDecomposition northeast_arm(const CellSet& cells);
ArmDecomposition northeast_arm(const SkewShape& theta);

// Shifted trapezoid tau(a,b) = (b+a-1, b+a-3, ..., b-a+1); requires a <= b.
StrictPartition trapezoid(int a, int b);

// All strict partitions with largest part <= max_part and at most max_len
// parts, the empty partition included.
std::vector<StrictPartition> strict_partitions_in_box(int max_part, int max_len);

// All strict partitions of weight n.
std::vector<StrictPartition> strict_partitions_of_weight(int n);

}  // namespace gqpieri
