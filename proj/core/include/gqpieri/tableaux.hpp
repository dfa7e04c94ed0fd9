#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gqpieri/errors.hpp"
#include "gqpieri/hecke.hpp"
#include "gqpieri/shapes.hpp"

namespace gqpieri {

// Filling of a shifted diagram with nonnegative integers (generator letters).
// Row i of the shape holds mu_i entries and is drawn indented i-1 cells.
class ShiftedTableau {
public:
    ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows);
    static ShiftedTableau from_rows(std::vector<std::vector<int>> rows);
    static ShiftedTableau parse(std::string_view text);  // "4,1,0,3;2,3"

    const StrictPartition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // 1-based row and position within the row
    int entry(int row, int pos) const {
        return rows_[static_cast<std::size_t>(row) - 1]
                    [static_cast<std::size_t>(pos) - 1];
    }

    std::string str() const;

    auto operator<=>(const ShiftedTableau&) const = default;

private:
    StrictPartition shape_;
    std::vector<std::vector<int>> rows_;
};

// rho(T): rows concatenated bottom to top, each row left to right.
HeckeWord reading_word(const ShiftedTableau& t);

struct Unimodality {
    bool unimodal = false;
    std::size_t valley = 0;  // 0-based index of the unique minimum when unimodal
};

// Strictly decreasing then strictly increasing, either side possibly empty;
// the minimum must be unique, so (0,0) is not unimodal.
Unimodality is_unimodal(std::span<const int> row);

// Signed sequences of a unimodal row r_1..r_k with valley index j (1-based):
//   top_seq    = (-r_1, ..., -r_{j-1}, r_j, ..., r_k)
//   bottom_seq = (-r_1, ..., -r_{j-1}, -r_j, r_{j+1}, ..., r_k)
// Both are strictly increasing. Throw NotUnimodal otherwise.
std::vector<int> top_seq(std::span<const int> row);
std::vector<int> bottom_seq(std::span<const int> row);

enum class ViolationKind { NotUnimodal, FirstLastRule, WitnessRule };

struct SdtViolation {
    ViolationKind kind = ViolationKind::NotUnimodal;
    std::vector<Cell> cells;       // involved cells, when meaningful
    std::optional<int> witness;    // witnessing signed value for WitnessRule
};

// Strict decomposition tableau test from the three defining conditions:
//  (a) every row is unimodal;
//  (b) first and last entries of row i+1 are below the first entry of row i;
//  (c) for adjacent rows with T(R_i) = a_1.. and B(R_{i+1}) = b_1.., every
//      j has {±a_1..±a_j, ±b_{j+1}..} disjoint from the interval (b_j, a_{j+1}].
// Returns the first violation found, or nullopt if T is an SDT.
std::optional<SdtViolation> sdt_violation(const ShiftedTableau& t);
bool is_sdt_direct(const ShiftedTableau& t);

// Conditions (b) and (c) for one adjacent pair of unimodal rows; both rows
// are assumed unimodal and the lower row strictly shorter than the upper.
bool sdt_pair_valid(std::span<const int> upper, std::span<const int> lower);

// Independent validator: T with unimodal rows is an SDT iff it avoids the five
// local two-row configurations. Throws NotUnimodal if a row is not unimodal.
bool is_sdt_configs(const ShiftedTableau& t);

enum class RenderFormat { Ascii, Latex };

std::string render(const ShiftedTableau& t, RenderFormat format);

}  // namespace gqpieri
