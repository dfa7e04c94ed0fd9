#include "gqpieri/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace gqpieri {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidArgs("strict partition parts must be positive");
        if (i > 0 && parts_[i - 1] <= parts_[i])
            throw InvalidArgs("strict partition parts must be strictly decreasing");
    }
}

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(std::vector<int>(parts)) {}

StrictPartition StrictPartition::parse(std::string_view text) {
    if (text.empty() || text == "-") return StrictPartition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return StrictPartition(std::move(parts));
}

int StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::contains(const StrictPartition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string StrictPartition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

CellSet shifted_diagram(const StrictPartition& lambda) {
    CellSet cells;
    cells.reserve(static_cast<std::size_t>(lambda.weight()));
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        int row = static_cast<int>(i);
        for (int col = row; col <= row + lambda.part(i) - 1; ++col)
            cells.push_back({row, col});
    }
    return cells;
}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw NotContained("inner shape " + inner_.str() + " not contained in " +
                           outer_.str());
    // Row i of the skew diagram spans columns i+inner_i .. i+outer_i-1.
    for (std::size_t i = 1; i <= outer_.length(); ++i) {
        int row = static_cast<int>(i);
        for (int col = row + inner_.part(i); col <= row + outer_.part(i) - 1; ++col)
            cells_.push_back({row, col});
    }
}

SkewShape skew(const StrictPartition& mu, const StrictPartition& lambda) {
    return SkewShape(mu, lambda);
}

namespace {

bool contains_cell(const CellSet& cells, Cell c) {
    return std::binary_search(cells.begin(), cells.end(), c);
}

}  // namespace

bool is_rim(const CellSet& cells) {
    for (const Cell& c : cells) {
        if (contains_cell(cells, {c.row, c.col + 1}) &&
            contains_cell(cells, {c.row + 1, c.col}) &&
            contains_cell(cells, {c.row + 1, c.col + 1}))
            return false;
    }
    return true;
}

bool is_rim(const SkewShape& theta) { return is_rim(theta.cells()); }

Classification classify(const CellSet& cells) {
    if (cells.empty()) throw EmptyShape("classify: empty shape");
    Classification out;
    bool one_row = true, one_col = true;
    for (const Cell& c : cells) {
        one_row = one_row && c.row == cells.front().row;
        one_col = one_col && c.col == cells.front().col;
        out.touches_diagonal = out.touches_diagonal || c.row == c.col;
    }
    out.kind = one_row ? ShapeKind::Row
                       : (one_col ? ShapeKind::Column : ShapeKind::Neither);
    return out;
}

Classification classify(const SkewShape& theta) { return classify(theta.cells()); }

ArmDecomposition northeast_arm(const CellSet& cells) {
    if (cells.empty()) throw EmptyShape("northeast_arm: empty shape");
    if (!is_rim(cells)) throw NotARim("northeast_arm: shape is not a rim");

    // Most north-east box: maximal column, minimal row on ties.
    Cell b = cells.front();
    for (const Cell& c : cells)
        if (c.col > b.col || (c.col == b.col && c.row < b.row)) b = c;

    int min_col = cells.front().col, max_row = cells.front().row;
    for (const Cell& c : cells) {
        min_col = std::min(min_col, c.col);
        max_row = std::max(max_row, c.row);
    }
    // Beyond this size the square covers every cell weakly south-west of B.
    int max_k = std::max(b.col - min_col, max_row - b.row) + 1;

    CellSet best;  // k = 1 always qualifies: the single cell B
    for (int k = 1; k <= max_k; ++k) {
        CellSet inter;
        for (const Cell& c : cells)
            if (c.row >= b.row && c.row <= b.row + k - 1 && c.col <= b.col &&
                c.col >= b.col - k + 1)
                inter.push_back(c);
        bool one_row = true, one_col = true;
        for (const Cell& c : inter) {
            one_row = one_row && c.row == inter.front().row;
            one_col = one_col && c.col == inter.front().col;
        }
        if (one_row || one_col)
            best = std::move(inter);
        else
            break;  // rows and columns only grow with k
    }

    ArmDecomposition out;
    out.arm = std::move(best);
    out.size = static_cast<int>(out.arm.size());
    out.kind = classify(out.arm).kind == ShapeKind::Column ? ShapeKind::Column
                                                           : ShapeKind::Row;
    std::set_difference(cells.begin(), cells.end(), out.arm.begin(), out.arm.end(),
                        std::back_inserter(out.remainder));
    for (const Cell& c : out.arm) {
        if (contains_cell(out.remainder, {c.row - 1, c.col}) ||
            contains_cell(out.remainder, {c.row + 1, c.col}) ||
            contains_cell(out.remainder, {c.row, c.col - 1}) ||
            contains_cell(out.remainder, {c.row, c.col + 1})) {
            out.connected = true;
            break;
        }
    }
    return out;
}

ArmDecomposition northeast_arm(const SkewShape& theta) {
    return northeast_arm(theta.cells());
}

StrictPartition trapezoid(int a, int b) {
    if (a < 1 || b < a)
        throw InvalidArgs("trapezoid: need 1 <= a <= b");
    std::vector<int> parts;
    for (int i = 0; i < a; ++i) parts.push_back(b + a - 1 - 2 * i);
    return StrictPartition(std::move(parts));
}

std::vector<StrictPartition> strict_partitions_in_box(int max_part, int max_len) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_next) -> void {
        out.emplace_back(StrictPartition(cur));
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = max_next; p >= 1; --p) {
            cur.push_back(p);
            self(self, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> strict_partitions_of_weight(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_next) -> void {
        if (remaining == 0) {
            out.emplace_back(StrictPartition(cur));
            return;
        }
        for (int p = std::min(remaining, max_next); p >= 1; --p) {
            // the tail below p can sum to at most p*(p-1)/2
            if (remaining - p > p * (p - 1) / 2) continue;
            cur.push_back(p);
            self(self, remaining - p, p - 1);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n);
    return out;
}

}  // namespace gqpieri
