#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gqpieri/shapes.hpp"

using namespace gqpieri;

namespace {

CellSet cells_of(std::initializer_list<std::pair<int, int>> list) {
    CellSet out;
    for (auto [r, c] : list) out.push_back({r, c});
    std::sort(out.begin(), out.end());
    return out;
}

// quadruple scan over all cells, independent of the pairwise neighbour walk
bool rim_oracle(const CellSet& cells) {
    for (const Cell& a : cells)
        for (const Cell& b : cells)
            for (const Cell& c : cells)
                for (const Cell& d : cells) {
                    if (b.row == a.row && b.col == a.col + 1 &&
                        c.row == a.row + 1 && c.col == a.col &&
                        d.row == a.row + 1 && d.col == a.col + 1)
                        return false;
                }
    return true;
}

}  // namespace

TEST_CASE("strict partition validation and parsing") {
    CHECK_THROWS_AS(StrictPartition({3, 3}), InvalidArgs);
    CHECK_THROWS_AS(StrictPartition({2, 3}), InvalidArgs);
    CHECK_THROWS_AS(StrictPartition({2, 0}), InvalidArgs);
    CHECK(StrictPartition::parse("6,3,1") == StrictPartition({6, 3, 1}));
    CHECK(StrictPartition::parse("-") == StrictPartition{});
    CHECK(StrictPartition::parse("") == StrictPartition{});
    CHECK(StrictPartition({6, 3, 1}).str() == "6,3,1");
    CHECK(StrictPartition{}.str() == "-");
    CHECK_THROWS_AS(StrictPartition::parse("3,x"), ParseError);
    CHECK(StrictPartition({6, 3, 1}).weight() == 10);
    CHECK(StrictPartition({6, 3, 1}).part(2) == 3);
    CHECK(StrictPartition({6, 3, 1}).part(4) == 0);
}

TEST_CASE("shifted diagram") {
    CHECK(shifted_diagram(StrictPartition({2, 1})) ==
          cells_of({{1, 1}, {1, 2}, {2, 2}}));
    CHECK(shifted_diagram(StrictPartition{}).empty());
    CellSet d = shifted_diagram(StrictPartition({6, 3, 1}));
    CHECK(d.size() == 10);
    CellSet row2;
    for (const Cell& c : d)
        if (c.row == 2) row2.push_back(c);
    CHECK(row2 == cells_of({{2, 2}, {2, 3}, {2, 4}}));

    // row i holds exactly lambda_i cells starting at column i
    for (const StrictPartition& lambda : strict_partitions_in_box(5, 4)) {
        CellSet cells = shifted_diagram(lambda);
        CHECK(static_cast<int>(cells.size()) == lambda.weight());
        for (std::size_t i = 1; i <= lambda.length(); ++i) {
            int count = 0;
            for (const Cell& c : cells)
                if (c.row == static_cast<int>(i)) {
                    ++count;
                    CHECK(c.col >= static_cast<int>(i));
                    CHECK(c.col <= static_cast<int>(i) + lambda.part(i) - 1);
                }
            CHECK(count == lambda.part(i));
        }
    }
}

TEST_CASE("skew shapes") {
    CHECK(SkewShape(StrictPartition({4, 1}), StrictPartition({3})).cells() ==
          cells_of({{1, 4}, {2, 2}}));
    CHECK_THROWS_AS(SkewShape(StrictPartition({3, 1}), StrictPartition({3, 2})),
                    NotContained);

    // set difference of the two diagrams, computed directly
    StrictPartition mu({6, 3, 1}), lambda({5, 1});
    CellSet expected;
    CellSet inner = shifted_diagram(lambda);
    for (const Cell& c : shifted_diagram(mu))
        if (!std::binary_search(inner.begin(), inner.end(), c))
            expected.push_back(c);
    CHECK(SkewShape(mu, lambda).cells() == expected);
    CHECK(SkewShape(mu, lambda).cells() ==
          cells_of({{1, 6}, {2, 3}, {2, 4}, {3, 3}}));
}

TEST_CASE("rim predicate") {
    CHECK(is_rim(SkewShape(StrictPartition({4, 1}), StrictPartition({3}))));
    CHECK_FALSE(is_rim(SkewShape(StrictPartition({5, 4}), StrictPartition({3, 2}))));
    CHECK(is_rim(CellSet{}));

    // agreement with the brute-force quadruple scan on every small skew shape
    for (const StrictPartition& mu : strict_partitions_in_box(4, 3)) {
        if (mu.weight() > 12) continue;
        for (const StrictPartition& lambda : strict_partitions_in_box(4, 3)) {
            if (!mu.contains(lambda)) continue;
            CellSet cells = SkewShape(mu, lambda).cells();
            CHECK(is_rim(cells) == rim_oracle(cells));
        }
    }
}

TEST_CASE("classify") {
    SkewShape col(StrictPartition({6, 3, 2, 1}), StrictPartition({6, 2, 1}));
    CHECK(col.cells() == cells_of({{2, 4}, {3, 4}, {4, 4}}));
    Classification c1 = classify(col.cells());
    CHECK(c1.kind == ShapeKind::Column);
    CHECK(c1.touches_diagonal);

    Classification c2 =
        classify(SkewShape(StrictPartition({5, 4, 3}), StrictPartition({5, 4})).cells());
    CHECK(c2.kind == ShapeKind::Row);
    CHECK(c2.touches_diagonal);

    Classification c3 = classify(
        SkewShape(StrictPartition({6, 5, 4, 1}), StrictPartition({6, 4, 3, 1})).cells());
    CHECK(c3.kind == ShapeKind::Column);
    CHECK_FALSE(c3.touches_diagonal);

    CHECK(classify(cells_of({{1, 2}})).kind == ShapeKind::Row);
    CHECK_THROWS_AS(classify(CellSet{}), EmptyShape);
}

TEST_CASE("northeast arm") {
    // two rightmost boxes of the first row
    ArmDecomposition a1 =
        northeast_arm(SkewShape(StrictPartition({4, 1}), StrictPartition({1})).cells());
    CHECK(a1.arm == cells_of({{1, 3}, {1, 4}}));
    CHECK(a1.size == 2);
    CHECK(a1.kind == ShapeKind::Row);
    CHECK(a1.connected);

    // a full column is its own arm
    ArmDecomposition a2 = northeast_arm(cells_of({{2, 4}, {3, 4}, {4, 4}}));
    CHECK(a2.arm == cells_of({{2, 4}, {3, 4}, {4, 4}}));
    CHECK(a2.remainder.empty());

    ArmDecomposition a3 =
        northeast_arm(SkewShape(StrictPartition({6, 3, 1}), StrictPartition({5, 1})).cells());
    CHECK(a3.arm == cells_of({{1, 6}}));
    CHECK(a3.remainder == cells_of({{2, 3}, {2, 4}, {3, 3}}));
    CHECK_FALSE(a3.connected);

    CHECK_THROWS_AS(northeast_arm(CellSet{}), EmptyShape);
    CHECK_THROWS_AS(
        northeast_arm(cells_of({{1, 4}, {1, 5}, {2, 4}, {2, 5}})), NotARim);
}

TEST_CASE("arm decomposition invariants") {
    for (const StrictPartition& mu : strict_partitions_in_box(5, 4)) {
        for (const StrictPartition& lambda : strict_partitions_in_box(5, 4)) {
            if (!mu.contains(lambda)) continue;
            CellSet theta = SkewShape(mu, lambda).cells();
            if (theta.empty() || !is_rim(theta)) continue;
            int steps = 0;
            CellSet current = theta;
            while (!current.empty()) {
                ArmDecomposition arm = northeast_arm(current);
                CHECK_FALSE(arm.arm.empty());
                CHECK(is_rim(arm.remainder));
                CellSet reunion = arm.arm;
                reunion.insert(reunion.end(), arm.remainder.begin(),
                               arm.remainder.end());
                std::sort(reunion.begin(), reunion.end());
                CHECK(reunion == current);
                current = arm.remainder;
                ++steps;
                REQUIRE(steps <= static_cast<int>(theta.size()));
            }
        }
    }
}

TEST_CASE("trapezoid shapes") {
    CHECK(trapezoid(2, 4) == StrictPartition({5, 3}));
    CHECK(trapezoid(1, 7) == StrictPartition({7}));
    CHECK(trapezoid(3, 3) == StrictPartition({5, 3, 1}));
    CHECK_THROWS_AS(trapezoid(4, 3), InvalidArgs);
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 6; ++b) {
            StrictPartition tau = trapezoid(a, b);
            CHECK(tau.length() == static_cast<std::size_t>(a));
            CHECK(tau.part(1) == b + a - 1);
        }
}

TEST_CASE("partition generators") {
    auto box = strict_partitions_in_box(3, 2);
    // -, 1, 2, 3, 2,1, 3,1, 3,2
    CHECK(box.size() == 7);
    auto weight6 = strict_partitions_of_weight(6);
    // 6; 5,1; 4,2; 3,2,1
    CHECK(weight6.size() == 4);
    for (const auto& p : weight6) CHECK(p.weight() == 6);
}
