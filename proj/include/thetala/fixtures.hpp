#ifndef THETALA_FIXTURES_HPP
#define THETALA_FIXTURES_HPP

#include <thetala/graph.hpp>
#include <thetala/labeling.hpp>

#include <utility>
#include <vector>

namespace thetala::fixtures {

// Local antimagic 2-colouring (colours 85, 105) of theta(10^[2], 8^[8]):
// paths R1, R2 (length 10) then Q1..Q8 (length 8), all listed u -> v.
// The sixth label of Q1 is 38; pair sums alternate 85 / 105 along every
// path, which fixes it.
inline std::pair<Graph, EdgeLabeling> lift_base_l2()
{
    const std::vector<std::vector<Label>> rows {
        { 1, 84, 21, 64, 41, 44, 61, 24, 81, 4 },
        { 2, 83, 22, 63, 42, 43, 62, 23, 82, 3 },
        { 7, 78, 27, 58, 47, 38, 67, 18 },
        { 8, 77, 28, 57, 48, 37, 68, 17 },
        { 9, 76, 29, 56, 49, 36, 69, 16 },
        { 11, 74, 31, 54, 51, 34, 71, 14 },
        { 13, 72, 33, 52, 53, 32, 73, 12 },
        { 15, 70, 35, 50, 55, 30, 75, 10 },
        { 19, 66, 39, 46, 59, 26, 79, 6 },
        { 20, 65, 40, 45, 60, 25, 80, 5 },
    };
    Graph g = build_theta(ThetaSpec { { 10, 10, 8, 8, 8, 8, 8, 8, 8, 8 } });
    EdgeLabeling f = labeling_from_rows(g, rows);
    return { std::move(g), std::move(f) };
}

} // namespace thetala::fixtures

#endif
