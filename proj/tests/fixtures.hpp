#pragma once

#include "eigenrank/matrix.hpp"
#include "eigenrank/web.hpp"

// The worked examples every suite leans on: three-player round robins, the
// 6x6 pairwise-comparison matrix with a half-point diagonal, and the
// three-site hyperlink example.
namespace fixtures {

inline eigenrank::NonNegMatrix first_round_robin() {
    return eigenrank::NonNegMatrix::dense_from_rows({{0, 1, 0.5}, {0, 0, 1}, {0.5, 0, 0}});
}

// Player 1 wins both games, players 2 and 3 draw. Reducible; dominant
// eigenpair is (1/2, (4, 1, 1)).
inline eigenrank::NonNegMatrix a1() {
    return eigenrank::NonNegMatrix::dense_from_rows({{0, 1, 1}, {0, 0, 0.5}, {0, 0.5, 0}});
}

// Player 1 wins both, player 2 beats player 3. Nilpotent: all eigenvalues 0.
inline eigenrank::NonNegMatrix a2() {
    return eigenrank::NonNegMatrix::dense_from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
}

inline eigenrank::NonNegMatrix kendall6() {
    return eigenrank::NonNegMatrix::dense_from_rows({
        {0.5, 1, 1, 0, 1, 1},
        {0, 0.5, 0, 1, 1, 0},
        {0, 1, 0.5, 1, 1, 1},
        {1, 0, 0, 0.5, 0, 0},
        {0, 0, 0, 1, 0.5, 1},
        {0, 1, 0, 1, 0, 0.5},
    });
}

inline eigenrank::NonNegMatrix patent_h() {
    return eigenrank::NonNegMatrix::dense_from_rows({{0, 0, 1}, {0.5, 0, 0}, {0.5, 1, 0}});
}

// A links to B and C, B links to C, C links to A.
inline eigenrank::LinkGraph patent_graph() {
    eigenrank::LinkGraph g;
    g.add_link("A", "B");
    g.add_link("A", "C");
    g.add_link("B", "C");
    g.add_link("C", "A");
    return g;
}

}  // namespace fixtures
