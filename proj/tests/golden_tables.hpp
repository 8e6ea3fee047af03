#pragma once

// Frozen reference tables for the small polynomial families. Coefficients
// are listed from degree zero upwards.

#include "derange/intpoly.hpp"

#include <vector>

namespace golden {

using derange::IntPoly;

// half derangement parts, n = 0..7
inline const std::vector<IntPoly> f_plus = {
    IntPoly{1},
    IntPoly{},
    IntPoly{0, 3},
    IntPoly{0, 7, 7},
    IntPoly{0, 15, 87, 15},
    IntPoly{0, 31, 551, 551, 31},
    IntPoly{0, 63, 2803, 8243, 2803, 63},
    IntPoly{0, 127, 12867, 84827, 84827, 12867, 127},
};

inline const std::vector<IntPoly> f_minus = {
    IntPoly{},
    IntPoly{0, 1},
    IntPoly{0, 1, 1},
    IntPoly{0, 1, 13, 1},
    IntPoly{0, 1, 57, 57, 1},
    IntPoly{0, 1, 201, 761, 201, 1},
    IntPoly{0, 1, 653, 6333, 6333, 653, 1},
    IntPoly{0, 1, 2045, 42757, 106037, 42757, 2045, 1},
};

// gamma-basis expansions of the two parts, n = 0..7
inline const std::vector<IntPoly> xi_plus = {
    IntPoly{1},
    IntPoly{},
    IntPoly{0, 3},
    IntPoly{0, 7},
    IntPoly{0, 15, 57},
    IntPoly{0, 31, 458},
    IntPoly{0, 63, 2551, 2763},
    IntPoly{0, 127, 12232, 46861},
};

inline const std::vector<IntPoly> xi_minus = {
    IntPoly{},
    IntPoly{0, 1},
    IntPoly{0, 1},
    IntPoly{0, 1, 11},
    IntPoly{0, 1, 54},
    IntPoly{0, 1, 197, 361},
    IntPoly{0, 1, 648, 4379},
    IntPoly{0, 1, 2039, 34586, 24611},
};

// half Eulerian polynomials, n = 0..6
inline const std::vector<IntPoly> b_plus = {
    IntPoly{1},
    IntPoly{1},
    IntPoly{1, 3},
    IntPoly{1, 16, 7},
    IntPoly{1, 61, 115, 15},
    IntPoly{1, 206, 1056, 626, 31},
    IntPoly{1, 659, 7554, 11774, 2989, 63},
};

inline const std::vector<IntPoly> b_minus = {
    IntPoly{},
    IntPoly{0, 1},
    IntPoly{0, 3, 1},
    IntPoly{0, 7, 16, 1},
    IntPoly{0, 15, 115, 61, 1},
    IntPoly{0, 31, 626, 1056, 206, 1},
    IntPoly{0, 63, 2989, 11774, 7554, 659, 1},
};

// Eulerian and derangement polynomials for plain permutations, n = 0..4
inline const std::vector<IntPoly> eulerian_a = {
    IntPoly{1}, IntPoly{1}, IntPoly{1, 1}, IntPoly{1, 4, 1}, IntPoly{1, 11, 11, 1},
};

inline const std::vector<IntPoly> derangement_a = {
    IntPoly{1}, IntPoly{}, IntPoly{0, 1}, IntPoly{0, 1, 1}, IntPoly{0, 1, 7, 1},
};

}  // namespace golden
