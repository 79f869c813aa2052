#pragma once

#include <array>

namespace corpus {

// Thirty polynomials: rational roots, repeated roots, nonzero content,
// local obstructions, and intersective ones with no rational root.
inline constexpr std::array<const char*, 30> kPolys = {
    "x",
    "x^2",
    "x^2+1",
    "x^2-2",
    "x^2+x+1",
    "x^3-19",
    "x^5+x^4+x^3-19x^2-19x-19",
    "x^3-2",
    "x^4+1",
    "2x^3-19",
    "x-3",
    "x+1",
    "x^2-1",
    "x^6-251x^4+6851x^2-48841",
    "x^5+x^4-5x^3-x^2+8x-4",
    "4x^2+4x+1",
    "12x^2",
    "x^6",
    "x^2+x",
    "x^3-x",
    "x^5-x",
    "3x^2+5",
    "x^4-x^2",
    "x^2+3",
    "x^2-5",
    "x^3+x+1",
    "6x^2-x-1",
    "x^4+x^3+x^2+x+1",
    "x^7-7",
    "100003x^2-7",
};

}  // namespace corpus
