#pragma once

#include <vector>

#include "capgame/rational.hpp"

namespace capgame {

/// Row-major dense matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);

/// Exact determinant by Gaussian elimination. Square input required.
Rational determinant(RationalMatrix m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

}  // namespace capgame
