#pragma once

// Index sets for simple modules of S(lambda) and of the generic algebra
// U-dot(lambda) in characteristic zero.

#include <string>
#include <utility>
#include <vector>

#include "schurlab/combinatorics.hpp"

namespace schurlab {

struct SimpleIndexReport {
  Weight lambda;
  int window = -1;  // -1 for the Schur case
  std::vector<std::pair<Weight, std::size_t>> entries;  // (mu, K_{mu lambda}), K != 0
  /// The set equals {mu dominant : sort_dominant(lambda) <= mu} (within the
  /// window for U-dot).
  bool dominance_agrees = false;
  /// Positive characteristic multiplicities are not computed.
  std::string char_p = "not computed";
};

/// Dominant mu in Lambda(n, r) with K_{mu lambda} != 0.
SimpleIndexReport simple_index_set(const Weight& lambda);

/// K_{mu lambda} = dim 1_lambda L(mu) in characteristic 0; mu dominant.
std::size_t simple_dim_char0(const Weight& lambda, const Weight& mu);

/// Kostka number for arbitrary integer weights of equal degree: both are
/// shifted by k(1, ..., 1) into compositions. Zero if mu is not dominant.
std::size_t kostka_shifted(const Weight& mu, const Weight& lambda);

/// mu = sort_dominant(lambda) + sum c_i alpha_i with c_i >= 0,
/// sum c_i <= window, mu dominant, K'_{mu lambda} != 0.
SimpleIndexReport udot_simple_index_set(const Weight& lambda, int window);

/// sum_mu K_{mu lambda}^2, to compare with dim S(lambda).
std::size_t kostka_square_sum(const Weight& lambda);

}  // namespace schurlab
