#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - classical second-kind Stirling numbers by brute-force set partition
//    enumeration and by the classical recurrence,
//  - classical Bernoulli numbers by the standard sum recurrence and by the
//    classical exponential series over plain rationals.

#include <vector>

#include "degenstir/rational.hpp"

namespace degenstir::testing {

/// Number of partitions of an n-set into exactly k nonempty blocks, counted
/// by enumerating restricted-growth strings. Usable up to n ~ 12.
long long count_set_partitions(int n, int k);

/// Classical triangle via {n+1 k} = {n k-1} + k {n k}.
std::vector<std::vector<Rational>> classical_stirling_triangle(int n_max);

/// B_0..B_n via B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k.
std::vector<Rational> classical_bernoulli_recurrence(int n_max);

/// Order-alpha classical Bernoulli numbers from (t/(e^t-1))^alpha over plain
/// rationals (binomial series on the inverted classical exponential).
std::vector<Rational> classical_bernoulli_series(const Rational& alpha, int n_max);

}  // namespace degenstir::testing
