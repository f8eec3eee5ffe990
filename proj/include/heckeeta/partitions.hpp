#pragma once

#include <vector>

#include "heckeeta/characters.hpp"
#include "heckeeta/types.hpp"

namespace heckeeta {

/// p(0..N) by Euler's pentagonal recurrence.
std::vector<BigInt> p_table(int N);

/// One term sign * theta^theta_power * q^exponent of prod (1 - theta q^n).
struct PentagonalTerm {
  long long index;        // k in Z
  long long exponent;     // g(k) = k(3k - 1)/2
  int sign;               // (-1)^k
  long long theta_power;  // 3k - 1 for k > 0, -3k for k <= 0
};

/// Every generalized pentagonal term with g(k) <= K, ordered by exponent.
std::vector<PentagonalTerm> pentagonal_terms(long long K);

/// Partitions of 0..N into parts n with chi_D(n) = -1.
std::vector<BigInt> p_nr_table(const CharTable& ct, int N);

/// c[k][r] = #{partitions of k with length = r mod D}, k = 0..N, r = 0..D-1.
using LengthTable = std::vector<std::vector<BigInt>>;
LengthTable length_distribution(int D, int N);

/// e[k][r] = sum of (-1)^len over partitions of k into distinct parts with
/// len = r mod D, so that prod (1 - theta q^n) = sum_k sum_r e[k][r] theta^r q^k
/// whenever theta^D = 1.
LengthTable distinct_length_distribution(int D, int N);

struct PartitionTables {
  int N_max = 0;
  int D = 0;
  std::vector<BigInt> p;
  std::vector<BigInt> p_nr;
  LengthTable c;
};

/// Builds all three tables and checks that the rows of c sum to p.
PartitionTables build_partition_tables(const CharTable& ct, int N);

}  // namespace heckeeta
