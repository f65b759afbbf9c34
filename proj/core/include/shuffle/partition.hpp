#pragma once

// Integer partitions and compositions: the index combinatorics used everywhere.
// A Partition is weakly decreasing with positive parts (no trailing zeros);
// a Composition is any vector of nonnegative entries.

#include <vector>

#include "shuffle/qt.hpp"

namespace shuffle {

using Partition = std::vector<int>;
using Composition = std::vector<int>;

bool is_partition(const std::vector<int>& a);

// weakly decreasing rearrangement with zeros stripped (the + operation)
Partition sort_desc(std::vector<int> a);

long weight(const std::vector<int>& a);  // sum of entries

Partition conjugate(const Partition& p);

// n(lambda) = sum (i-1) * lambda_i
long nstat(const Partition& p);

// z_lambda = prod i^{m_i} m_i!
ZZ zee(const Partition& p);

// dominance order on partitions of equal weight: a >= b
bool dominates(const Partition& a, const Partition& b);

// arm/leg of the box (i, j) (1-based row i, column j) of a partition diagram
int arm(const Partition& p, int i, int j);
int leg(const Partition& p, int i, int j);

// all partitions of n, in descending lexicographic order ((n) first)
std::vector<Partition> partitions_of(int n);

// all partitions of n with at most maxlen parts
std::vector<Partition> partitions_of_max_len(int n, int maxlen);

// all length-len vectors of nonnegative integers summing to n, lex order
std::vector<Composition> compositions_of(int n, int len);

// concatenation (eta; lambda)
std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace shuffle
