#ifndef RBX_COMBINATORICS_HPP
#define RBX_COMBINATORICS_HPP

#include <cstddef>
#include <vector>

namespace rbx::lin {

std::size_t binom(std::size_t n, std::size_t k);

/* All strictly increasing k-tuples over {0..n-1} in lexicographic order.
   k = 0 yields the single empty tuple. */
std::vector<std::vector<int>> increasing_tuples(int n, int k);

/* Lexicographic rank of an increasing tuple among increasing_tuples(n,k). */
std::size_t tuple_rank(const std::vector<int>& t, int n);

/* Sorts idx ascending; returns the sign of the sorting permutation, or 0
   when an index repeats. */
int sort_with_sign(std::vector<int>& idx);

/* Sign (-1)^inversions of an integer sequence with distinct entries. */
int inversion_sign(const std::vector<int>& seq);

/* All k-subsets of {0..m-1} as increasing position tuples. */
std::vector<std::vector<int>> combinations(int m, int k);

/* One block unshuffle of the positions {0..m-1}: `first` and `rest` are
   ascending, `sign` is the sign of the permutation (first ++ rest). */
struct BlockSplit {
  std::vector<int> first;
  std::vector<int> rest;
  int sign;
};

/* All (a, m-a) unshuffles. */
std::vector<BlockSplit> block_splits(int m, int a);

/* All (a, 1, m-a-1) unshuffles; rest[0] holds the singleton and the
   remainder of rest is ascending. */
std::vector<BlockSplit> middle_splits(int m, int a);

}  // namespace rbx::lin

#endif
