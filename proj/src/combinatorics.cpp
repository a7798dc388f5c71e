#include "rbx/combinatorics.hpp"

#include <stdexcept>

namespace rbx::lin {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  if (k < 0) return {};
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::size_t tuple_rank(const std::vector<int>& t, int n) {
  std::size_t r = 0;
  int k = static_cast<int>(t.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    if (t[i] <= prev || t[i] >= n) throw std::invalid_argument("tuple not increasing in range");
    for (int v = prev + 1; v < t[i]; ++v) r += binom(n - 1 - v, k - 1 - i);
    prev = t[i];
  }
  return r;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && idx[j - 1] == idx[j]) return 0;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

int inversion_sign(const std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

std::vector<std::vector<int>> combinations(int m, int k) { return increasing_tuples(m, k); }

std::vector<BlockSplit> block_splits(int m, int a) {
  std::vector<BlockSplit> out;
  if (a < 0 || a > m) return out;
  for (const auto& block : combinations(m, a)) {
    std::vector<bool> used(m, false);
    for (int x : block) used[x] = true;
    std::vector<int> seq = block;
    std::vector<int> rest;
    for (int x = 0; x < m; ++x)
      if (!used[x]) {
        seq.push_back(x);
        rest.push_back(x);
      }
    out.push_back({block, rest, inversion_sign(seq)});
  }
  return out;
}

std::vector<BlockSplit> middle_splits(int m, int a) {
  std::vector<BlockSplit> out;
  if (a < 0 || a + 1 > m) return out;
  for (const auto& block : combinations(m, a)) {
    std::vector<bool> used(m, false);
    for (int x : block) used[x] = true;
    for (int t = 0; t < m; ++t) {
      if (used[t]) continue;
      std::vector<int> rest{t};
      for (int x = 0; x < m; ++x)
        if (!used[x] && x != t) rest.push_back(x);
      std::vector<int> seq = block;
      seq.insert(seq.end(), rest.begin(), rest.end());
      out.push_back({block, rest, inversion_sign(seq)});
    }
  }
  return out;
}

}  // namespace rbx::lin
