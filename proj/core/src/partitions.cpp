#include "gkdpp/partitions.hpp"

#include <cmath>
#include <numeric>

namespace gkdpp {

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<int> conj(parts[0], 0);
  for (int row : parts)
    for (int j = 0; j < row; ++j) ++conj[j];
  return conj;
}

double Partition::log_dim_over_factorial() const {
  const auto conj = conjugate();
  double log_hooks = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      const int hook = parts[i] - j + conj[j] - static_cast<int>(i) - 1;
      log_hooks += std::log(static_cast<double>(hook));
    }
  return -log_hooks;
}

namespace {

void descend(std::vector<int>& stack, int remaining, int cap,
             const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition{stack});
    return;
  }
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    stack.push_back(part);
    descend(stack, remaining - part, part, fn);
    stack.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw Error("for_each_partition: negative size");
  std::vector<int> stack;
  descend(stack, n, n, fn);
}

}  // namespace gkdpp
