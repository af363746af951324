#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gmt {

// First `count` primes, ascending.
std::vector<std::uint32_t> first_primes(std::size_t count);

// Van der Corput radical inverse of `index` in `base`, in [0, 1).
double radical_inverse(std::uint64_t index, std::uint32_t base);

// Multidimensional Halton sequence, one prime base per coordinate.
class HaltonSequence {
 public:
  explicit HaltonSequence(std::size_t dimension);

  std::size_t dimension() const { return bases_.size(); }
  std::vector<double> point(std::uint64_t index) const;

 private:
  std::vector<std::uint32_t> bases_;
};

}  // namespace gmt
