#include "gmt/halton.hpp"

#include "gmt/errors.hpp"

namespace gmt {

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> primes;
  primes.reserve(count);
  for (std::uint32_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (std::uint32_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  if (base < 2) throw DomainError("radical inverse base must be >= 2");
  const double inv = 1.0 / base;
  double scale = inv;
  double out = 0.0;
  while (index > 0) {
    out += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return out;
}

HaltonSequence::HaltonSequence(std::size_t dimension) : bases_(first_primes(dimension)) {}

std::vector<double> HaltonSequence::point(std::uint64_t index) const {
  std::vector<double> out;
  out.reserve(bases_.size());
  for (std::uint32_t b : bases_) out.push_back(radical_inverse(index, b));
  return out;
}

}  // namespace gmt
