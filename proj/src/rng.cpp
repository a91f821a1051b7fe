#include "mmfl/rng.hpp"

namespace mmfl {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t hash_str(std::string_view s) {
  // FNV-1a 64-bit
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
  uint64_t h = splitmix64(base);
  for (uint64_t p : path) {
    h = splitmix64(h ^ splitmix64(p));
  }
  return h;
}

Rng make_rng(uint64_t base, std::initializer_list<uint64_t> path) {
  return Rng(derive_seed(base, path));
}

std::complex<double> draw_cn(Rng& rng, double var) {
  if (var <= 0.0) return {0.0, 0.0};
  std::normal_distribution<double> n(0.0, std::sqrt(var / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Eigen::VectorXcd draw_cn_vector(Rng& rng, Eigen::Index n, double var) {
  if (var <= 0.0) return Eigen::VectorXcd::Zero(n);
  std::normal_distribution<double> dist(0.0, std::sqrt(var / 2.0));
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = dist(rng);
    const double im = dist(rng);
    v[i] = std::complex<double>(re, im);
  }
  return v;
}

}  // namespace mmfl
