#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace mmfl {

using Rng = std::mt19937_64;

// Stable seed derivation. Every random draw in an experiment comes from a
// generator seeded by hashing (base seed, path of identifiers), never by
// consuming a shared stream, so adding a scheme or a metric cannot shift
// the randomness seen by unrelated parts of the run.
uint64_t splitmix64(uint64_t x);
uint64_t hash_str(std::string_view s);
uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path);
Rng make_rng(uint64_t base, std::initializer_list<uint64_t> path);

// Circularly symmetric complex Gaussian, per-entry variance `var`
// (re and im each N(0, var/2)).
std::complex<double> draw_cn(Rng& rng, double var);
Eigen::VectorXcd draw_cn_vector(Rng& rng, Eigen::Index n, double var);

}  // namespace mmfl
