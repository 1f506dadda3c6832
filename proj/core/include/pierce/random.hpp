#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pierce/rational.hpp"

namespace pierce {

// splitmix64 finalizer; used to derive independent substreams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG wrapper. Only raw engine draws are used (never the
// standard distributions, whose output is implementation-defined), so seeded
// runs reproduce bit-for-bit on any conforming standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish draw in [0, n); modulo bias is irrelevant for our uses.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    // Rational in (-1, 1) with fixed denominator 2^shift.
    Rational signed_unit(unsigned shift = 20) {
        const std::int64_t den = std::int64_t(1) << shift;
        return Rational(int_in(-(den - 1), den - 1), den);
    }

    // Rational in (0, 1).
    Rational open_unit(unsigned shift = 20) {
        const std::int64_t den = std::int64_t(1) << shift;
        return Rational(int_in(1, den - 1), den);
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[index(i)]);
        }
    }

    // k distinct indices from [0, n), sorted.
    std::vector<int> sample_indices(std::size_t n, std::size_t k);

  private:
    std::mt19937_64 engine_;
};

inline std::vector<int> Rng::sample_indices(std::size_t n, std::size_t k) {
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < k && i < n; ++i) {
        std::swap(all[i], all[i + index(n - i)]);
    }
    all.resize(k < n ? k : n);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace pierce
