#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "radgauge/matrix.hpp"

namespace rg {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

// mt19937_64 with hand-rolled distributions so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // independent stream for (seed, name, index)
    static Rng keyed(std::uint64_t seed, std::string_view name, std::uint64_t index);

    std::uint64_t next() { return gen_(); }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double log_uniform(double a, double b);
    int integer(int lo, int hi);
    double normal();
    cplx complex_normal() { return {normal(), normal()}; }
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace rg
