#include "radgauge/rng.hpp"

#include <cmath>

namespace rg {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng Rng::keyed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ fnv1a64(name));
    k = splitmix64(k ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    return Rng(k);
}

double Rng::log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

int Rng::integer(int lo, int hi) {
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + int(next() % span);
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    const double f = std::sqrt(-2 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

}  // namespace rg
