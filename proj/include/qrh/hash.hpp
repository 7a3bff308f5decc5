#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace qrh {

/// SplitMix64 finaliser (Steele, Lea, Flood 2014). All randomness in the
/// library is derived from this function, so results are identical on every
/// platform and independent of evaluation order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Domain tags keep the pair-colour, arc and triple-orientation streams of
/// one seed independent of each other.
enum class HashDomain : std::uint64_t { colour = 1, arc = 2, triple = 3, search = 4 };

/// h0 = splitmix64(seed ^ (domain << 56) ^ arity); h_{i+1} = splitmix64(h_i ^ x_i).
constexpr std::uint64_t tuple_hash(std::uint64_t seed, HashDomain domain, std::initializer_list<std::uint64_t> xs) {
    std::uint64_t h = splitmix64(seed ^ (static_cast<std::uint64_t>(domain) << 56) ^ xs.size());
    for (std::uint64_t x : xs) h = splitmix64(h ^ x);
    return h;
}

/// Small sequential generator for search heuristics (not for constructions).
class SplitMixRng {
public:
    explicit SplitMixRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound) by 128-bit multiply-shift; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
    bool coin() { return next() >> 63; }
    /// Uniform double in [0,1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace qrh
