#include "alcove/rng.hpp"

namespace alcove {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, const std::vector<std::uint64_t>& path) {
    std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
    for (std::uint64_t p : path)
        h = mix64(h ^ mix64(p ^ 0x13198a2e03707344ULL));
    return h;
}

std::uint64_t label(const std::string& s) {
    // FNV-1a, then mixed; only used to turn experiment names into labels.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s)
        h = (h ^ c) * 0x100000001b3ULL;
    return mix64(h);
}

std::uint64_t Stream::next_u64() {
    return mix64(key_ ^ mix64(ctr_++ + 0x452821e638d01377ULL));
}

double Stream::uniform() {
    // 53-bit mantissa, offset by half a ulp so the value lies in (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double Stream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

} // namespace alcove
