#pragma once

#include <cstdint>
#include <cmath>
#include <string>
#include <vector>

namespace alcove {

// Counter-based pseudo-random stream.  A stream is identified by a 64-bit
// key derived from a root seed and a path of labels; draws are produced by
// applying a strong 64-bit mixer to (key, counter).  Streams with distinct
// paths are independent for practical purposes, and the draws obtained from
// a stream depend only on (seed, path, counter) -- never on which thread or
// in which order other streams were consumed.  This is what makes Monte
// Carlo output bit-identical across worker counts.
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key), ctr_(0) {}

    std::uint64_t next_u64();

    // Uniform on (0,1), never returning an exact 0 or 1.
    double uniform();

    // Standard normal via Box-Muller; draws two uniforms per pair and
    // caches the second value.
    double normal();

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return ctr_; }

private:
    std::uint64_t key_;
    std::uint64_t ctr_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64 finalizer; the workhorse mixer for key derivation and draws.
std::uint64_t mix64(std::uint64_t x);

// Derive a stream key from a root seed and a path of labels.  Numeric
// labels are preferred (replica indices); string labels name experiments.
std::uint64_t derive_key(std::uint64_t seed, const std::vector<std::uint64_t>& path);
std::uint64_t label(const std::string& s);

inline Stream derive_stream(std::uint64_t seed, const std::vector<std::uint64_t>& path) {
    return Stream(derive_key(seed, path));
}

} // namespace alcove
