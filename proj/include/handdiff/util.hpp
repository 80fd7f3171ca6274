// Small shared helpers: error formatting, deterministic RNG streams, file IO bits.
#pragma once

#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace handdiff {

// printf-style message builder for exceptions.
inline std::string strfmt(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    char buf[1024];
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

// Precondition failure (caller passed something invalid).
[[noreturn]] inline void fail_invalid(const std::string& msg) {
    throw std::invalid_argument(msg);
}

// Numeric / state failure detected mid-computation.
[[noreturn]] inline void fail_runtime(const std::string& msg) {
    throw std::runtime_error(msg);
}

inline void check_arg(bool ok, const std::string& msg) {
    if (!ok) fail_invalid(msg);
}

// splitmix64; used to derive independent child streams from a root seed.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random stream. All randomness in the project flows through
// explicit Rng instances so reruns with the same seed are bit-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(splitmix64(seed ^ 0xd1b54a32d192ed03ULL)) {
        if (s_ == 0) s_ = 0x2545f4914f6cdd1dULL;
    }

    // Independent child stream; stable under reordering of sibling draws.
    Rng split(uint64_t index) const {
        return Rng(splitmix64(s_ ^ (index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL)));
    }

    uint64_t next_u64() {
        // xorshift* core on splitmix-initialized state
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dULL;
    }

    // uniform in [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n)
    int64_t uniform_int(int64_t n) {
        return int64_t(next_u64() % uint64_t(n));
    }

    // standard normal via Box-Muller (stateless across calls for determinism)
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    uint64_t s_;
};

static_assert(std::endian::native == std::endian::little,
              "checkpoint writer assumes a little-endian host");

inline void write_bytes(std::ostream& os, const void* p, size_t n) {
    os.write(reinterpret_cast<const char*>(p), std::streamsize(n));
}

inline void read_bytes(std::istream& is, void* p, size_t n, const std::string& what) {
    is.read(reinterpret_cast<char*>(p), std::streamsize(n));
    if (size_t(is.gcount()) != n) fail_runtime("unexpected end of file while reading " + what);
}

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    write_bytes(os, &v, sizeof(T));
}

template <typename T>
T read_pod(std::istream& is, const std::string& what) {
    T v{};
    read_bytes(is, &v, sizeof(T), what);
    return v;
}

// Fixed-format double for CSV output; deterministic across runs.
inline std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace handdiff
