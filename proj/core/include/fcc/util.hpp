#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fcc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries the 1-based offending line.
struct ParseError : Error {
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// A structural invariant does not hold (invalid partition, bad decomposition, ...).
struct ValidationError : Error {
    using Error::Error;
};

// A precondition of an operation is violated (cap exceeded, wrong fairlet size, ...).
struct ParamError : Error {
    using Error::Error;
};

struct TimeoutError : Error {
    TimeoutError() : Error("deadline exceeded") {}
};

// Cooperative wall-clock budget. Solvers poll it in their hot loops and bail
// out with TimeoutError; a null pointer means "no limit".
class Deadline {
  public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

    bool expired() const { return std::chrono::steady_clock::now() >= end_; }

  private:
    std::chrono::steady_clock::time_point end_;
};

inline void check_deadline(const Deadline* d) {
    if (d && d->expired()) throw TimeoutError();
}

// xorshift-style splitmix step; used to seed and advance the generator in a
// platform-independent way (std distributions are not pinned by the standard).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

}  // namespace fcc
