/*
   Copyright 2026 Anharmonia contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ANHARMONIA_UTIL_HPP
#define ANHARMONIA_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anharmonia {

struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Arithmetic between values living in different coefficient rings
// (e.g. cyclotomic numbers of different conductors, polynomials in
// different variables).
struct IncompatibleRingError : Error {
    using Error::Error;
};

// Zero/invalid input where a nondegenerate one is required.
struct DegenerateInputError : Error {
    using Error::Error;
};

// p-th root extraction failed; carries the first coefficient index at
// which the recursion could not continue.
struct NotAPowerError : Error {
    long index;
    NotAPowerError(const std::string &msg, long idx) : Error(msg), index(idx) {}
};

struct InadmissibleSeedError : Error {
    using Error::Error;
};

struct ConstructionError : Error {
    using Error::Error;
};

struct EliminationError : Error {
    using Error::Error;
};

// Numeric integration ran into a non-finite state.
struct SingularityError : Error {
    using Error::Error;
};

struct IllConditionedError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

// Deterministic xorshift generator used by all randomized property tests;
// same seed, same stream, on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {
        next();
        next();
    }

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state_ = x;
        return x;
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }

  private:
    std::uint64_t state_;
};

} // namespace anharmonia

#endif
