#pragma once

#include <cstdint>

namespace fano {

// splitmix64 stream. Used for all sampling so that seeded runs reproduce
// bit-for-bit on any platform; the standard library distributions are not
// portable across implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound) by rejection
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int64_t int_in(int64_t lo, int64_t hi) {  // inclusive range
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // independent deterministic substream
  Rng fork(uint64_t stream) const {
    Rng r(s_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    r.next();
    return r;
  }

 private:
  uint64_t s_;
};

}  // namespace fano
