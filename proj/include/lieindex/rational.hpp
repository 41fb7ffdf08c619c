#ifndef LIEINDEX_RATIONAL_HPP
#define LIEINDEX_RATIONAL_HPP

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals (GMP-backed), canonical string form "p/q", and a
// deterministic PRNG for seeded sampling. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieindex {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// gmpxx has no long long constructor; import through the raw limbs.
inline Int int_of(long long v) {
  unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
  Int z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  return v < 0 ? Int(-z) : z;
}

inline Rat rat_of(long long v) { return Rat(int_of(v)); }

/// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Parses "p" or "p/q" (q != 0). Throws std::invalid_argument on anything else.
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

/// splitmix64: tiny, cross-platform deterministic generator. Used wherever a
/// seeded stream of sample coordinates is needed; std:: distributions are
/// avoided because their output is implementation-defined.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Independent stream for (seed, trial); trials may run concurrently.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 g(seed);
  std::uint64_t base = g.next();
  return SplitMix64(base ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
}

/// Uniform integer in [-2^31, 2^31] (both endpoints included).
inline long long draw_coordinate(SplitMix64& g) {
  const std::uint64_t span = 4294967297ULL;  // 2^32 + 1
  return static_cast<long long>(g.next() % span) - 2147483648LL;
}

}  // namespace lieindex

#endif
