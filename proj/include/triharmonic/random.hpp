#ifndef TRIHARMONIC_RANDOM_HPP
#define TRIHARMONIC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "scalar.hpp"
#include "vecmat.hpp"

namespace triharmonic {

/// Seeded deterministic generator. All bounded draws are mapped by hand
/// (rejection sampling / mantissa scaling) so that identical seeds give
/// identical streams on every platform; std::uniform_*_distribution is not
/// bit-reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive, unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next_u64()); // full 64-bit span
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % range);
    }

    /// Uniform double in [lo, hi) from the top 53 bits.
    double uniform_real(double lo, double hi) {
        const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    /// Uniform-ish rational in [lo, hi]: denominator in [1, max_den], numerator
    /// uniform over all admissible values for that denominator.
    Rational rational(int lo, int hi, int max_den = 8) {
        const std::int64_t den = uniform_int(1, max_den);
        const std::int64_t num = uniform_int(static_cast<std::int64_t>(lo) * den,
                                             static_cast<std::int64_t>(hi) * den);
        return Rational(num, den);
    }

    Vec3<Rational> rational_vec(int lo, int hi, int max_den = 8) {
        // Evaluation order of braced initializers is left-to-right (guaranteed),
        // so the stream layout is deterministic.
        Vec3<Rational> v;
        v[0] = rational(lo, hi, max_den);
        v[1] = rational(lo, hi, max_den);
        v[2] = rational(lo, hi, max_den);
        return v;
    }

    Vec3<double> real_vec(double lo, double hi) {
        Vec3<double> v;
        v[0] = uniform_real(lo, hi);
        v[1] = uniform_real(lo, hi);
        v[2] = uniform_real(lo, hi);
        return v;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace triharmonic

#endif // TRIHARMONIC_RANDOM_HPP
