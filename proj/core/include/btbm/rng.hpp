#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace btbm {

// Counter-based random streams (Philox4x32-10).
//
// A stream is addressed by (master seed, replicate index, role).  Distinct
// (replicate, role) pairs occupy disjoint counter blocks, so any number of
// streams can be created lazily from anywhere in a parallel run and still
// produce the same values as a serial run.  One Philox block yields four
// 32-bit words, i.e. two 53-bit uniform doubles.

namespace detail {

struct philox_block {
    uint32_t w[4];
};

inline philox_block philox4x32_10(uint32_t c0, uint32_t c1, uint32_t c2,
                                  uint32_t c3, uint32_t k0, uint32_t k1) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const uint64_t p0 = static_cast<uint64_t>(M0) * c0;
        const uint64_t p1 = static_cast<uint64_t>(M1) * c2;
        const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        const uint32_t n0 = hi1 ^ c1 ^ k0;
        const uint32_t n1 = lo1;
        const uint32_t n2 = hi0 ^ c3 ^ k1;
        const uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += W0; k1 += W1;
    }
    return {{c0, c1, c2, c3}};
}

// AS 241 (Wichura), double-precision inverse of the standard normal CDF.
inline double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p outside (0,1)");
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
              1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
              4.2313330701600911252e1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double v;
    if (r <= 5.0) {
        r -= 1.6;
        v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -v : v;
}

}  // namespace detail

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / 1.4142135623730951); }

// Role of a stream inside one replicate.  Outer-copy roles are parameterized
// by a copy index and (for d > 1) a component index.
struct StreamRole {
    uint32_t id;

    static constexpr uint32_t kInner = 0;
    static constexpr uint32_t kCopySelect = 1;
    static constexpr uint32_t kTerminal = 2;
    static constexpr uint32_t kAux = 3;

    static StreamRole inner() { return {kInner}; }
    static StreamRole copy_select() { return {kCopySelect}; }
    static StreamRole terminal() { return {kTerminal}; }
    static StreamRole aux(uint32_t which) { return {kAux + which}; }
    // outer sampler streams start above a fixed offset: copy index is the
    // excursion-copy (or excursion index for the fresh-copy variant),
    // component selects the coordinate when d > 1
    static StreamRole outer(uint32_t copy, uint32_t component = 0) {
        return {0x10000u + copy * 64u + component};
    }
};

class RngStream {
  public:
    RngStream() = default;
    RngStream(uint64_t seed, uint64_t replicate, StreamRole role)
        : seed_(seed), hi_(static_cast<uint32_t>(role.id)),
          hi2_(static_cast<uint32_t>(replicate & 0xFFFFFFFFu) ^
               static_cast<uint32_t>((replicate >> 32) * 0x9E3779B9u)),
          block_(0), have_spare_(false), spare_(0) {}

    uint64_t next_u64() {
        const auto b = detail::philox4x32_10(
            static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
            hi_, hi2_, static_cast<uint32_t>(seed_), static_cast<uint32_t>(seed_ >> 32));
        ++block_;
        spare_ = (static_cast<uint64_t>(b.w[2]) << 32) | b.w[3];
        have_spare_ = true;
        return (static_cast<uint64_t>(b.w[0]) << 32) | b.w[1];
    }

    // uniform on the open interval (0,1)
    double next_uniform() {
        const uint64_t u = have_spare_ ? take_spare() : next_u64();
        return (static_cast<double>(u >> 12) + 0.5) * 0x1p-52;
    }

    double next_normal() { return detail::inverse_normal_cdf(next_uniform()); }

    // unbiased draw from {0, ..., n-1} (Lemire reduction)
    uint32_t next_below(uint32_t n) {
        if (n == 0) throw std::invalid_argument("next_below: n == 0");
        const uint32_t reject_below = (0u - n) % n;
        while (true) {
            const uint64_t x = have_spare_ ? take_spare() : next_u64();
            const uint64_t m = static_cast<uint64_t>(static_cast<uint32_t>(x)) * n;
            if (static_cast<uint32_t>(m) >= reject_below) return static_cast<uint32_t>(m >> 32);
        }
    }

  private:
    uint64_t take_spare() {
        have_spare_ = false;
        return spare_;
    }

    uint64_t seed_ = 0;
    uint32_t hi_ = 0;   // role word of the counter
    uint32_t hi2_ = 0;  // replicate word of the counter
    uint64_t block_ = 0;
    bool have_spare_ = false;
    uint64_t spare_ = 0;
};

// Factory bound to (seed, replicate); hands out role streams.
struct ReplicateStreams {
    uint64_t seed = 0;
    uint64_t replicate = 0;

    RngStream get(StreamRole role) const { return RngStream(seed, replicate, role); }
    RngStream inner() const { return get(StreamRole::inner()); }
    RngStream copy_select() const { return get(StreamRole::copy_select()); }
    RngStream terminal() const { return get(StreamRole::terminal()); }
    RngStream outer(uint32_t copy, uint32_t component = 0) const {
        return get(StreamRole::outer(copy, component));
    }
};

}  // namespace btbm
