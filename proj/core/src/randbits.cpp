#include "sketchbench/randbits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace sketchbench {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint32_t ceil_log2(std::uint64_t n) {
    return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

}  // namespace

BitSource::BitSource(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
    key_ = mix64(mix64(seed + kGolden) ^ mix64(stream * 0xD1B54A32D192ED03ull + 0x8BB84B93962EACC9ull));
}

BitSource::BitSource(std::uint64_t seed, std::uint64_t key, int) : seed_(seed), key_(key) {}

BitSource BitSource::child(std::uint64_t stream_id) const {
    return BitSource(seed_, mix64(key_ ^ mix64(stream_id * 0xD1B54A32D192ED03ull + 0x2545F4914F6CDD1Dull)), 0);
}

std::uint64_t BitSource::next_word() {
    ++word_index_;
    return mix64(key_ + word_index_ * kGolden);
}

std::uint64_t BitSource::draw_bits(int k) {
    if (k < 1 || k > 64) throw ParamError("draw_bits: k must be in [1, 64]");
    std::uint64_t out = 0;
    int got = 0;
    while (got < k) {
        if (buffered_ == 0) {
            buffer_ = next_word();
            buffered_ = 64;
        }
        const int take = std::min(k - got, buffered_);
        const std::uint64_t mask = take == 64 ? ~0ull : ((1ull << take) - 1);
        out |= (buffer_ & mask) << got;
        buffer_ = take == 64 ? 0 : (buffer_ >> take);
        buffered_ -= take;
        got += take;
    }
    bit_counter_ += static_cast<std::uint64_t>(k);
    return out;
}

std::uint64_t draw_bits(BitSource& src, int k) { return src.draw_bits(k); }

std::size_t uniform_index(BitSource& src, std::size_t n) {
    if (n < 1) throw ParamError("uniform_index: n must be >= 1");
    if (n == 1) return 0;
    std::uint64_t v = 1, c = 0;
    for (;;) {
        v <<= 1;
        c = (c << 1) | src.draw_bits(1);
        if (v >= n) {
            if (c < n) return static_cast<std::size_t>(c);
            v -= n;
            c -= n;
        }
    }
}

PairwiseSignVector pairwise_signs(BitSource& src, std::size_t m) {
    if (m < 1) throw ParamError("pairwise_signs: m must be >= 1");
    PairwiseSignVector out;
    out.field_width = std::max<std::uint32_t>(1, ceil_log2(m));
    out.a = src.draw_bits(static_cast<int>(out.field_width));
    out.b = src.draw_bits(static_cast<int>(out.field_width));
    out.signs.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t h = gf2::multiply(out.a, static_cast<std::uint64_t>(i), out.field_width) ^ out.b;
        out.signs[i] = static_cast<std::int8_t>((h & 1) ? 1 : -1);
    }
    return out;
}

std::size_t categorical_index(BitSource& src, std::span<const double> weights) {
    CategoricalSampler sampler(weights);
    return sampler.draw(src);
}

double gaussian(BitSource& src) {
    const std::uint64_t w1 = src.draw_bits(64);
    const std::uint64_t w2 = src.draw_bits(64);
    const double u1 = static_cast<double>((w1 >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(w2 >> 11) * 0x1.0p-53;       // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CategoricalSampler::CategoricalSampler(std::span<const double> weights) {
    if (weights.empty()) throw ParamError("categorical: empty weight vector");
    cumulative_.resize(weights.size());
    double acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!(w >= 0)) throw ParamError("categorical: weights must be nonnegative and finite");
        acc += w;
        cumulative_[i] = acc;
    }
    total_ = acc;
    if (!(total_ > 0)) throw ParamError("categorical: all weights are zero");
}

std::size_t CategoricalSampler::draw(BitSource& src) const {
    const std::uint64_t w = src.draw_bits(64);
    const double x = static_cast<double>(w >> 11) * 0x1.0p-53 * total_;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    if (it == cumulative_.end()) --it;  // x rounded up to total
    std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
    // Guard against landing on an empty (zero-weight) slot via exact ties.
    while (idx > 0 && cumulative_[idx] == cumulative_[idx - 1]) --idx;
    return idx;
}

namespace gf2 {

// Verified irreducible over GF(2); lowest-weight, then lexicographically
// smallest exponent set. kIrreduciblePoly[w] holds the coefficients of
// x^{w-1}..x^0; the leading x^w term is implicit.
const std::uint64_t kIrreduciblePoly[33] = {
    0,
    0x1,  0x3,  0x3,  0x3,  0x5,  0x3,  0x3,  0x87,
    0x3,  0x9,  0x5,  0x9,  0x27, 0x21, 0x3,  0x47,
    0x9,  0x9,  0x27, 0x9,  0x5,  0x3,  0x21, 0x87,
    0x9,  0x47, 0x27, 0x3,  0x5,  0x3,  0x9,  0x400007,
};

std::uint64_t multiply(std::uint64_t a, std::uint64_t b, std::uint32_t width) {
    if (width < 1 || width > 32) throw ParamError("gf2::multiply: width must be in [1, 32]");
    // Carry-less product; operands have < 32 bits so it fits in 64 bits.
    std::uint64_t prod = 0;
    while (b) {
        if (b & 1) prod ^= a;
        a <<= 1;
        b >>= 1;
    }
    const std::uint64_t poly = kIrreduciblePoly[width] | (1ull << width);
    for (int bit = 2 * static_cast<int>(width) - 2; bit >= static_cast<int>(width); --bit) {
        if ((prod >> bit) & 1) prod ^= poly << (bit - static_cast<int>(width));
    }
    return prod;
}

}  // namespace gf2

}  // namespace sketchbench
