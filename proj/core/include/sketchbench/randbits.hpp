#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sketchbench/errors.hpp"

namespace sketchbench {

/// Seeded counter-based random bit source with exact bit accounting.
///
/// Every sampling operation consumes a declared number of uniform bits, and the
/// counter tracks exactly that. Bits are served from 64-bit words of a
/// splitmix-style counter generator keyed by (seed, stream); leftover bits of a
/// word are buffered and served to the next request, so the exact counter can
/// be smaller than 64 * words_drawn() (the conservative word-level count).
///
/// A BitSource is single-owner. Parallel construction derives child sources
/// with distinct stream ids instead of sharing one counter.
class BitSource {
  public:
    explicit BitSource(std::uint64_t seed, std::uint64_t stream = 0);

    /// Derive an independent child stream. Costs no random bits.
    BitSource child(std::uint64_t stream_id) const;

    /// Draw k uniform bits, 1 <= k <= 64, packed in the low bits of the result.
    std::uint64_t draw_bits(int k);

    std::uint64_t bits_used() const { return bit_counter_; }
    std::uint64_t words_drawn() const { return word_index_; }
    std::uint64_t seed() const { return seed_; }

  private:
    BitSource(std::uint64_t seed, std::uint64_t key, int);
    std::uint64_t next_word();

    std::uint64_t seed_ = 0;
    std::uint64_t key_ = 0;
    std::uint64_t word_index_ = 0;
    std::uint64_t bit_counter_ = 0;
    std::uint64_t buffer_ = 0;
    int buffered_ = 0;
};

/// Signs derived from a uniformly random affine map over GF(2^w):
/// sign_i = +-1 from the low bit of (a * x_i + b), x_i the field element for
/// index i. For i != j the pair (sign_i, sign_j) is uniform on {-1,+1}^2, so
/// the signs are pairwise independent; generation costs 2w bits total.
struct PairwiseSignVector {
    std::uint32_t field_width = 0;  // w = max(1, ceil(log2 m))
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::vector<std::int8_t> signs;  // +-1, length m
};

/// Draw k uniform bits (free-function form of BitSource::draw_bits).
std::uint64_t draw_bits(BitSource& src, int k);

/// Generate m pairwise-uncorrelated signs; consumes 2*max(1, ceil(log2 m)) bits.
PairwiseSignVector pairwise_signs(BitSource& src, std::size_t m);

/// Uniform index in [0, n). Fast-dice-roller rejection sampling: exactly
/// ceil(log2 n) bits when n is a power of two, expected <= ceil(log2 n) + 2
/// bits otherwise.
std::size_t uniform_index(BitSource& src, std::size_t n);

/// One draw from P(j) = weights[j] / sum(weights). Inverse CDF over one 64-bit
/// word: the top 53 bits form u in [0,1), the selected index is the first j
/// with cumsum(weights)[j] > u * total. Zero weights are never selected.
std::size_t categorical_index(BitSource& src, std::span<const double> weights);

/// Standard normal via Box-Muller from two 64-bit uniforms (128 bits).
double gaussian(BitSource& src);

/// Reusable inverse-CDF sampler over a fixed weight vector; each draw consumes
/// one 64-bit word, with the same rounding convention as categorical_index.
class CategoricalSampler {
  public:
    explicit CategoricalSampler(std::span<const double> weights);
    std::size_t draw(BitSource& src) const;
    double total() const { return total_; }

  private:
    std::vector<double> cumulative_;
    double total_ = 0;
};

namespace gf2 {

/// Low-order coefficients of a fixed irreducible polynomial of degree w over
/// GF(2) (the x^w term is implicit), for field widths 1..32.
extern const std::uint64_t kIrreduciblePoly[33];

/// Product in GF(2^w) for w in [1, 32].
std::uint64_t multiply(std::uint64_t a, std::uint64_t b, std::uint32_t width);

}  // namespace gf2

}  // namespace sketchbench
