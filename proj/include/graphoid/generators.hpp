#ifndef GRAPHOID_GENERATORS_HPP
#define GRAPHOID_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "graphoid/gaussian.hpp"
#include "graphoid/tabular.hpp"

namespace graphoid {

// Scheme "mt19937_64/v1": raw mt19937_64 draws with hand-rolled rejection
// sampling for bounded integers and 53-bit-mantissa doubles. The standard
// distributions are avoided because their outputs are not specified
// bit-for-bit across standard libraries.
inline constexpr const char* kRngScheme = "mt19937_64/v1";

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform_real();
  // Uniform in [lo, hi).
  double uniform_real(double lo, double hi);

  // Deterministic Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind {
  kSpbRandom,        // strictly-positive binary, iid integer cell weights
  kSpbBlockProduct,  // product of independent spb blocks
  kGaussianRandom,   // covariance A*A^T + 0.1*I
  kGaussianBlock,    // block-diagonal covariance
  kNamedExample,     // parity | pair-copy | m1-product | markov-chain
};

GeneratorKind parse_generator_kind(const std::string& name);
const char* generator_kind_name(GeneratorKind k);

struct GeneratorParams {
  int weight_max = 16;           // spb cell weights drawn from [1, weight_max]
  std::vector<int> blocks;       // consecutive block sizes; must sum to n
  std::string name;              // named-example selector
  double tolerance = kDefaultGaussianTolerance;
};

using GeneratedModel = std::variant<TabularDistribution, GaussianModel>;

// Deterministic for fixed (kind, n, seed, params). Variable names are
// a, b, c, ... for tabular models and x1..xn for Gaussian models.
GeneratedModel generate(GeneratorKind kind, int n, std::uint64_t seed,
                        const GeneratorParams& params = {});

// Direct constructors used by generate() and by test fixtures.
TabularDistribution spb_random(int n, std::uint64_t seed, int weight_max = 16);
TabularDistribution spb_block_product(int n, std::uint64_t seed,
                                      const std::vector<int>& blocks,
                                      int weight_max = 16);
GaussianModel gaussian_random(int n, std::uint64_t seed,
                              double tolerance = kDefaultGaussianTolerance);
GaussianModel gaussian_block(int n, std::uint64_t seed,
                             const std::vector<int>& blocks,
                             double tolerance = kDefaultGaussianTolerance);

// Strictly positive table with arbitrary finite domains; weights uniform in
// [1, weight_max]. Used by the similarity-network fixtures.
TabularDistribution random_positive_table(
    const std::vector<TabularVariable>& vars, std::uint64_t seed,
    int weight_max = 16);

// Fixed fixtures.
TabularDistribution parity_distribution();     // a, b fair bits; c = a xor b
TabularDistribution pair_copy_distribution();  // c copies the pair (a, b)
TabularDistribution m1_product_distribution(); // P(a,b) * P(c,d), generic
GaussianModel markov_chain_gaussian();         // x1 - x2 - x3 chain

}  // namespace graphoid

#endif  // GRAPHOID_GENERATORS_HPP
