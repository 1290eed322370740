#include "graphoid/generators.hpp"

#include <numeric>

#include "graphoid/errors.hpp"

namespace graphoid {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection sampling; threshold = 2^64 mod bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SeededRng::uniform_real() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform_real(double lo, double hi) {
  return lo + (hi - lo) * uniform_real();
}

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "spb-random") return GeneratorKind::kSpbRandom;
  if (name == "spb-block-product") return GeneratorKind::kSpbBlockProduct;
  if (name == "gaussian-random") return GeneratorKind::kGaussianRandom;
  if (name == "gaussian-block") return GeneratorKind::kGaussianBlock;
  if (name == "named-example") return GeneratorKind::kNamedExample;
  throw InputError("unknown generator kind: " + name);
}

const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::kSpbRandom: return "spb-random";
    case GeneratorKind::kSpbBlockProduct: return "spb-block-product";
    case GeneratorKind::kGaussianRandom: return "gaussian-random";
    case GeneratorKind::kGaussianBlock: return "gaussian-block";
    case GeneratorKind::kNamedExample: return "named-example";
  }
  return "?";
}

namespace {

std::vector<std::string> letter_names(int n) {
  if (n > 26) throw InputError("letter-named universes support up to 26 variables");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

std::vector<std::string> x_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<TabularVariable> binary_vars(const std::vector<std::string>& names) {
  std::vector<TabularVariable> vars;
  for (const auto& n : names) vars.push_back({n, {"0", "1"}});
  return vars;
}

void check_blocks(int n, const std::vector<int>& blocks) {
  if (blocks.empty()) throw InputError("block list is empty");
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw InputError("block sizes must be positive");
    total += b;
  }
  if (total != n)
    throw InputError("block sizes sum to " + std::to_string(total) +
                     ", expected " + std::to_string(n));
}

}  // namespace

TabularDistribution spb_random(int n, std::uint64_t seed, int weight_max) {
  if (n < 1) throw InputError("need at least one variable");
  if (weight_max < 1) throw InputError("weight_max must be >= 1");
  SeededRng rng(seed);
  const std::size_t count = std::size_t{1} << n;
  std::vector<BigInt> weights(count);
  BigInt total = 0;
  for (auto& w : weights) {
    w = rng.uniform_int(1, weight_max);
    total += w;
  }
  std::vector<Rational> cells;
  cells.reserve(count);
  for (const auto& w : weights) cells.emplace_back(w, total);
  return TabularDistribution(binary_vars(letter_names(n)), std::move(cells));
}

TabularDistribution spb_block_product(int n, std::uint64_t seed,
                                      const std::vector<int>& blocks,
                                      int weight_max) {
  if (n < 1) throw InputError("need at least one variable");
  check_blocks(n, blocks);
  SeededRng rng(seed);

  // Per-block weight tables drawn sequentially from one stream.
  std::vector<std::vector<Rational>> factors;
  for (int b : blocks) {
    const std::size_t count = std::size_t{1} << b;
    std::vector<BigInt> weights(count);
    BigInt total = 0;
    for (auto& w : weights) {
      w = rng.uniform_int(1, weight_max);
      total += w;
    }
    std::vector<Rational> f;
    f.reserve(count);
    for (const auto& w : weights) f.emplace_back(w, total);
    factors.push_back(std::move(f));
  }

  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> cells(count, Rational(1));
  for (std::size_t idx = 0; idx < count; ++idx) {
    int offset = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const int b = blocks[k];
      // Value bits of this block inside the full mixed-radix index
      // (variable 0 is the most significant bit).
      const std::size_t block_idx =
          (idx >> (n - offset - b)) & ((std::size_t{1} << b) - 1);
      cells[idx] *= factors[k][block_idx];
      offset += b;
    }
  }
  return TabularDistribution(binary_vars(letter_names(n)), std::move(cells));
}

GaussianModel gaussian_random(int n, std::uint64_t seed, double tolerance) {
  if (n < 1) throw InputError("need at least one variable");
  SeededRng rng(seed);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.uniform_real(-1.0, 1.0);
  Eigen::VectorXd mean(n);
  for (int i = 0; i < n; ++i) mean(i) = rng.uniform_real(-1.0, 1.0);
  const Eigen::MatrixXd cov =
      a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
  return GaussianModel(Universe(x_names(n)), mean, cov, tolerance);
}

GaussianModel gaussian_block(int n, std::uint64_t seed,
                             const std::vector<int>& blocks, double tolerance) {
  if (n < 1) throw InputError("need at least one variable");
  check_blocks(n, blocks);
  SeededRng rng(seed);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
  int offset = 0;
  for (int b : blocks) {
    Eigen::MatrixXd a(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) a(i, j) = rng.uniform_real(-1.0, 1.0);
    cov.block(offset, offset, b, b) =
        a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(b, b);
    offset += b;
  }
  Eigen::VectorXd mean(n);
  for (int i = 0; i < n; ++i) mean(i) = rng.uniform_real(-1.0, 1.0);
  return GaussianModel(Universe(x_names(n)), mean, cov, tolerance);
}

TabularDistribution random_positive_table(
    const std::vector<TabularVariable>& vars, std::uint64_t seed,
    int weight_max) {
  if (vars.empty()) throw InputError("need at least one variable");
  if (weight_max < 1) throw InputError("weight_max must be >= 1");
  SeededRng rng(seed);
  std::size_t count = 1;
  for (const auto& v : vars) count *= v.domain.size();
  std::vector<BigInt> weights(count);
  BigInt total = 0;
  for (auto& w : weights) {
    w = rng.uniform_int(1, weight_max);
    total += w;
  }
  std::vector<Rational> cells;
  cells.reserve(count);
  for (const auto& w : weights) cells.emplace_back(w, total);
  return TabularDistribution(vars, std::move(cells));
}

TabularDistribution parity_distribution() {
  // a, b independent fair bits; c = a xor b. Cells in mixed-radix order
  // over (a, b, c).
  std::vector<Rational> cells(8, Rational(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cells[a * 4 + b * 2 + (a ^ b)] = Rational(1, 4);
  return TabularDistribution(binary_vars({"a", "b", "c"}), std::move(cells));
}

TabularDistribution pair_copy_distribution() {
  // a, b independent fair bits; c copies the pair (a, b).
  std::vector<TabularVariable> vars = binary_vars({"a", "b"});
  vars.push_back({"c", {"00", "01", "10", "11"}});
  std::vector<Rational> cells(16, Rational(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cells[a * 8 + b * 4 + (a * 2 + b)] = Rational(1, 4);
  return TabularDistribution(std::move(vars), std::move(cells));
}

TabularDistribution m1_product_distribution() {
  // Generic product P(a,b) * P(c,d): plants exactly the independencies of a
  // two-block split. Fixed fixture; the seed is internal.
  return spb_block_product(4, 0xA11CEull, {2, 2}, 16);
}

GaussianModel markov_chain_gaussian() {
  Eigen::MatrixXd cov(3, 3);
  cov << 1.0, 0.5, 0.25, 0.5, 1.0, 0.5, 0.25, 0.5, 1.0;
  return GaussianModel(Universe(x_names(3)), Eigen::VectorXd::Zero(3), cov);
}

GeneratedModel generate(GeneratorKind kind, int n, std::uint64_t seed,
                        const GeneratorParams& params) {
  switch (kind) {
    case GeneratorKind::kSpbRandom:
      return spb_random(n, seed, params.weight_max);
    case GeneratorKind::kSpbBlockProduct:
      return spb_block_product(n, seed, params.blocks, params.weight_max);
    case GeneratorKind::kGaussianRandom:
      return gaussian_random(n, seed, params.tolerance);
    case GeneratorKind::kGaussianBlock:
      return gaussian_block(n, seed, params.blocks, params.tolerance);
    case GeneratorKind::kNamedExample:
      if (params.name == "parity") return parity_distribution();
      if (params.name == "pair-copy") return pair_copy_distribution();
      if (params.name == "m1-product") return m1_product_distribution();
      if (params.name == "markov-chain") return markov_chain_gaussian();
      throw InputError("unknown named example: " + params.name);
  }
  throw InputError("unknown generator kind");
}

}  // namespace graphoid
