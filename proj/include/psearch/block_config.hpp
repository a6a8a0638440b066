#pragma once

#include <cstdint>
#include <string>

namespace psearch {

/// Problem instance: N addresses split into K contiguous blocks of N/K, one
/// marked target. Address x = (y, z) with y = x / (N/K) and z = x % (N/K).
class BlockConfig {
 public:
  /// Throws InvalidInstance unless 1 <= K <= N, K | N and target < N.
  BlockConfig(std::uint64_t n_addresses, std::uint64_t n_blocks, std::uint64_t target);

  std::uint64_t n_addresses() const { return n_; }
  std::uint64_t n_blocks() const { return k_; }
  std::uint64_t target() const { return target_; }
  std::uint64_t block_size() const { return n_ / k_; }

  std::uint64_t block_of(std::uint64_t x) const { return x / block_size(); }
  std::uint64_t offset_in_block(std::uint64_t x) const { return x % block_size(); }
  std::uint64_t target_block() const { return block_of(target_); }
  std::uint64_t target_offset() const { return offset_in_block(target_); }

  BlockConfig with_target(std::uint64_t target) const { return {n_, k_, target}; }

  bool operator==(const BlockConfig&) const = default;

 private:
  std::uint64_t n_;
  std::uint64_t k_;
  std::uint64_t target_;
};

std::string to_string(const BlockConfig& cfg);

}  // namespace psearch
