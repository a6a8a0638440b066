#include "psearch/block_config.hpp"

#include "psearch/errors.hpp"

namespace psearch {

BlockConfig::BlockConfig(std::uint64_t n_addresses, std::uint64_t n_blocks, std::uint64_t target)
    : n_(n_addresses), k_(n_blocks), target_(target) {
  if (n_ == 0) throw InvalidInstance("N must be positive");
  if (k_ == 0 || k_ > n_)
    throw InvalidInstance("K must satisfy 1 <= K <= N (got K=" + std::to_string(k_) +
                          ", N=" + std::to_string(n_) + ")");
  if (n_ % k_ != 0)
    throw InvalidInstance("K=" + std::to_string(k_) + " does not divide N=" + std::to_string(n_));
  if (target_ >= n_)
    throw InvalidInstance("target " + std::to_string(target_) + " outside [0, " +
                          std::to_string(n_) + ")");
}

std::string to_string(const BlockConfig& cfg) {
  return "N=" + std::to_string(cfg.n_addresses()) + " K=" + std::to_string(cfg.n_blocks()) +
         " t=" + std::to_string(cfg.target());
}

}  // namespace psearch
