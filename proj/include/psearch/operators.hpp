#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace psearch {

enum class OperatorTag {
  oracle,            // I_t: sign flip on the target, one query
  global_diffusion,  // inversion about the mean over all N addresses
  block_diffusion,   // inversion about the mean inside each block
  step3,             // move the target to ancilla branch 1, then diffuse branch 0; one query
};

std::string_view to_string(OperatorTag tag);
OperatorTag parse_operator(std::string_view name);

bool is_query(OperatorTag tag);

/// Ordered operator sequence. step3 may appear at most once and only last.
class PipelineScript {
 public:
  PipelineScript() = default;
  /// Throws InvalidInstance if step3 is misplaced.
  explicit PipelineScript(std::vector<OperatorTag> ops);

  const std::vector<OperatorTag>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  std::size_t query_count() const;

  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

 private:
  std::vector<OperatorTag> ops_;
};

/// `steps` Grover iterations: (oracle, global_diffusion) repeated.
PipelineScript grover_script(std::size_t steps);

/// The three-step partial search: l1 global steps, l2 blockwise steps, step3.
PipelineScript partial_search_script(std::size_t l1, std::size_t l2);

/// The twelve-item walkthrough: oracle, block_diffusion, oracle, global_diffusion.
PipelineScript fig1_script();

}  // namespace psearch
