#include "psearch/operators.hpp"

#include <algorithm>

#include "psearch/errors.hpp"

namespace psearch {

std::string_view to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::oracle: return "oracle";
    case OperatorTag::global_diffusion: return "global_diffusion";
    case OperatorTag::block_diffusion: return "block_diffusion";
    case OperatorTag::step3: return "step3";
  }
  return "?";
}

OperatorTag parse_operator(std::string_view name) {
  for (auto tag : {OperatorTag::oracle, OperatorTag::global_diffusion,
                   OperatorTag::block_diffusion, OperatorTag::step3}) {
    if (name == to_string(tag)) return tag;
  }
  throw InvalidInstance("unknown operator '" + std::string(name) +
                        "' (expected oracle, global_diffusion, block_diffusion or step3)");
}

bool is_query(OperatorTag tag) { return tag == OperatorTag::oracle || tag == OperatorTag::step3; }

PipelineScript::PipelineScript(std::vector<OperatorTag> ops) : ops_(std::move(ops)) {
  const auto n_step3 = std::count(ops_.begin(), ops_.end(), OperatorTag::step3);
  if (n_step3 > 1) throw InvalidInstance("step3 may appear at most once in a script");
  if (n_step3 == 1 && ops_.back() != OperatorTag::step3)
    throw InvalidInstance("step3 must be the last operator of a script");
}

std::size_t PipelineScript::query_count() const {
  return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), is_query));
}

PipelineScript grover_script(std::size_t steps) {
  std::vector<OperatorTag> ops;
  ops.reserve(2 * steps);
  for (std::size_t i = 0; i < steps; ++i) {
    ops.push_back(OperatorTag::oracle);
    ops.push_back(OperatorTag::global_diffusion);
  }
  return PipelineScript(std::move(ops));
}

PipelineScript partial_search_script(std::size_t l1, std::size_t l2) {
  std::vector<OperatorTag> ops;
  ops.reserve(2 * (l1 + l2) + 1);
  for (std::size_t i = 0; i < l1; ++i) {
    ops.push_back(OperatorTag::oracle);
    ops.push_back(OperatorTag::global_diffusion);
  }
  for (std::size_t i = 0; i < l2; ++i) {
    ops.push_back(OperatorTag::oracle);
    ops.push_back(OperatorTag::block_diffusion);
  }
  ops.push_back(OperatorTag::step3);
  return PipelineScript(std::move(ops));
}

PipelineScript fig1_script() {
  return PipelineScript({OperatorTag::oracle, OperatorTag::block_diffusion, OperatorTag::oracle,
                         OperatorTag::global_diffusion});
}

}  // namespace psearch
