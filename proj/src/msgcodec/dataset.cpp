#include "msgcodec/dataset.hpp"

#include <algorithm>

namespace netdt::codec {

void CodecConfig::validate() const {
  if (context_length < 16) throw ConfigError("context_length must be >= 16");
  if (queue_slots < 1) throw ConfigError("queue_slots must be >= 1");
}

std::vector<DialogueSample> build_message_dataset(const MessageTrace& trace,
                                                  std::int32_t context_length,
                                                  const Vocabulary& vocab) {
  std::vector<DialogueSample> out;
  std::vector<TokenId> stream;
  stream.push_back(vocab.bos());
  for (const SignalingMessage& msg : trace.messages) {
    std::vector<TokenId> toks = encode_message(msg, vocab);
    if (msg.direction == Direction::FromControlPlane) {
      DialogueSample sample;
      std::size_t take = std::min<std::size_t>(
          stream.size(), static_cast<std::size_t>(context_length));
      sample.history.assign(stream.end() - static_cast<std::ptrdiff_t>(take),
                            stream.end());
      sample.target = toks;
      out.push_back(std::move(sample));
    }
    stream.insert(stream.end(), toks.begin(), toks.end());
  }
  return out;
}

std::array<double, kStateDim> state_to_vector(const sim::AdmissionState& state,
                                              const CodecConfig& config) {
  std::array<double, kStateDim> v{};
  auto ratio = [](std::int64_t avail, std::int64_t cap) {
    return cap > 0 ? static_cast<double>(avail) / static_cast<double>(cap) : 1.0;
  };
  v[0] = ratio(state.available.radio, state.capacity.radio);
  v[1] = ratio(state.available.compute, state.capacity.compute);
  v[2] = ratio(state.available.storage, state.capacity.storage);

  std::array<int, sim::kNumSlices> counts{};
  std::array<const sim::ServiceRequest*, sim::kNumSlices> oldest{};
  for (const sim::ServiceRequest& req : state.pending) {
    std::size_t s = static_cast<std::size_t>(req.kind);
    counts[s] += 1;
    if (!oldest[s] || req.arrival_time < oldest[s]->arrival_time) oldest[s] = &req;
  }
  for (std::size_t s = 0; s < sim::kNumSlices; ++s) {
    v[3 + s] = std::min(1.0, static_cast<double>(counts[s]) /
                                 static_cast<double>(config.queue_slots));
    if (oldest[s]) {
      double window = oldest[s]->deadline - oldest[s]->arrival_time;
      double remaining = oldest[s]->deadline - state.clock;
      v[7 + s] = window > 0.0 ? std::clamp(remaining / window, 0.0, 1.0) : 0.0;
    }
  }
  v[11] = state.max_concurrent_ues > 0
              ? std::min(1.0, static_cast<double>(state.active.size()) /
                                  static_cast<double>(state.max_concurrent_ues))
              : 0.0;
  return v;
}

std::int32_t action_to_id(const sim::AdmissionAction& action,
                          const CodecConfig& config) {
  if (action.is_defer()) return config.queue_slots;
  return static_cast<std::int32_t>(
      std::min<std::size_t>(action.index(),
                            static_cast<std::size_t>(config.queue_slots - 1)));
}

sim::AdmissionAction id_to_action(std::int32_t action_id,
                                  const CodecConfig& config) {
  if (action_id < 0 || action_id > config.queue_slots)
    throw ConfigError("action id out of range: " + std::to_string(action_id));
  if (action_id == config.queue_slots) return sim::AdmissionAction::defer();
  return sim::AdmissionAction::admit(static_cast<std::size_t>(action_id));
}

std::vector<StateActionSample> build_policy_dataset(const sim::Trajectory& trajectory,
                                                    const CodecConfig& config) {
  std::vector<StateActionSample> out;
  out.reserve(trajectory.steps.size());
  for (const sim::TrajectoryStep& step : trajectory.steps) {
    StateActionSample sample;
    sample.state_vec = state_to_vector(step.state, config);
    sample.action_id = action_to_id(step.action, config);
    out.push_back(sample);
  }
  return out;
}

}  // namespace netdt::codec
