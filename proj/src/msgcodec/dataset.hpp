#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msgcodec/vocab.hpp"
#include "netsim/types.hpp"

namespace netdt::codec {

// Tokenization / feature knobs shared by both twin levels.
struct CodecConfig {
  std::int32_t context_length = 256;  // dialogue history cap, in tokens
  std::int32_t queue_slots = 8;       // pending positions visible to policies

  std::int32_t action_space() const { return queue_slots + 1; }  // + Defer
  void validate() const;
};

inline constexpr int kStateDim = 12;

// One next-message prediction record. history is the globally interleaved
// dialogue prefix (all UEs), already truncated; target is exactly one
// control-plane message's encoding, SEP-terminated.
struct DialogueSample {
  std::vector<TokenId> history;
  std::vector<TokenId> target;
};

struct StateActionSample {
  std::array<double, kStateDim> state_vec{};
  std::int32_t action_id = 0;  // [0, queue_slots]: Admit slot or Defer
};

// One sample per control-plane-emitted message, in trace order.
std::vector<DialogueSample> build_message_dataset(const MessageTrace& trace,
                                                  std::int32_t context_length,
                                                  const Vocabulary& vocab);

// Normalized 12-dim feature vector, every component in [0, 1]:
//   [0..2]  available / capacity per resource
//   [3..6]  per-slice pending count / queue_slots (clamped)
//   [7..10] per-slice oldest-pending remaining lifetime / timeout
//   [11]    active session count / max_concurrent_ues
std::array<double, kStateDim> state_to_vector(const sim::AdmissionState& state,
                                              const CodecConfig& config);

// Maps a decision onto the fixed action space: Admit(i) -> slot i (clamped to
// the last slot when the queue outgrows the window), Defer -> queue_slots.
std::int32_t action_to_id(const sim::AdmissionAction& action,
                          const CodecConfig& config);
sim::AdmissionAction id_to_action(std::int32_t action_id,
                                  const CodecConfig& config);

// One StateActionSample per decision epoch.
std::vector<StateActionSample> build_policy_dataset(const sim::Trajectory& trajectory,
                                                    const CodecConfig& config);

}  // namespace netdt::codec
