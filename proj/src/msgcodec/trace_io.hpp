#pragma once

#include <string>
#include <vector>

#include "msgcodec/dataset.hpp"

namespace netdt::codec {

// Line format, one message per line, fields in canonical order:
//   <timestamp> <interface> <direction> <msg_type> <ue_id> <Key>=<value>...
// Header lines start with '#' and carry the format version and the source
// config digest, so traces are diffable and self-describing.
void save_trace(const MessageTrace& trace, const std::string& path);
MessageTrace load_trace(const std::string& path);

// Dataset files are line-delimited token-id lists: "h h h ...|t t t ..." per
// sample.
void save_message_dataset(const std::vector<DialogueSample>& dataset,
                          std::int32_t context_length,
                          const Vocabulary& vocab, const std::string& path);
std::vector<DialogueSample> load_message_dataset(const std::string& path,
                                                 const Vocabulary& vocab);

// One decision per line: 12 state features then the action id.
void save_policy_dataset(const std::vector<StateActionSample>& dataset,
                         const CodecConfig& config, const std::string& path);
std::vector<StateActionSample> load_policy_dataset(const std::string& path);

// Trajectory records, one decision per line:
//   <clock> <admit:i|defer> <reward> <12 state features>
// The state features are pre-projected with the given CodecConfig so the file
// feeds build-datasets directly.
void save_trajectory(const sim::Trajectory& trajectory,
                     const CodecConfig& config, const std::string& source_digest,
                     const std::string& path);

}  // namespace netdt::codec
