#include "msgcodec/vocab.hpp"

#include <cstdio>

namespace netdt::codec {

TokenId Vocabulary::add(const std::string& token) {
  TokenId id = static_cast<TokenId>(tokens_.size());
  tokens_.push_back(token);
  index_.emplace(token, id);
  return id;
}

Vocabulary::Vocabulary() {
  add("PAD");
  add("BOS");
  add("EOS");
  add("SEP");
  first_interface_ = add("N1");
  add("N2");
  add("N4");
  first_direction_ = add("toCP");
  add("fromCP");
  first_message_type_ = static_cast<TokenId>(tokens_.size());
  for (int t = 0; t < kNumMessageTypes; ++t)
    add(message_type_name(static_cast<MessageType>(t)));
  first_ie_key_ = static_cast<TokenId>(tokens_.size());
  for (int k = 0; k < kNumIeKeys; ++k)
    add(ie_key_name(static_cast<IeKey>(k)));

  // Value blocks. UeId and SessionId share the binned id pool.
  TokenId id_base = static_cast<TokenId>(tokens_.size());
  for (std::int64_t v = 0; v < kIdPool; ++v) add("id" + std::to_string(v));
  TokenId slice_base = static_cast<TokenId>(tokens_.size());
  for (std::int64_t v = 0; v < kNumSliceIds; ++v)
    add("slice" + std::to_string(v));
  TokenId qos_base = static_cast<TokenId>(tokens_.size());
  for (std::int64_t v = 0; v < kNumQosProfiles; ++v)
    add("qos" + std::to_string(v));
  TokenId cause_base = static_cast<TokenId>(tokens_.size());
  for (std::int64_t v = 0; v < kNumCauses; ++v)
    add("cause" + std::to_string(v));
  TokenId grant_base = static_cast<TokenId>(tokens_.size());
  for (std::int64_t v = 0; v < kNumGrants; ++v)
    add("grant" + std::to_string(v));

  value_base_ = {id_base, id_base, slice_base, qos_base, cause_base, grant_base};

  // FNV-1a over the token list; identifies the vocabulary build.
  std::uint64_t h = 1469598103934665603ULL;
  for (const std::string& tok : tokens_) {
    for (char c : tok) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  digest_ = buf;
}

TokenId Vocabulary::id_of(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) throw UnknownKey("token not in vocabulary: " + token);
  return it->second;
}

const std::string& Vocabulary::token_of(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size())
    throw MalformedSequence("token id out of range: " + std::to_string(id));
  return tokens_[static_cast<std::size_t>(id)];
}

TokenId Vocabulary::interface_token(Interface i) const {
  return first_interface_ + static_cast<TokenId>(i);
}
TokenId Vocabulary::direction_token(Direction d) const {
  return first_direction_ + static_cast<TokenId>(d);
}
TokenId Vocabulary::message_type_token(MessageType t) const {
  return first_message_type_ + static_cast<TokenId>(t);
}
TokenId Vocabulary::ie_key_token(IeKey k) const {
  return first_ie_key_ + static_cast<TokenId>(k);
}

TokenId Vocabulary::ie_value_token(IeKey k, std::int64_t value) const {
  if (value < 0 || value >= ie_value_bound(k))
    throw UnknownKey("IE value out of vocabulary range for " +
                     std::string(ie_key_name(k)) + ": " + std::to_string(value));
  return value_base_[static_cast<std::size_t>(k)] + static_cast<TokenId>(value);
}

bool Vocabulary::is_interface(TokenId id) const {
  return id >= first_interface_ && id < first_interface_ + 3;
}
bool Vocabulary::is_direction(TokenId id) const {
  return id >= first_direction_ && id < first_direction_ + 2;
}
bool Vocabulary::is_message_type(TokenId id) const {
  return id >= first_message_type_ && id < first_message_type_ + kNumMessageTypes;
}
bool Vocabulary::is_ie_key(TokenId id) const {
  return id >= first_ie_key_ && id < first_ie_key_ + kNumIeKeys;
}

Interface Vocabulary::interface_at(TokenId id) const {
  if (!is_interface(id)) throw MalformedSequence("expected interface token");
  return static_cast<Interface>(id - first_interface_);
}
Direction Vocabulary::direction_at(TokenId id) const {
  if (!is_direction(id)) throw MalformedSequence("expected direction token");
  return static_cast<Direction>(id - first_direction_);
}
MessageType Vocabulary::message_type_at(TokenId id) const {
  if (!is_message_type(id)) throw MalformedSequence("expected message type token");
  return static_cast<MessageType>(id - first_message_type_);
}
IeKey Vocabulary::ie_key_at(TokenId id) const {
  if (!is_ie_key(id)) throw MalformedSequence("expected IE key token");
  return static_cast<IeKey>(id - first_ie_key_);
}

std::int64_t Vocabulary::ie_value_at(IeKey key, TokenId id) const {
  TokenId base = value_base_[static_cast<std::size_t>(key)];
  std::int64_t v = static_cast<std::int64_t>(id) - base;
  if (v < 0 || v >= ie_value_bound(key))
    throw MalformedSequence("token is not a value of " +
                            std::string(ie_key_name(key)));
  return v;
}

const Vocabulary& vocabulary() {
  static const Vocabulary vocab;
  return vocab;
}

std::vector<TokenId> encode_message(const SignalingMessage& msg,
                                    const Vocabulary& vocab) {
  validate_message(msg);
  std::vector<TokenId> out;
  out.reserve(4 + 2 * msg.ies.size());
  out.push_back(vocab.interface_token(msg.interface));
  out.push_back(vocab.direction_token(msg.direction));
  out.push_back(vocab.message_type_token(msg.msg_type));
  for (const InformationElement& ie : msg.ies) {
    out.push_back(vocab.ie_key_token(ie.key));
    out.push_back(vocab.ie_value_token(ie.key, ie.value));
  }
  out.push_back(vocab.sep());
  return out;
}

SignalingMessage decode_message(const std::vector<TokenId>& tokens,
                                const Vocabulary& vocab) {
  if (tokens.size() < 4) throw MalformedSequence("sequence too short");
  std::size_t pos = 0;
  SignalingMessage msg;
  msg.interface = vocab.interface_at(tokens[pos++]);
  msg.direction = vocab.direction_at(tokens[pos++]);
  msg.msg_type = vocab.message_type_at(tokens[pos++]);
  while (pos < tokens.size() && tokens[pos] != vocab.sep()) {
    if (!vocab.is_ie_key(tokens[pos]))
      throw MalformedSequence("expected IE key or SEP at position " +
                              std::to_string(pos));
    IeKey key = vocab.ie_key_at(tokens[pos++]);
    if (pos >= tokens.size()) throw MalformedSequence("truncated IE pair");
    std::int64_t value = vocab.ie_value_at(key, tokens[pos++]);
    msg.ies.push_back({key, value});
  }
  if (pos >= tokens.size()) throw MalformedSequence("missing SEP terminator");
  if (pos + 1 != tokens.size())
    throw MalformedSequence("trailing tokens after SEP");
  if (msg.has_ie(IeKey::UeId)) msg.ue_id = msg.ie_value(IeKey::UeId);
  validate_message(msg);  // rejects wrong order / wrong IE sets
  return msg;
}

}  // namespace netdt::codec
