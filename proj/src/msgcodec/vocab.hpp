#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "common/errors.hpp"
#include "msgcodec/schema.hpp"

namespace netdt::codec {

using TokenId = std::int32_t;

class UnknownKey : public RuntimeError {
 public:
  explicit UnknownKey(const std::string& what) : RuntimeError(what) {}
};

// Closed token set derived entirely from the message schema: reserved tokens,
// interfaces, directions, message types, IE keys, and every legal IE value.
// Ids are dense from 0; the bijection never grows from data.
class Vocabulary {
 public:
  Vocabulary();

  TokenId pad() const { return 0; }
  TokenId bos() const { return 1; }
  TokenId eos() const { return 2; }
  TokenId sep() const { return 3; }

  std::size_t size() const { return tokens_.size(); }

  TokenId id_of(const std::string& token) const;  // throws UnknownKey
  const std::string& token_of(TokenId id) const;  // throws MalformedSequence

  TokenId interface_token(Interface i) const;
  TokenId direction_token(Direction d) const;
  TokenId message_type_token(MessageType t) const;
  TokenId ie_key_token(IeKey k) const;
  TokenId ie_value_token(IeKey k, std::int64_t value) const;

  bool is_interface(TokenId id) const;
  bool is_direction(TokenId id) const;
  bool is_message_type(TokenId id) const;
  bool is_ie_key(TokenId id) const;

  Interface interface_at(TokenId id) const;
  Direction direction_at(TokenId id) const;
  MessageType message_type_at(TokenId id) const;
  IeKey ie_key_at(TokenId id) const;
  // Value for the given key, throws MalformedSequence if the token is not in
  // that key's value range.
  std::int64_t ie_value_at(IeKey key, TokenId id) const;

  // Stable content digest (hex) used to pin dataset/model compatibility.
  const std::string& digest() const { return digest_; }

 private:
  TokenId add(const std::string& token);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
  TokenId first_interface_ = 0;
  TokenId first_direction_ = 0;
  TokenId first_message_type_ = 0;
  TokenId first_ie_key_ = 0;
  // Per IE-key base token id for that key's value domain. UeId and SessionId
  // share the id-value block.
  std::vector<TokenId> value_base_;
  std::string digest_;
};

// The schema-wide singleton. The vocabulary carries no mutable state.
const Vocabulary& vocabulary();

// Canonical token sequence for one message: interface, direction, type, then
// (key, value) per IE in canonical order, terminated by SEP. Timestamps are
// not encoded. Injective over schema-valid messages modulo timestamp.
std::vector<TokenId> encode_message(const SignalingMessage& msg,
                                    const Vocabulary& vocab);

// Strict inverse of encode_message on its image; any deviation from the
// canonical order throws MalformedSequence (schema-invalid content throws
// SchemaViolation). The decoded timestamp is zero.
SignalingMessage decode_message(const std::vector<TokenId>& tokens,
                                const Vocabulary& vocab);

}  // namespace netdt::codec
