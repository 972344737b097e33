#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "netsim/types.hpp"

namespace netdt::codec {

enum class Interface : std::uint8_t { N1 = 0, N2 = 1, N4 = 2 };

enum class Direction : std::uint8_t {
  ToControlPlane = 0,
  FromControlPlane = 1,
};

enum class MessageType : std::uint8_t {
  RegistrationRequest = 0,
  RegistrationAccept,
  PduSessionEstablishmentRequest,
  N4SessionEstablishmentRequest,
  N4SessionEstablishmentResponse,
  N2ResourceSetupRequest,
  N2ResourceSetupResponse,
  PduSessionEstablishmentAccept,
  PduSessionEstablishmentReject,
  PduSessionReleaseRequest,
  PduSessionReleaseComplete,
};
inline constexpr int kNumMessageTypes = 11;

// Canonical IE ordering inside a message follows this enum.
enum class IeKey : std::uint8_t {
  UeId = 0,
  SessionId,
  SliceId,
  QosProfile,
  Cause,
  ResourceGrant,
};
inline constexpr int kNumIeKeys = 6;

enum class CauseCode : std::int64_t {
  Success = 0,
  InsufficientResources = 1,
};

// Schema-wide value bounds. Integer identities are binned modulo kIdPool so
// the vocabulary stays closed.
inline constexpr std::int64_t kIdPool = 64;
inline constexpr std::int64_t kNumSliceIds = 4;
inline constexpr std::int64_t kNumQosProfiles = 4;
inline constexpr std::int64_t kNumCauses = 2;
inline constexpr std::int64_t kNumGrants = 16;

struct InformationElement {
  IeKey key = IeKey::UeId;
  std::int64_t value = 0;
  bool operator==(const InformationElement&) const = default;
};

struct SignalingMessage {
  double timestamp = 0.0;
  Interface interface = Interface::N1;
  Direction direction = Direction::ToControlPlane;
  MessageType msg_type = MessageType::RegistrationRequest;
  std::int64_t ue_id = 0;  // mirrors the UeId IE
  std::vector<InformationElement> ies;  // canonical key order

  bool operator==(const SignalingMessage& o) const {
    return timestamp == o.timestamp && interface == o.interface &&
           direction == o.direction && msg_type == o.msg_type &&
           ue_id == o.ue_id && ies == o.ies;
  }

  std::int64_t ie_value(IeKey key) const;  // throws SchemaViolation if absent
  bool has_ie(IeKey key) const;
};

struct MessageTrace {
  std::vector<SignalingMessage> messages;  // non-decreasing timestamps
  std::string source_digest;               // digest of the producing config
};

const char* interface_name(Interface i);
const char* direction_name(Direction d);
const char* message_type_name(MessageType t);
const char* ie_key_name(IeKey k);
Interface interface_from_name(const std::string& s);
Direction direction_from_name(const std::string& s);
MessageType message_type_from_name(const std::string& s);
IeKey ie_key_from_name(const std::string& s);

// Fixed legal (interface, direction) pair for a message type.
Interface interface_of(MessageType t);
Direction direction_of(MessageType t);
// Mandatory IE key set, in canonical order. Messages carry exactly this set.
const std::vector<IeKey>& mandatory_ies(MessageType t);
// Upper bound (exclusive) for a key's value domain.
std::int64_t ie_value_bound(IeKey key);

// Throws SchemaViolation unless the message is schema-valid: legal
// interface/direction pairing, exactly the mandatory IEs in canonical order,
// values in range, and ue_id matching the UeId IE.
void validate_message(const SignalingMessage& msg);

// Throws RuntimeError if timestamps decrease or any message is invalid.
void validate_trace(const MessageTrace& trace);

enum class TemplateKind : std::uint8_t { Accept = 0, RejectTimeout = 1 };

struct TemplateTimes {
  double decision_time = 0.0;  // admission grant or expiry instant
  double release_time = 0.0;   // session teardown (accept path only)
};

// Canonical per-request procedure. The accept path carries 8 messages before
// the release pair; the reject path ends in PduSessionEstablishmentReject
// with Cause = InsufficientResources.
std::vector<SignalingMessage> procedure_template(TemplateKind kind,
                                                 const sim::ServiceRequest& request,
                                                 std::int64_t ue_id,
                                                 std::int64_t session_id,
                                                 const TemplateTimes& times);

// Convenience overload: uncontended timing (decision at arrival, release at
// arrival + service time).
std::vector<SignalingMessage> procedure_template(TemplateKind kind,
                                                 const sim::ServiceRequest& request,
                                                 std::int64_t session_id);

// Grant code derived from a request's total demand, clamped to the schema
// bound.
std::int64_t grant_code(const sim::ServiceRequest& request);

}  // namespace netdt::codec
