#include "msgcodec/schema.hpp"

#include <algorithm>
#include <array>

namespace netdt::codec {

namespace {

struct TypeRule {
  Interface interface;
  Direction direction;
  std::vector<IeKey> ies;
};

const std::array<TypeRule, kNumMessageTypes>& type_rules() {
  using I = Interface;
  using D = Direction;
  using K = IeKey;
  static const std::array<TypeRule, kNumMessageTypes> rules = {{
      // RegistrationRequest
      {I::N1, D::ToControlPlane, {K::UeId, K::SliceId}},
      // RegistrationAccept
      {I::N1, D::FromControlPlane, {K::UeId}},
      // PduSessionEstablishmentRequest
      {I::N1, D::ToControlPlane, {K::UeId, K::SessionId, K::SliceId, K::QosProfile}},
      // N4SessionEstablishmentRequest
      {I::N4, D::FromControlPlane, {K::UeId, K::SessionId, K::QosProfile}},
      // N4SessionEstablishmentResponse
      {I::N4, D::ToControlPlane, {K::UeId, K::SessionId, K::Cause}},
      // N2ResourceSetupRequest
      {I::N2, D::FromControlPlane, {K::UeId, K::SessionId, K::ResourceGrant}},
      // N2ResourceSetupResponse
      {I::N2, D::ToControlPlane, {K::UeId, K::SessionId, K::Cause}},
      // PduSessionEstablishmentAccept
      {I::N1, D::FromControlPlane, {K::UeId, K::SessionId, K::ResourceGrant}},
      // PduSessionEstablishmentReject
      {I::N1, D::FromControlPlane, {K::UeId, K::SessionId, K::Cause}},
      // PduSessionReleaseRequest
      {I::N1, D::ToControlPlane, {K::UeId, K::SessionId}},
      // PduSessionReleaseComplete
      {I::N1, D::FromControlPlane, {K::UeId, K::SessionId}},
  }};
  return rules;
}

const TypeRule& rule_of(MessageType t) {
  return type_rules()[static_cast<std::size_t>(t)];
}

const char* kInterfaceNames[] = {"N1", "N2", "N4"};
const char* kDirectionNames[] = {"toCP", "fromCP"};
const char* kMessageTypeNames[] = {
    "RegistrationRequest",
    "RegistrationAccept",
    "PduSessionEstablishmentRequest",
    "N4SessionEstablishmentRequest",
    "N4SessionEstablishmentResponse",
    "N2ResourceSetupRequest",
    "N2ResourceSetupResponse",
    "PduSessionEstablishmentAccept",
    "PduSessionEstablishmentReject",
    "PduSessionReleaseRequest",
    "PduSessionReleaseComplete",
};
const char* kIeKeyNames[] = {"UeId",       "SessionId", "SliceId",
                             "QosProfile", "Cause",     "ResourceGrant"};

}  // namespace

std::int64_t SignalingMessage::ie_value(IeKey key) const {
  for (const auto& ie : ies)
    if (ie.key == key) return ie.value;
  throw SchemaViolation(std::string("missing IE ") + ie_key_name(key) +
                        " in " + message_type_name(msg_type));
}

bool SignalingMessage::has_ie(IeKey key) const {
  return std::any_of(ies.begin(), ies.end(),
                     [&](const InformationElement& ie) { return ie.key == key; });
}

const char* interface_name(Interface i) {
  return kInterfaceNames[static_cast<std::size_t>(i)];
}
const char* direction_name(Direction d) {
  return kDirectionNames[static_cast<std::size_t>(d)];
}
const char* message_type_name(MessageType t) {
  return kMessageTypeNames[static_cast<std::size_t>(t)];
}
const char* ie_key_name(IeKey k) {
  return kIeKeyNames[static_cast<std::size_t>(k)];
}

Interface interface_from_name(const std::string& s) {
  for (int i = 0; i < 3; ++i)
    if (s == kInterfaceNames[i]) return static_cast<Interface>(i);
  throw MalformedSequence("unknown interface: " + s);
}

Direction direction_from_name(const std::string& s) {
  for (int i = 0; i < 2; ++i)
    if (s == kDirectionNames[i]) return static_cast<Direction>(i);
  throw MalformedSequence("unknown direction: " + s);
}

MessageType message_type_from_name(const std::string& s) {
  for (int i = 0; i < kNumMessageTypes; ++i)
    if (s == kMessageTypeNames[i]) return static_cast<MessageType>(i);
  throw MalformedSequence("unknown message type: " + s);
}

IeKey ie_key_from_name(const std::string& s) {
  for (int i = 0; i < kNumIeKeys; ++i)
    if (s == kIeKeyNames[i]) return static_cast<IeKey>(i);
  throw MalformedSequence("unknown IE key: " + s);
}

Interface interface_of(MessageType t) { return rule_of(t).interface; }
Direction direction_of(MessageType t) { return rule_of(t).direction; }
const std::vector<IeKey>& mandatory_ies(MessageType t) { return rule_of(t).ies; }

std::int64_t ie_value_bound(IeKey key) {
  switch (key) {
    case IeKey::UeId:
    case IeKey::SessionId: return kIdPool;
    case IeKey::SliceId: return kNumSliceIds;
    case IeKey::QosProfile: return kNumQosProfiles;
    case IeKey::Cause: return kNumCauses;
    case IeKey::ResourceGrant: return kNumGrants;
  }
  throw SchemaViolation("unknown IE key");
}

void validate_message(const SignalingMessage& msg) {
  const TypeRule& rule = rule_of(msg.msg_type);
  if (msg.interface != rule.interface)
    throw SchemaViolation(std::string(message_type_name(msg.msg_type)) +
                          " carried on wrong interface");
  if (msg.direction != rule.direction)
    throw SchemaViolation(std::string(message_type_name(msg.msg_type)) +
                          " carried in wrong direction");
  if (msg.ies.size() != rule.ies.size())
    throw SchemaViolation(std::string(message_type_name(msg.msg_type)) +
                          " has wrong IE count");
  for (std::size_t i = 0; i < rule.ies.size(); ++i) {
    if (msg.ies[i].key != rule.ies[i])
      throw SchemaViolation(std::string("IE order violation in ") +
                            message_type_name(msg.msg_type) + ": expected " +
                            ie_key_name(rule.ies[i]));
    std::int64_t v = msg.ies[i].value;
    if (v < 0 || v >= ie_value_bound(rule.ies[i]))
      throw SchemaViolation(std::string("IE value out of range for ") +
                            ie_key_name(rule.ies[i]));
  }
  if (msg.ue_id != msg.ie_value(IeKey::UeId))
    throw SchemaViolation("ue_id does not match the UeId IE");
}

void validate_trace(const MessageTrace& trace) {
  double last = -1.0;
  for (const auto& msg : trace.messages) {
    if (msg.timestamp < last)
      throw RuntimeError("trace timestamps decrease");
    last = msg.timestamp;
    validate_message(msg);
  }
}

std::int64_t grant_code(const sim::ServiceRequest& request) {
  return std::min<std::int64_t>(kNumGrants - 1, request.demand.total());
}

namespace {

SignalingMessage make_message(MessageType type, double timestamp,
                              std::int64_t ue_id,
                              std::vector<std::int64_t> values) {
  SignalingMessage msg;
  msg.timestamp = timestamp;
  msg.msg_type = type;
  msg.interface = interface_of(type);
  msg.direction = direction_of(type);
  msg.ue_id = ue_id;
  const std::vector<IeKey>& keys = mandatory_ies(type);
  for (std::size_t i = 0; i < keys.size(); ++i)
    msg.ies.push_back({keys[i], values[i]});
  return msg;
}

}  // namespace

std::vector<SignalingMessage> procedure_template(TemplateKind kind,
                                                 const sim::ServiceRequest& req,
                                                 std::int64_t ue,
                                                 std::int64_t session,
                                                 const TemplateTimes& times) {
  using MT = MessageType;
  const double t0 = req.arrival_time;
  const std::int64_t slice = static_cast<std::int64_t>(req.kind);
  const std::int64_t qos = slice;
  const std::int64_t grant = grant_code(req);
  const std::int64_t ok = static_cast<std::int64_t>(CauseCode::Success);

  std::vector<SignalingMessage> out;
  out.push_back(make_message(MT::RegistrationRequest, t0, ue, {ue, slice}));
  out.push_back(make_message(MT::RegistrationAccept, t0, ue, {ue}));
  out.push_back(make_message(MT::PduSessionEstablishmentRequest, t0, ue,
                             {ue, session, slice, qos}));
  if (kind == TemplateKind::Accept) {
    const double td = times.decision_time;
    const double tr = times.release_time;
    out.push_back(make_message(MT::N4SessionEstablishmentRequest, td, ue,
                               {ue, session, qos}));
    out.push_back(make_message(MT::N4SessionEstablishmentResponse, td, ue,
                               {ue, session, ok}));
    out.push_back(make_message(MT::N2ResourceSetupRequest, td, ue,
                               {ue, session, grant}));
    out.push_back(make_message(MT::N2ResourceSetupResponse, td, ue,
                               {ue, session, ok}));
    out.push_back(make_message(MT::PduSessionEstablishmentAccept, td, ue,
                               {ue, session, grant}));
    out.push_back(make_message(MT::PduSessionReleaseRequest, tr, ue, {ue, session}));
    out.push_back(make_message(MT::PduSessionReleaseComplete, tr, ue, {ue, session}));
  } else {
    const std::int64_t cause =
        static_cast<std::int64_t>(CauseCode::InsufficientResources);
    out.push_back(make_message(MT::PduSessionEstablishmentReject,
                               times.decision_time, ue, {ue, session, cause}));
  }
  return out;
}

std::vector<SignalingMessage> procedure_template(TemplateKind kind,
                                                 const sim::ServiceRequest& req,
                                                 std::int64_t session) {
  TemplateTimes times;
  times.decision_time = kind == TemplateKind::Accept
                            ? req.arrival_time
                            : req.deadline;
  times.release_time = req.arrival_time + req.service_time;
  return procedure_template(kind, req, req.request_id % kIdPool, session, times);
}

}  // namespace netdt::codec
