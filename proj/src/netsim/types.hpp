#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "common/errors.hpp"

namespace netdt::sim {

// The four slice archetypes. Order is fixed; it doubles as the tenant id.
enum class SliceKind : std::uint8_t {
  ImmersiveCommunication = 0,
  Hrllc = 1,
  MassiveCommunication = 2,
  UbiquitousConnectivity = 3,
};

inline constexpr int kNumSlices = 4;
inline constexpr std::array<SliceKind, kNumSlices> kAllSlices = {
    SliceKind::ImmersiveCommunication, SliceKind::Hrllc,
    SliceKind::MassiveCommunication, SliceKind::UbiquitousConnectivity};

const char* slice_name(SliceKind kind);
SliceKind slice_from_name(const std::string& name);

// Radio / compute / storage units. Integral units keep resource conservation
// exact under admit/release cycles.
struct ResourceVector {
  std::int64_t radio = 0;
  std::int64_t compute = 0;
  std::int64_t storage = 0;

  bool operator==(const ResourceVector&) const = default;

  bool non_negative() const { return radio >= 0 && compute >= 0 && storage >= 0; }

  // Component-wise ordering (partial).
  bool leq(const ResourceVector& o) const {
    return radio <= o.radio && compute <= o.compute && storage <= o.storage;
  }

  ResourceVector plus(const ResourceVector& o) const {
    return {radio + o.radio, compute + o.compute, storage + o.storage};
  }

  // Defined only when the result stays non-negative; throws otherwise.
  ResourceVector minus(const ResourceVector& o) const {
    ResourceVector r{radio - o.radio, compute - o.compute, storage - o.storage};
    if (!r.non_negative())
      throw InvalidActionError("resource subtraction would go negative");
    return r;
  }

  std::int64_t total() const { return radio + compute + storage; }
};

struct SliceProfile {
  SliceKind kind = SliceKind::ImmersiveCommunication;
  ResourceVector demand;
  double arrival_rate = 0.0;       // requests per second
  double mean_service_time = 1.0;  // seconds
  double timeout = 1.0;            // seconds a request may wait in the queue
  double revenue = 0.0;            // reward units per admitted request

  void validate() const;
};

struct ServiceRequest {
  std::uint64_t request_id = 0;
  std::uint32_t tenant_id = 0;
  SliceKind kind = SliceKind::ImmersiveCommunication;
  ResourceVector demand;
  double arrival_time = 0.0;
  double service_time = 0.0;
  double deadline = 0.0;  // arrival_time + slice timeout
  double revenue = 0.0;   // copied from the slice profile, like demand
};

struct ActiveSession {
  std::uint64_t request_id = 0;
  double departure_time = 0.0;
  ResourceVector demand;  // held resources, released on departure
  SliceKind kind = SliceKind::ImmersiveCommunication;
  double revenue = 0.0;
};

// Queue-plus-resources snapshot at a decision epoch.
struct AdmissionState {
  double clock = 0.0;
  std::vector<ServiceRequest> pending;  // arrival order
  ResourceVector available;
  std::vector<ActiveSession> active;
  ResourceVector capacity;
  std::uint32_t max_concurrent_ues = 1;
};

// Admit(index into pending) or Defer.
class AdmissionAction {
 public:
  static AdmissionAction admit(std::size_t index) {
    return AdmissionAction(static_cast<std::int64_t>(index));
  }
  static AdmissionAction defer() { return AdmissionAction(-1); }

  bool is_admit() const { return index_ >= 0; }
  bool is_defer() const { return index_ < 0; }
  std::size_t index() const { return static_cast<std::size_t>(index_); }

  bool operator==(const AdmissionAction&) const = default;

 private:
  explicit AdmissionAction(std::int64_t index) : index_(index) {}
  std::int64_t index_;
};

enum class EventKind : std::uint8_t {
  // Tie-break rank at equal times: Departure < Timeout < Arrival <
  // DecisionEpoch. Departures free resources before any decision fires.
  Departure = 0,
  Timeout = 1,
  Arrival = 2,
  DecisionEpoch = 3,
};

struct SimEvent {
  double time = 0.0;
  EventKind kind = EventKind::Arrival;
  std::uint64_t request_id = 0;
};

struct SimConfig {
  ResourceVector capacity{64, 64, 64};
  std::array<SliceProfile, kNumSlices> profiles;
  std::uint32_t max_concurrent_ues = 16;
  double horizon = 300.0;  // seconds
  std::uint64_t seed = 1;
  double expiry_penalty = 0.0;  // reward added when a request times out (<= 0)

  SimConfig();
  void validate() const;
  const SliceProfile& profile(SliceKind kind) const {
    return profiles[static_cast<std::size_t>(kind)];
  }
};

struct TrajectoryStep {
  AdmissionState state;  // snapshot before the action
  AdmissionAction action = AdmissionAction::defer();
  double reward = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  std::uint64_t admitted_count = 0;
  std::uint64_t expired_count = 0;
  std::array<std::uint64_t, kNumSlices> arrivals_per_slice{};
  std::array<std::uint64_t, kNumSlices> admitted_per_slice{};
  double cumulative_reward = 0.0;
};

}  // namespace netdt::sim
