#pragma once

#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "common/rng.hpp"
#include "netsim/types.hpp"

namespace netdt::sim {

using PolicyFn = std::function<AdmissionAction(const AdmissionState&)>;

// Poisson arrivals with exponential service times for one slice. Request ids
// are sequential from first_id in arrival order; deterministic given the rng
// seed. A zero arrival rate yields an empty list.
std::vector<ServiceRequest> sample_arrivals(const SliceProfile& profile,
                                            double horizon, Rng rng,
                                            std::uint64_t first_id = 0);

// True iff the demand fits the available resources component-wise and the
// concurrency cap leaves room for one more session.
bool feasible(const AdmissionState& state, const ServiceRequest& request);

// Admits the feasible pending request with the highest revenue per unit of
// capacity-normalized L1 demand; ties break on earliest arrival, then lowest
// request id. Defers iff nothing pending is feasible.
AdmissionAction greedy_policy(const AdmissionState& state);

// Revenue density used by the greedy criterion (exposed for oracles).
double revenue_density(const ServiceRequest& request,
                       const ResourceVector& capacity);

// Throws if the state violates its structural invariants. Test support.
void check_state_invariants(const AdmissionState& state);

// Lifecycle callbacks, used by the signaling-trace generator.
struct SimHooks {
  std::function<void(const ServiceRequest&)> on_arrival;
  std::function<void(const ServiceRequest&, double admit_time)> on_admit;
  std::function<void(const ServiceRequest&, double departure_time)> on_departure;
  std::function<void(const ServiceRequest&, double expiry_time)> on_timeout;
};

// Event-driven control-plane simulator. Single-threaded and deterministic:
// identical (config, policy, seed) reproduce identical trajectories.
//
// Decision epochs fire after every arrival and every departure; one
// Admit-or-Defer decision per epoch, and epochs repeat at the same clock
// while the policy keeps admitting. Every decision is recorded.
class Simulator {
 public:
  Simulator(const SimConfig& config, std::uint64_t seed);

  // Advances until a decision is required. Returns false when the episode is
  // over (no events left within the horizon).
  bool next_decision();

  // State at the current decision epoch (valid after next_decision() ->
  // true). Expired requests have already been purged.
  const AdmissionState& state() const { return state_; }

  // Applies one decision and returns its reward. Admit of an infeasible or
  // out-of-range request throws InvalidActionError.
  double apply(const AdmissionAction& action);

  // Drains the episode under the given policy.
  Trajectory run(const PolicyFn& policy);

  void set_hooks(SimHooks hooks) { hooks_ = std::move(hooks); }

  const Trajectory& trajectory() const { return trajectory_; }
  bool record_states() const { return record_states_; }
  // Trajectory state snapshots can be disabled for long RL runs.
  void set_record_states(bool on) { record_states_ = on; }

 private:
  struct QueuedEvent {
    double time;
    EventKind kind;
    std::uint64_t request_id;
    bool operator>(const QueuedEvent& o) const {
      if (time != o.time) return time > o.time;
      if (kind != o.kind) return kind > o.kind;
      return request_id > o.request_id;
    }
  };

  void purge_expired();
  void expire(std::size_t pending_index);

  SimConfig config_;
  AdmissionState state_;
  std::priority_queue<QueuedEvent, std::vector<QueuedEvent>,
                      std::greater<QueuedEvent>>
      events_;
  std::vector<ServiceRequest> all_requests_;  // indexed by request_id
  Trajectory trajectory_;
  SimHooks hooks_;
  double pending_reward_ = 0.0;  // expiry penalties carried to the next step
  bool epoch_open_ = false;
  bool record_states_ = true;
};

// Runs one full episode. Bit-identical output for identical inputs.
Trajectory run_episode(const SimConfig& config, const PolicyFn& policy,
                       std::uint64_t seed);

}  // namespace netdt::sim
