#include "netsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace netdt::sim {

const char* slice_name(SliceKind kind) {
  switch (kind) {
    case SliceKind::ImmersiveCommunication: return "immersive";
    case SliceKind::Hrllc: return "hrllc";
    case SliceKind::MassiveCommunication: return "massive";
    case SliceKind::UbiquitousConnectivity: return "ubiquitous";
  }
  throw ConfigError("unknown slice kind");
}

SliceKind slice_from_name(const std::string& name) {
  for (SliceKind k : kAllSlices)
    if (name == slice_name(k)) return k;
  throw ConfigError("unknown slice name: " + name);
}

void SliceProfile::validate() const {
  if (!demand.non_negative()) throw ConfigError("slice demand must be >= 0");
  if (arrival_rate < 0.0) throw ConfigError("arrival_rate must be >= 0");
  if (mean_service_time <= 0.0)
    throw ConfigError("mean_service_time must be > 0");
  if (timeout <= 0.0) throw ConfigError("timeout must be > 0");
}

SimConfig::SimConfig() {
  // Default profiles encode the slices' qualitative asymmetry: immersive is
  // radio-heavy, HRLLC compute-heavy, massive is small but most frequent,
  // ubiquitous leans on storage. All values are overridable via config.
  profiles[0] = {SliceKind::ImmersiveCommunication, {8, 2, 2}, 0.8, 12.0, 6.0, 8.0};
  profiles[1] = {SliceKind::Hrllc, {2, 8, 1}, 0.6, 4.0, 2.0, 10.0};
  profiles[2] = {SliceKind::MassiveCommunication, {1, 1, 1}, 3.0, 8.0, 10.0, 1.0};
  profiles[3] = {SliceKind::UbiquitousConnectivity, {2, 1, 4}, 1.0, 10.0, 8.0, 3.0};
}

void SimConfig::validate() const {
  if (!capacity.non_negative()) throw ConfigError("capacity must be >= 0");
  if (horizon <= 0.0) throw ConfigError("horizon must be > 0");
  if (max_concurrent_ues < 1)
    throw ConfigError("max_concurrent_ues must be >= 1");
  if (expiry_penalty > 0.0)
    throw ConfigError("expiry_penalty must be <= 0");
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].kind != kAllSlices[i])
      throw ConfigError("profiles must be indexed by slice kind");
    profiles[i].validate();
  }
}

std::vector<ServiceRequest> sample_arrivals(const SliceProfile& profile,
                                            double horizon, Rng rng,
                                            std::uint64_t first_id) {
  std::vector<ServiceRequest> out;
  if (profile.arrival_rate <= 0.0) return out;
  double t = 0.0;
  std::uint64_t id = first_id;
  for (;;) {
    t += rng.exponential(profile.arrival_rate);
    if (t >= horizon) break;
    ServiceRequest req;
    req.request_id = id++;
    req.tenant_id = static_cast<std::uint32_t>(profile.kind);
    req.kind = profile.kind;
    req.demand = profile.demand;
    req.arrival_time = t;
    double service = rng.exponential(1.0 / profile.mean_service_time);
    req.service_time = std::max(service, 1e-12);
    req.deadline = t + profile.timeout;
    req.revenue = profile.revenue;
    out.push_back(req);
  }
  return out;
}

bool feasible(const AdmissionState& state, const ServiceRequest& request) {
  return request.demand.leq(state.available) &&
         state.active.size() < state.max_concurrent_ues;
}

double revenue_density(const ServiceRequest& request,
                       const ResourceVector& capacity) {
  double norm = 0.0;
  if (capacity.radio > 0)
    norm += static_cast<double>(request.demand.radio) / static_cast<double>(capacity.radio);
  if (capacity.compute > 0)
    norm += static_cast<double>(request.demand.compute) / static_cast<double>(capacity.compute);
  if (capacity.storage > 0)
    norm += static_cast<double>(request.demand.storage) / static_cast<double>(capacity.storage);
  if (norm <= 0.0) return std::numeric_limits<double>::infinity();
  return request.revenue / norm;
}

AdmissionAction greedy_policy(const AdmissionState& state) {
  std::optional<std::size_t> best;
  double best_density = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.pending.size(); ++i) {
    const ServiceRequest& req = state.pending[i];
    if (!feasible(state, req)) continue;
    double d = revenue_density(req, state.capacity);
    bool better = false;
    if (!best) {
      better = true;
    } else if (d != best_density) {
      better = d > best_density;
    } else {
      const ServiceRequest& cur = state.pending[*best];
      if (req.arrival_time != cur.arrival_time)
        better = req.arrival_time < cur.arrival_time;
      else
        better = req.request_id < cur.request_id;
    }
    if (better) {
      best = i;
      best_density = d;
    }
  }
  return best ? AdmissionAction::admit(*best) : AdmissionAction::defer();
}

void check_state_invariants(const AdmissionState& state) {
  if (!state.available.non_negative())
    throw RuntimeError("available resources negative");
  if (!state.available.leq(state.capacity))
    throw RuntimeError("available exceeds capacity");
  ResourceVector held;
  for (const ActiveSession& s : state.active) held = held.plus(s.demand);
  if (!held.plus(state.available).operator==(state.capacity))
    throw RuntimeError("resource conservation violated");
  if (state.active.size() > state.max_concurrent_ues)
    throw RuntimeError("concurrency cap violated");
  for (const ServiceRequest& req : state.pending)
    if (req.deadline <= state.clock)
      throw RuntimeError("expired request still pending");
}

Simulator::Simulator(const SimConfig& config, std::uint64_t seed)
    : config_(config) {
  config_.validate();
  state_.clock = 0.0;
  state_.available = config_.capacity;
  state_.capacity = config_.capacity;
  state_.max_concurrent_ues = config_.max_concurrent_ues;

  // Per-slice arrival streams are sampled independently, merged by time, and
  // re-numbered so request ids are globally unique and deterministic.
  Rng root(seed);
  std::vector<ServiceRequest> merged;
  for (std::size_t s = 0; s < kNumSlices; ++s) {
    auto reqs = sample_arrivals(config_.profiles[s], config_.horizon,
                                root.split(s));
    merged.insert(merged.end(), reqs.begin(), reqs.end());
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const ServiceRequest& a, const ServiceRequest& b) {
                     if (a.arrival_time != b.arrival_time)
                       return a.arrival_time < b.arrival_time;
                     return a.tenant_id < b.tenant_id;
                   });
  all_requests_.reserve(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    merged[i].request_id = i;
    all_requests_.push_back(merged[i]);
    events_.push({merged[i].arrival_time, EventKind::Arrival, merged[i].request_id});
  }
}

void Simulator::expire(std::size_t pending_index) {
  const ServiceRequest req = state_.pending[pending_index];
  state_.pending.erase(state_.pending.begin() +
                       static_cast<std::ptrdiff_t>(pending_index));
  trajectory_.expired_count += 1;
  // Penalties accrue to the next recorded decision step so that cumulative
  // reward stays the sum of step rewards.
  pending_reward_ += config_.expiry_penalty;
  if (hooks_.on_timeout) hooks_.on_timeout(req, req.deadline);
}

void Simulator::purge_expired() {
  for (std::size_t i = 0; i < state_.pending.size();) {
    if (state_.pending[i].deadline <= state_.clock)
      expire(i);
    else
      ++i;
  }
}

bool Simulator::next_decision() {
  if (epoch_open_) return true;
  while (!events_.empty()) {
    QueuedEvent ev = events_.top();
    if (ev.time > config_.horizon) return false;
    events_.pop();
    state_.clock = ev.time;
    switch (ev.kind) {
      case EventKind::Departure: {
        auto it = std::find_if(state_.active.begin(), state_.active.end(),
                               [&](const ActiveSession& s) {
                                 return s.request_id == ev.request_id;
                               });
        if (it == state_.active.end()) break;  // stale
        state_.available = state_.available.plus(it->demand);
        if (hooks_.on_departure)
          hooks_.on_departure(all_requests_[ev.request_id], ev.time);
        state_.active.erase(it);
        purge_expired();
        epoch_open_ = true;
        return true;
      }
      case EventKind::Timeout: {
        auto it = std::find_if(state_.pending.begin(), state_.pending.end(),
                               [&](const ServiceRequest& r) {
                                 return r.request_id == ev.request_id;
                               });
        if (it == state_.pending.end()) break;  // already admitted or purged
        expire(static_cast<std::size_t>(it - state_.pending.begin()));
        break;
      }
      case EventKind::Arrival: {
        const ServiceRequest& req = all_requests_[ev.request_id];
        state_.pending.push_back(req);
        trajectory_.arrivals_per_slice[static_cast<std::size_t>(req.kind)] += 1;
        events_.push({req.deadline, EventKind::Timeout, req.request_id});
        if (hooks_.on_arrival) hooks_.on_arrival(req);
        purge_expired();
        epoch_open_ = true;
        return true;
      }
      case EventKind::DecisionEpoch:
        epoch_open_ = true;
        return true;
    }
  }
  return false;
}

double Simulator::apply(const AdmissionAction& action) {
  if (!epoch_open_) throw InvalidActionError("no decision epoch is open");
  AdmissionState snapshot;
  if (record_states_) snapshot = state_;
  double reward = 0.0;
  if (action.is_admit()) {
    if (action.index() >= state_.pending.size())
      throw InvalidActionError("admit index out of range");
    ServiceRequest req = state_.pending[action.index()];
    if (!feasible(state_, req))
      throw InvalidActionError("admit of infeasible request " +
                               std::to_string(req.request_id));
    state_.pending.erase(state_.pending.begin() +
                         static_cast<std::ptrdiff_t>(action.index()));
    state_.available = state_.available.minus(req.demand);
    double departure = state_.clock + req.service_time;
    state_.active.push_back({req.request_id, departure, req.demand, req.kind, req.revenue});
    if (departure <= config_.horizon)
      events_.push({departure, EventKind::Departure, req.request_id});
    reward = req.revenue;
    trajectory_.admitted_count += 1;
    trajectory_.admitted_per_slice[static_cast<std::size_t>(req.kind)] += 1;
    if (hooks_.on_admit) hooks_.on_admit(req, state_.clock);
    // The epoch stays open: another decision follows at the same clock.
  } else {
    epoch_open_ = false;
  }
  reward += pending_reward_;
  pending_reward_ = 0.0;
  TrajectoryStep step;
  step.state = std::move(snapshot);
  step.action = action;
  step.reward = reward;
  trajectory_.steps.push_back(std::move(step));
  trajectory_.cumulative_reward += reward;
  return reward;
}

Trajectory Simulator::run(const PolicyFn& policy) {
  while (next_decision()) {
    AdmissionAction action = policy(state_);
    apply(action);
  }
  return trajectory_;
}

Trajectory run_episode(const SimConfig& config, const PolicyFn& policy,
                       std::uint64_t seed) {
  Simulator simulator(config, seed);
  return simulator.run(policy);
}

}  // namespace netdt::sim
