#include "netsim/tracegen.hpp"

#include <map>
#include <set>

namespace netdt::sim {

namespace {

// Assigns each request a UE identity from the binned id pool, reusing slots
// only after the lifecycle ends. Keeps concurrent lifecycles collision-free
// so every per-UE subsequence stays a single template path.
class UeSlotAllocator {
 public:
  std::int64_t acquire(std::uint64_t request_id) {
    std::int64_t slot;
    if (!free_.empty()) {
      slot = *free_.begin();
      free_.erase(free_.begin());
    } else {
      // Pool exhausted (pathological backlog); fall back to modulo reuse.
      slot = static_cast<std::int64_t>(request_id % codec::kIdPool);
    }
    held_[request_id] = slot;
    return slot;
  }

  std::int64_t slot_of(std::uint64_t request_id) const {
    return held_.at(request_id);
  }

  void release(std::uint64_t request_id) {
    auto it = held_.find(request_id);
    if (it == held_.end()) return;
    free_.insert(it->second);
    held_.erase(it);
  }

  UeSlotAllocator() {
    for (std::int64_t i = 0; i < codec::kIdPool; ++i) free_.insert(i);
  }

 private:
  std::set<std::int64_t> free_;
  std::map<std::uint64_t, std::int64_t> held_;
};

std::int64_t session_of(std::int64_t ue_slot) {
  // Fixed bijection over the pool keeps concurrent session ids distinct.
  return (13 * ue_slot + 5) % codec::kIdPool;
}

}  // namespace

codec::MessageTrace generate_signaling_trace(const SimConfig& config,
                                             const PolicyFn& policy,
                                             std::uint64_t seed,
                                             const std::string& source_digest) {
  codec::MessageTrace trace;
  trace.source_digest = source_digest;
  UeSlotAllocator slots;

  Simulator simulator(config, seed);
  simulator.set_record_states(false);

  auto emit_range = [&](std::vector<codec::SignalingMessage> msgs,
                        std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i)
      trace.messages.push_back(std::move(msgs[i]));
  };

  SimHooks hooks;
  hooks.on_arrival = [&](const ServiceRequest& req) {
    std::int64_t ue = slots.acquire(req.request_id);
    auto msgs = codec::procedure_template(codec::TemplateKind::Accept, req, ue,
                                          session_of(ue), {});
    emit_range(std::move(msgs), 0, 3);
  };
  hooks.on_admit = [&](const ServiceRequest& req, double admit_time) {
    std::int64_t ue = slots.slot_of(req.request_id);
    codec::TemplateTimes times{admit_time, 0.0};
    auto msgs = codec::procedure_template(codec::TemplateKind::Accept, req, ue,
                                          session_of(ue), times);
    emit_range(std::move(msgs), 3, 8);
  };
  hooks.on_departure = [&](const ServiceRequest& req, double departure_time) {
    std::int64_t ue = slots.slot_of(req.request_id);
    codec::TemplateTimes times{departure_time, departure_time};
    auto msgs = codec::procedure_template(codec::TemplateKind::Accept, req, ue,
                                          session_of(ue), times);
    emit_range(std::move(msgs), 8, 10);
    slots.release(req.request_id);
  };
  hooks.on_timeout = [&](const ServiceRequest& req, double expiry_time) {
    std::int64_t ue = slots.slot_of(req.request_id);
    codec::TemplateTimes times{expiry_time, 0.0};
    auto msgs = codec::procedure_template(codec::TemplateKind::RejectTimeout,
                                          req, ue, session_of(ue), times);
    emit_range(std::move(msgs), 3, 4);
    slots.release(req.request_id);
  };
  simulator.set_hooks(std::move(hooks));
  simulator.run(policy);
  return trace;
}

}  // namespace netdt::sim
