#pragma once

#include <cstdint>
#include <string>

#include "msgcodec/schema.hpp"
#include "netsim/sim.hpp"

namespace netdt::sim {

// Emulates the signaling exchange for every request lifecycle under the given
// admission policy: registration and session-establishment at arrival, the
// admission-dependent N4/N2/accept chain at grant time, release at departure,
// or a reject at expiry. Messages from concurrent UEs are globally
// interleaved by timestamp. Deterministic per (config, policy, seed).
codec::MessageTrace generate_signaling_trace(const SimConfig& config,
                                             const PolicyFn& policy,
                                             std::uint64_t seed,
                                             const std::string& source_digest = "");

}  // namespace netdt::sim
