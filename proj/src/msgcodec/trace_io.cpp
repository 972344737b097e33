#include "msgcodec/trace_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace netdt::codec {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: fixed '\n' endings
  if (!out) throw RuntimeError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptFile("cannot open: " + path);
  return in;
}

void expect_header(std::istream& in, const std::string& magic,
                   const std::string& path) {
  std::string line;
  if (!std::getline(in, line) || line != magic)
    throw CorruptFile(path + ": missing header '" + magic + "'");
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", t);
  return buf;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void save_trace(const MessageTrace& trace, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# netdt-trace v1\n";
  out << "# source=" << trace.source_digest << "\n";
  for (const SignalingMessage& msg : trace.messages) {
    out << format_time(msg.timestamp) << ' ' << interface_name(msg.interface)
        << ' ' << direction_name(msg.direction) << ' '
        << message_type_name(msg.msg_type) << ' ' << msg.ue_id;
    for (const InformationElement& ie : msg.ies)
      out << ' ' << ie_key_name(ie.key) << '=' << ie.value;
    out << '\n';
  }
}

MessageTrace load_trace(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_header(in, "# netdt-trace v1", path);
  MessageTrace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# source=", 0) == 0) {
      trace.source_digest = line.substr(std::strlen("# source="));
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    SignalingMessage msg;
    std::string iface, dir, type;
    if (!(ls >> msg.timestamp >> iface >> dir >> type >> msg.ue_id))
      throw CorruptFile(path + ": bad trace line: " + line);
    msg.interface = interface_from_name(iface);
    msg.direction = direction_from_name(dir);
    msg.msg_type = message_type_from_name(type);
    std::string pair;
    while (ls >> pair) {
      auto eq = pair.find('=');
      if (eq == std::string::npos)
        throw CorruptFile(path + ": bad IE pair: " + pair);
      InformationElement ie;
      ie.key = ie_key_from_name(pair.substr(0, eq));
      ie.value = std::stoll(pair.substr(eq + 1));
      msg.ies.push_back(ie);
    }
    validate_message(msg);
    trace.messages.push_back(std::move(msg));
  }
  validate_trace(trace);
  return trace;
}

void save_message_dataset(const std::vector<DialogueSample>& dataset,
                          std::int32_t context_length,
                          const Vocabulary& vocab, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# netdt-msgds v1\n";
  out << "# context_length=" << context_length << "\n";
  out << "# vocab=" << vocab.digest() << "\n";
  for (const DialogueSample& s : dataset) {
    for (std::size_t i = 0; i < s.history.size(); ++i) {
      if (i) out << ' ';
      out << s.history[i];
    }
    out << '|';
    for (std::size_t i = 0; i < s.target.size(); ++i) {
      if (i) out << ' ';
      out << s.target[i];
    }
    out << '\n';
  }
}

std::vector<DialogueSample> load_message_dataset(const std::string& path,
                                                 const Vocabulary& vocab) {
  std::ifstream in = open_in(path);
  expect_header(in, "# netdt-msgds v1", path);
  std::vector<DialogueSample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# vocab=", 0) == 0 &&
          line.substr(std::strlen("# vocab=")) != vocab.digest())
        throw SchemaVersionMismatch(path + ": vocabulary digest mismatch");
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw CorruptFile(path + ": sample line missing '|'");
    DialogueSample sample;
    auto parse_ids = [&](const std::string& part, std::vector<TokenId>& dst) {
      std::istringstream ps(part);
      long long id;
      while (ps >> id) {
        if (id < 0 || static_cast<std::size_t>(id) >= vocab.size())
          throw CorruptFile(path + ": token id out of range");
        dst.push_back(static_cast<TokenId>(id));
      }
    };
    parse_ids(line.substr(0, bar), sample.history);
    parse_ids(line.substr(bar + 1), sample.target);
    if (sample.target.empty())
      throw CorruptFile(path + ": sample has empty target");
    out.push_back(std::move(sample));
  }
  return out;
}

void save_policy_dataset(const std::vector<StateActionSample>& dataset,
                         const CodecConfig& config, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# netdt-polds v1\n";
  out << "# queue_slots=" << config.queue_slots << "\n";
  for (const StateActionSample& s : dataset) {
    for (double v : s.state_vec) out << format_real(v) << ' ';
    out << s.action_id << '\n';
  }
}

std::vector<StateActionSample> load_policy_dataset(const std::string& path) {
  std::ifstream in = open_in(path);
  expect_header(in, "# netdt-polds v1", path);
  std::vector<StateActionSample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    StateActionSample s;
    for (double& v : s.state_vec)
      if (!(ls >> v)) throw CorruptFile(path + ": short state vector");
    if (!(ls >> s.action_id)) throw CorruptFile(path + ": missing action id");
    out.push_back(s);
  }
  return out;
}

void save_trajectory(const sim::Trajectory& trajectory,
                     const CodecConfig& config, const std::string& source_digest,
                     const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# netdt-traj v1\n";
  out << "# source=" << source_digest << "\n";
  out << "# queue_slots=" << config.queue_slots << "\n";
  for (const sim::TrajectoryStep& step : trajectory.steps) {
    out << format_time(step.state.clock) << ' ';
    if (step.action.is_admit())
      out << "admit:" << step.action.index();
    else
      out << "defer";
    out << ' ' << format_real(step.reward);
    for (double v : state_to_vector(step.state, config))
      out << ' ' << format_real(v);
    out << '\n';
  }
  out << "# totals admitted=" << trajectory.admitted_count
      << " expired=" << trajectory.expired_count
      << " reward=" << format_real(trajectory.cumulative_reward) << "\n";
}

}  // namespace netdt::codec
