#include "locorl/net/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "locorl/errors.hpp"
#include "locorl/io/binary.hpp"

namespace locorl::net {

namespace {

constexpr char kMagic[8] = {'L', 'O', 'C', 'O', 'R', 'L', 'C', 'K'};

void write_spec(io::BinaryWriter& w, const MlpSpec& s) {
  w.put_u32(static_cast<std::uint32_t>(s.input_width));
  w.put_u32(static_cast<std::uint32_t>(s.hidden_widths.size()));
  for (int h : s.hidden_widths) w.put_u32(static_cast<std::uint32_t>(h));
  w.put_u32(static_cast<std::uint32_t>(s.output_width));
}

MlpSpec read_spec(io::BinaryReader& r) {
  MlpSpec s;
  s.input_width = static_cast<int>(r.get_u32());
  const std::uint32_t nh = r.get_u32();
  s.hidden_widths.resize(nh);
  for (std::uint32_t i = 0; i < nh; ++i) s.hidden_widths[i] = static_cast<int>(r.get_u32());
  s.output_width = static_cast<int>(r.get_u32());
  return s;
}

std::string spec_str(const MlpSpec& s) {
  std::string out = std::to_string(s.input_width);
  for (int h : s.hidden_widths) out += "-" + std::to_string(h);
  out += "-" + std::to_string(s.output_width);
  return out;
}

}  // namespace

void save_checkpoint(const Checkpoint& ck, const std::string& path) {
  io::BinaryWriter payload;
  write_spec(payload, ck.actor_spec);
  write_spec(payload, ck.critic_spec);
  payload.put_vec(ck.actor_params);
  payload.put_vec(ck.critic_params);
  payload.put_vec(ck.actor_adam_m);
  payload.put_vec(ck.actor_adam_v);
  payload.put_i64(ck.actor_adam_t);
  payload.put_vec(ck.critic_adam_m);
  payload.put_vec(ck.critic_adam_v);
  payload.put_i64(ck.critic_adam_t);
  payload.put_i64(ck.epoch);
  payload.put_i64(ck.episode_counter);
  payload.put_i64(ck.total_steps);
  payload.put_f64(ck.c_v);
  payload.put_f64(ck.c_f);
  payload.put_u64(ck.trainer_rng_state);
  payload.put_u64(ck.trainer_rng_seq);
  payload.put_u64(ck.env_blobs.size());
  for (const auto& blob : ck.env_blobs) payload.put_bytes(blob);

  const auto& body = payload.bytes();
  const std::uint64_t digest = io::fnv1a(body.data(), body.size());

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("save_checkpoint: cannot open " + tmp);
    out.write(kMagic, sizeof kMagic);
    const std::uint32_t version = Checkpoint::kFormatVersion;
    out.write(reinterpret_cast<const char*>(&version), sizeof version);
    const std::uint64_t size = body.size();
    out.write(reinterpret_cast<const char*>(&size), sizeof size);
    out.write(reinterpret_cast<const char*>(body.data()),
              static_cast<std::streamsize>(body.size()));
    out.write(reinterpret_cast<const char*>(&digest), sizeof digest);
    if (!out) throw CheckpointError("save_checkpoint: write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("save_checkpoint: rename to " + path + " failed: " + ec.message());
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("load_checkpoint: cannot open " + path);

  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw CheckpointError("load_checkpoint: bad magic in " + path);

  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  if (!in || version != Checkpoint::kFormatVersion)
    throw CheckpointError("load_checkpoint: unsupported format version " +
                          std::to_string(version));

  std::uint64_t size = 0;
  in.read(reinterpret_cast<char*>(&size), sizeof size);
  if (!in) throw CheckpointError("load_checkpoint: truncated header in " + path);

  std::vector<std::uint8_t> body(size);
  in.read(reinterpret_cast<char*>(body.data()), static_cast<std::streamsize>(size));
  if (!in || static_cast<std::uint64_t>(in.gcount()) != size)
    throw CheckpointError("load_checkpoint: truncated payload in " + path);

  std::uint64_t digest = 0;
  in.read(reinterpret_cast<char*>(&digest), sizeof digest);
  if (!in) throw CheckpointError("load_checkpoint: truncated digest in " + path);
  if (digest != io::fnv1a(body.data(), body.size()))
    throw CheckpointError("load_checkpoint: payload corrupted in " + path);

  io::BinaryReader r(body);
  Checkpoint ck;
  ck.actor_spec = read_spec(r);
  ck.critic_spec = read_spec(r);
  ck.actor_params = r.get_vec();
  ck.critic_params = r.get_vec();
  ck.actor_adam_m = r.get_vec();
  ck.actor_adam_v = r.get_vec();
  ck.actor_adam_t = r.get_i64();
  ck.critic_adam_m = r.get_vec();
  ck.critic_adam_v = r.get_vec();
  ck.critic_adam_t = r.get_i64();
  ck.epoch = r.get_i64();
  ck.episode_counter = r.get_i64();
  ck.total_steps = r.get_i64();
  ck.c_v = r.get_f64();
  ck.c_f = r.get_f64();
  ck.trainer_rng_state = r.get_u64();
  ck.trainer_rng_seq = r.get_u64();
  const std::uint64_t n_envs = r.get_u64();
  ck.env_blobs.resize(n_envs);
  for (std::uint64_t i = 0; i < n_envs; ++i) ck.env_blobs[i] = r.get_bytes();

  if (ck.actor_params.size() != ck.actor_spec.parameter_count() ||
      ck.critic_params.size() != ck.critic_spec.parameter_count())
    throw CheckpointError("load_checkpoint: parameter vector size disagrees with spec");
  return ck;
}

void require_spec_match(const Checkpoint& ck, const MlpSpec& actor, const MlpSpec& critic) {
  if (!(ck.actor_spec == actor))
    throw CheckpointError("checkpoint actor spec " + spec_str(ck.actor_spec) +
                          " does not match expected " + spec_str(actor));
  if (!(ck.critic_spec == critic))
    throw CheckpointError("checkpoint critic spec " + spec_str(ck.critic_spec) +
                          " does not match expected " + spec_str(critic));
}

}  // namespace locorl::net
