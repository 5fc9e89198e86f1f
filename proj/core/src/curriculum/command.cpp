#include "locorl/curriculum/command.hpp"

#include <algorithm>
#include <stdexcept>

namespace locorl::curriculum {

void CommandState::save(io::BinaryWriter& w) const {
  for (int i = 0; i < 3; ++i) w.put_f64(v_old[i]);
  for (int i = 0; i < 3; ++i) w.put_f64(v_des[i]);
  w.put_f64(progress);
  w.put_f64(duration);
}

void CommandState::load(io::BinaryReader& r) {
  for (int i = 0; i < 3; ++i) v_old[i] = r.get_f64();
  for (int i = 0; i < 3; ++i) v_des[i] = r.get_f64();
  progress = r.get_f64();
  duration = r.get_f64();
}

void command_set_target(CommandState& s, const Eigen::Vector3d& v_des) {
  s.v_old = current_command(s);
  s.v_des = v_des;
  s.progress = 0.0;
}

Eigen::Vector3d current_command(const CommandState& s) {
  const double p = std::clamp(s.progress, 0.0, 1.0);
  return s.v_old + p * (s.v_des - s.v_old);
}

Eigen::Vector3d step_command(CommandState& s, double dt) {
  if (!(s.duration > 0.0)) throw std::invalid_argument("step_command: duration must be > 0");
  s.progress = std::min(1.0, s.progress + dt / s.duration);
  return current_command(s);
}

}  // namespace locorl::curriculum
