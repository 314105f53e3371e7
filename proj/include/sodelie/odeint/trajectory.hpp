#ifndef SODELIE_ODEINT_TRAJECTORY_HPP
#define SODELIE_ODEINT_TRAJECTORY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sodelie/odeint/sode.hpp"

namespace sodelie::ode {

struct TrajectoryMeta {
  double tolerance = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::string status = "ok";
};

/// Sampled solution: strictly increasing times with one finite (x, v) state
/// per time.
class Trajectory {
 public:
  /// Throws std::invalid_argument when the invariants do not hold.
  Trajectory(std::vector<double> times, std::vector<State> states, TrajectoryMeta meta = {});

  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<State>& states() const { return states_; }
  double time(std::size_t i) const { return times_[i]; }
  const State& state(std::size_t i) const { return states_[i]; }
  double x(std::size_t i) const { return states_[i][0]; }
  double v(std::size_t i) const { return states_[i][1]; }
  const TrajectoryMeta& meta() const { return meta_; }

 private:
  std::vector<double> times_;
  std::vector<State> states_;
  TrajectoryMeta meta_;
};

/// CSV with header "t,x,v", one row per sample, 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& trajectory);
void write_csv(const std::string& path, const Trajectory& trajectory);

/// Reads the format written by write_csv. Throws std::runtime_error on
/// malformed content.
Trajectory read_csv(std::istream& in);
Trajectory read_csv(const std::string& path);

/// n evenly spaced times from t0 to t1 inclusive; requires n >= 2.
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

}  // namespace sodelie::ode

#endif
