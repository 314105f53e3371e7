#include "sodelie/odeint/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sodelie::ode {

Trajectory::Trajectory(std::vector<double> times, std::vector<State> states, TrajectoryMeta meta)
    : times_(std::move(times)), states_(std::move(states)), meta_(std::move(meta)) {
  if (times_.size() != states_.size()) throw std::invalid_argument("trajectory: times/states length mismatch");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!std::isfinite(times_[i]) || !std::isfinite(states_[i][0]) || !std::isfinite(states_[i][1])) {
      throw std::invalid_argument("trajectory: non-finite entry at row " + std::to_string(i));
    }
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw std::invalid_argument("trajectory: times not strictly increasing at row " + std::to_string(i));
    }
  }
}

namespace {

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "t,x,v\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    out << format_double(trajectory.time(i)) << ',' << format_double(trajectory.x(i)) << ','
        << format_double(trajectory.v(i)) << '\n';
  }
}

void write_csv(const std::string& path, const Trajectory& trajectory) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(out, trajectory);
}

Trajectory read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x,v") throw std::runtime_error("csv: expected header 't,x,v', got '" + line + "'");
  std::vector<double> times;
  std::vector<State> states;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    double values[3];
    char sep = 0;
    if (!(fields >> values[0] >> sep) || sep != ',' || !(fields >> values[1] >> sep) || sep != ',' ||
        !(fields >> values[2])) {
      throw std::runtime_error("csv: malformed row " + std::to_string(row));
    }
    times.push_back(values[0]);
    states.push_back({values[1], values[2]});
  }
  try {
    return Trajectory(std::move(times), std::move(states));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("csv: ") + e.what());
  }
}

Trajectory read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_csv(in);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need at least two points");
  if (!(t1 > t0)) throw std::invalid_argument("uniform_grid: need t1 > t0");
  std::vector<double> grid(n);
  const double h = (t1 - t0) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) grid[i] = t0 + h * static_cast<double>(i);
  grid.back() = t1;
  return grid;
}

}  // namespace sodelie::ode
