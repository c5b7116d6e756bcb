#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hmdd/common.hpp"

namespace hmdd {

struct RadarParams {
  double fc = 77.0e9;         // carrier frequency, Hz
  double bandwidth = 0.585e9; // sweep bandwidth, Hz
  double fs = 2.0e6;          // fast-time sample rate, Hz
  double prf = 2600.0;        // chirp repetition frequency, Hz
  int n_pulses = 2600;        // slow-time count
  int n_fast = 32;            // fast-time samples per chirp
  int n_channels = 4;         // receive channels

  double range_per_bin() const { return kC0 / (2.0 * bandwidth); }
  double chirp_duration() const { return n_fast / fs; }

  void validate() const {
    require(fc > 0 && bandwidth > 0 && fs > 0 && prf > 0, ErrorKind::Config,
            "radar: frequencies must be positive");
    require(n_pulses > 0 && n_fast > 0 && n_channels >= 1, ErrorKind::Config,
            "radar: counts must be positive, n_channels >= 1");
    require(bandwidth < fc, ErrorKind::Config, "radar: bandwidth must be below fc");
  }
};

// The eight motion-direction classes.
struct LabelSet {
  std::vector<double> angles_deg;

  static LabelSet default_set() {
    return LabelSet{{0.0, 30.0, 45.0, 60.0, 90.0, 300.0, 315.0, 330.0}};
  }

  int index_of(double deg) const {
    for (size_t i = 0; i < angles_deg.size(); ++i)
      if (angles_deg[i] == deg) return static_cast<int>(i);
    return -1;
  }
  size_t size() const { return angles_deg.size(); }
};

// One point scatterer of the gait model: a body node at a fixed range offset
// from the torso with sinusoidal micro-motion on top of the torso speed.
struct Scatterer {
  double range_offset = 0.0;  // m, relative to initial_range
  double amplitude = 0.0;     // micro-motion velocity amplitude, m/s
  double phase = 0.0;         // micro-motion phase, rad
  double reflectivity = 1.0;  // linear amplitude
};

struct GaitScene {
  double direction_deg = 0.0;
  double speed = 1.2;           // torso speed, m/s
  double gait_freq = 1.8;       // limb cycle rate, Hz
  std::vector<Scatterer> scatterers;
  double initial_range = 5.0;   // m
  double noise_floor_db = -300.0;  // relative to mean scatterer power; <= -200 means off

  void validate(const LabelSet& labels) const {
    require(speed >= 0.0, ErrorKind::Domain, "scene: speed must be >= 0");
    require(gait_freq > 0.0, ErrorKind::Domain, "scene: gait_freq must be > 0");
    require(initial_range > 0.0, ErrorKind::Domain, "scene: initial_range must be > 0");
    for (const auto& s : scatterers)
      require(s.reflectivity >= 0.0, ErrorKind::Domain, "scene: reflectivity must be >= 0");
    require(labels.index_of(direction_deg) >= 0, ErrorKind::Domain,
            "scene: direction " + std::to_string(direction_deg) +
                " deg is not in the label set");
  }
};

// Raw complex echo, indexed [channel][pulse][fast].
struct RadarCube {
  RadarParams params;
  int label = -1;          // direction class index
  uint64_t seed = 0;       // generator seed for this sample
  std::vector<std::complex<float>> data;

  size_t idx(int ch, int pulse, int fast) const {
    return (static_cast<size_t>(ch) * params.n_pulses + pulse) * params.n_fast + fast;
  }
  std::complex<float>& at(int ch, int pulse, int fast) { return data[idx(ch, pulse, fast)]; }
  const std::complex<float>& at(int ch, int pulse, int fast) const {
    return data[idx(ch, pulse, fast)];
  }
  size_t sample_count() const {
    return static_cast<size_t>(params.n_channels) * params.n_pulses * params.n_fast;
  }
};

}  // namespace hmdd
