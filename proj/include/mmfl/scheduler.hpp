#pragma once

#include <vector>

#include "mmfl/rng.hpp"

namespace mmfl::scheduler {

// Partition of the K devices into M equal groups, fixed for one frame.
// Device identifiers are 1..K, group indices 1..M.
struct GroupAssignment {
  int frame_index = 0;
  std::vector<std::vector<int>> groups;  // groups[i-1] = sorted device ids of group i

  int num_groups() const { return static_cast<int>(groups.size()); }
  int num_devices() const;
  // 1-based group index of a device, or throws ArgumentError.
  int group_of(int device) const;
};

struct SchedulePolicy {
  int num_models = 1;   // M
  int num_devices = 1;  // K, must be a multiple of M
  int rounds_per_frame() const { return num_models; }
  void validate() const;  // throws ConfigError
};

// Uniformly random equal partition of {1..K} into M groups of K/M.
// Draws one permutation; reproducible bit-for-bit for a fixed generator state.
GroupAssignment partition_devices(int num_devices, int num_models, Rng& rng,
                                  int frame_index = 0);

// Model trained by group i at round t: [(M + i - (t mod M) - 1) mod M] + 1.
int assigned_model(int group, int round, int num_models);

// Inverse map: the unique group training model m at round t.
int group_for_model(int model, int round, int num_models);

}  // namespace mmfl::scheduler
