// Copyright 2026 The tiltc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tilt/tape.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace tilt {

TapeState::TapeState(int n_ions, int zone_size, int head)
    : zone_(zone_size), head_(head) {
  if (n_ions <= 0 || zone_size <= 0 || zone_size > n_ions) {
    throw std::invalid_argument("tape needs 0 < zone size <= ion count");
  }
  if (head < 0 || head > n_ions - zone_size) {
    throw std::invalid_argument("head outside [0, n - Z]");
  }
  pos_of_.resize(n_ions);
  ion_at_.resize(n_ions);
  std::iota(pos_of_.begin(), pos_of_.end(), 0);
  std::iota(ion_at_.begin(), ion_at_.end(), 0);
}

void TapeState::swap_positions(int a, int b) {
  if (!in_zone(a) || !in_zone(b)) {
    throw std::invalid_argument("swap positions must lie inside the zone");
  }
  if (a == b) {
    throw std::invalid_argument("swap positions must differ");
  }
  QubitId qa = ion_at_[a];
  QubitId qb = ion_at_[b];
  std::swap(ion_at_[a], ion_at_[b]);
  pos_of_[qa] = b;
  pos_of_[qb] = a;
}

void TapeState::move_head(int delta) {
  int target = head_ + delta;
  if (delta == 0 || target < 0 || target > max_head()) {
    throw std::invalid_argument("head move outside [0, n - Z]");
  }
  head_ = target;
}

}  // namespace tilt
