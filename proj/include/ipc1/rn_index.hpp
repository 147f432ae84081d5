/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ipc1 {

enum class RNKind : std::uint8_t { Bot, Top, Phi, Psi };

// Names one element of the free Heyting algebra on the generator `a`:
// bottom, top, or one of the ladder formulas phi_n / psi_n (n >= 1).
struct RNIndex {
  RNKind kind = RNKind::Bot;
  std::uint32_t rank = 0;  // 0 for Bot and Top

  static constexpr RNIndex bot() { return {RNKind::Bot, 0}; }
  static constexpr RNIndex top() { return {RNKind::Top, 0}; }
  static RNIndex phi(std::uint32_t n);
  static RNIndex psi(std::uint32_t n);

  bool is_bot() const { return kind == RNKind::Bot; }
  bool is_top() const { return kind == RNKind::Top; }
  bool is_phi() const { return kind == RNKind::Phi; }
  bool is_psi() const { return kind == RNKind::Psi; }

  friend bool operator==(const RNIndex&, const RNIndex&) = default;
};

// Text form: bot, top, phi<k>, psi<k>.
std::string to_string(RNIndex idx);
RNIndex parse_rn_index(std::string_view text);
std::ostream& operator<<(std::ostream& os, RNIndex idx);

}  // namespace ipc1
