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


#include "ipc1/superint.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ipc1/error.hpp"
#include "ipc1/lattice.hpp"

namespace ipc1 {

bool IndexSet::contains(std::uint32_t n) const {
  return all || std::binary_search(members.begin(), members.end(), n);
}

std::string IndexSet::to_string() const {
  if (all) return "all";
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

Logic Logic::ipc() { return Logic(std::nullopt, IndexSet{}); }

Logic Logic::kc() { return with_axiom(RNIndex::psi(3)); }

Logic Logic::with_axiom(RNIndex axiom) {
  if (axiom.is_bot()) throw AxiomIsBot();
  if (axiom.is_top()) return ipc();
  IndexSet allowed{false, {}};
  for (std::uint32_t n = 1; n <= axiom.rank + 1; ++n) {
    if (satisfied_at_index(axiom, n)) allowed.members.push_back(n);
  }
  return Logic(axiom, std::move(allowed));
}

Logic Logic::parse(std::string_view text) {
  if (text == "ipc") return ipc();
  if (text == "kc") return kc();
  if (text.size() > 4 && (text.substr(0, 4) == "psi:" || text.substr(0, 4) == "phi:")) {
    std::uint32_t k = 0;
    const char* first = text.data() + 4;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 1) {
      return with_axiom(text[1] == 'h' ? RNIndex::phi(k) : RNIndex::psi(k));
    }
  }
  throw FormatError("unknown logic '" + std::string(text) + "' (ipc | kc | psi:<k> | phi:<k>)");
}

std::string Logic::name() const {
  if (!axiom_) return "ipc";
  if (is_kc()) return "kc";
  return (axiom_->is_phi() ? "phi:" : "psi:") + std::to_string(axiom_->rank);
}

IndexSet allowed_indices(const Logic& logic) { return logic.allowed(); }

bool admissible(const Logic& logic, const KripkeModel& m) {
  const auto h = model_indices(m);
  const IndexSet& allowed = logic.allowed();
  const bool ok = std::all_of(h.begin(), h.end(), [&](std::uint32_t n) { return allowed.contains(n); });
  // Directed models satisfy the weak excluded middle everywhere.
  if (logic.is_kc() && !ok && is_directed(m)) {
    throw std::logic_error("directed model with a model index above 3");
  }
  return ok;
}

bool is_valid_in(const Logic& logic, const Formula& f) {
  const RNIndex idx = rn_index(f);
  const IndexSet& allowed = logic.allowed();
  if (allowed.all) return idx.is_top();
  return std::all_of(allowed.members.begin(), allowed.members.end(),
                     [idx](std::uint32_t n) { return satisfied_at_index(idx, n); });
}

namespace {

// bot < top < psi1 < phi1 < psi2 < ...
int order_key(RNIndex x) {
  switch (x.kind) {
    case RNKind::Bot: return 0;
    case RNKind::Top: return 1;
    case RNKind::Psi: return 2 * static_cast<int>(x.rank);
    case RNKind::Phi: return 2 * static_cast<int>(x.rank) + 1;
  }
  return 0;
}

}  // namespace

std::vector<EquivalenceClass> classes(const Logic& logic) {
  const IndexSet& allowed = logic.allowed();
  if (allowed.all) throw BadParameters("classes: logic admits infinitely many model indices");
  const std::uint32_t max_index = allowed.members.back();

  std::vector<RNIndex> candidates = indices_up_to(max_index + 2);
  std::sort(candidates.begin(), candidates.end(),
            [](RNIndex x, RNIndex y) { return order_key(x) < order_key(y); });

  std::map<std::vector<bool>, std::size_t> slot;
  std::vector<EquivalenceClass> out;
  for (RNIndex idx : candidates) {
    std::vector<bool> pattern;
    for (std::uint32_t n : allowed.members) pattern.push_back(satisfied_at_index(idx, n));
    auto [it, fresh] = slot.try_emplace(pattern, out.size());
    if (fresh) out.push_back({pattern, {}, idx});
    out[it->second].members.push_back(idx);
  }

  // Brute-force confirmation at the base state of each canonical model.
  for (std::size_t i = 0; i < allowed.members.size(); ++i) {
    const std::uint32_t n = allowed.members[i];
    const KripkeModel h = canonical(n);
    const StateId base = h.id_of(std::to_string(n));
    for (const auto& cls : out) {
      for (RNIndex idx : cls.members) {
        if (check_brute(h, base, rn_formula(idx, max_index + 2)) != cls.pattern[i]) {
          throw std::logic_error("class pattern of " + to_string(idx) +
                                 " disagrees with evaluation on canonical model " +
                                 std::to_string(n));
        }
      }
    }
  }
  return out;
}

std::string classes_table(const Logic& logic, const std::vector<EquivalenceClass>& cls) {
  std::ostringstream os;
  os << "logic " << logic.name() << "  indices " << logic.allowed().to_string() << "  classes "
     << cls.size() << "\n";
  for (const auto& c : cls) {
    for (bool b : c.pattern) os << (b ? '1' : '0');
    os << "  " << to_string(c.representative) << "  [";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) os << ' ';
      os << to_string(c.members[i]);
    }
    os << "]\n";
  }
  return os.str();
}

bool check_in(const Logic& logic, const KripkeModel& m, StateId s, const Formula& f) {
  if (!admissible(logic, m)) {
    throw InadmissibleModel("model is not admissible for logic " + logic.name());
  }
  return check_fast(m, s, f);
}

}  // namespace ipc1
