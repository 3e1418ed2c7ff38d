// Copyright 2026 The bipgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIPGAME_GAME_TABLE_HPP
#define BIPGAME_GAME_TABLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipgame/errors.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

enum class GameKind { fan, an, difference, custom };

inline const char* to_string(GameKind kind) {
  switch (kind) {
    case GameKind::fan: return "fan";
    case GameKind::an: return "an";
    case GameKind::difference: return "diff";
    case GameKind::custom: return "custom";
  }
  return "custom";
}

struct GameDescriptor {
  GameKind kind = GameKind::custom;
  std::optional<Rational> delta;
  std::optional<unsigned> horizon;
};

/// Characteristic function of a signature-symmetric TU game on a complete
/// bipartite network, stored by signature (k, m) with 0 <= k <= |K| and
/// 0 <= m <= |M|. The value of any of the 2^n coalitions is a lookup.
class GameTable {
 public:
  GameTable(unsigned k_size, unsigned m_size, GameDescriptor descriptor, std::vector<Rational> values)
      : k_size_(k_size), m_size_(m_size), descriptor_(std::move(descriptor)), values_(std::move(values)) {
    if (values_.size() != std::size_t{k_size_ + 1} * (m_size_ + 1))
      throw InputError("game table needs (|K|+1)(|M|+1) values");
    if (values_.front() != 0) throw InputError("game table must assign 0 to the empty coalition");
  }

  template <class F>
  static GameTable tabulate(unsigned k_size, unsigned m_size, GameDescriptor descriptor, F&& value_of) {
    std::vector<Rational> values;
    values.reserve(std::size_t{k_size + 1} * (m_size + 1));
    for (unsigned k = 0; k <= k_size; ++k)
      for (unsigned m = 0; m <= m_size; ++m) values.push_back(value_of(Signature{k, m}));
    return GameTable(k_size, m_size, std::move(descriptor), std::move(values));
  }

  unsigned k_size() const { return k_size_; }
  unsigned m_size() const { return m_size_; }
  unsigned players() const { return k_size_ + m_size_; }
  Signature grand() const { return {k_size_, m_size_}; }
  const GameDescriptor& descriptor() const { return descriptor_; }

  const Rational& operator()(const Signature& s) const {
    if (s.k > k_size_ || s.m > m_size_) throw InputError("signature " + to_string(s) + " outside the game");
    return values_[std::size_t{s.k} * (m_size_ + 1) + s.m];
  }
  const Rational& operator()(const Coalition& c) const { return (*this)(c.signature()); }

  /// Copy with one entry replaced; used to build counterexample games.
  GameTable with_value(const Signature& s, Rational value) const {
    GameTable copy = *this;
    (void)copy(s);
    copy.values_[std::size_t{s.k} * (m_size_ + 1) + s.m] = std::move(value);
    copy.descriptor_.kind = GameKind::custom;
    return copy;
  }

  bool matches(const BipartiteNetwork& network) const {
    return network.k_size() == k_size_ && network.m_size() == m_size_;
  }

 private:
  unsigned k_size_;
  unsigned m_size_;
  GameDescriptor descriptor_;
  std::vector<Rational> values_;
};

}  // namespace bipgame

#endif  // BIPGAME_GAME_TABLE_HPP
