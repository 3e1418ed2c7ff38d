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

#ifndef BIPGAME_NETWORK_HPP
#define BIPGAME_NETWORK_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "bipgame/errors.hpp"
#include "bipgame/matrix.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

enum class Side { K, M };

inline const char* to_string(Side side) { return side == Side::K ? "K" : "M"; }

inline Side opposite(Side side) { return side == Side::K ? Side::M : Side::K; }

/// Index of a node inside its network. K nodes come first (0..|K|-1), then M.
using NodeIndex = std::size_t;

/// Side counts (k_S, m_S) of a coalition. Every game in this library depends
/// on a coalition only through its signature.
struct Signature {
  unsigned k = 0;
  unsigned m = 0;

  unsigned size() const { return k + m; }
  std::uint64_t links() const { return std::uint64_t{k} * m; }
  unsigned count(Side side) const { return side == Side::K ? k : m; }

  /// Componentwise order: S subset of T implies signature(S) <= signature(T).
  bool within(const Signature& other) const { return k <= other.k && m <= other.m; }

  /// Signature after removing one member of `side`.
  Signature minus(Side side) const {
    return side == Side::K ? Signature{k - 1, m} : Signature{k, m - 1};
  }

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.k) + "," + std::to_string(s.m) + ")";
}

/// Complete bipartite network (K, M). The edge set is implied: every K node is
/// linked to every M node and there are no same-side links.
class BipartiteNetwork {
 public:
  BipartiteNetwork(std::vector<std::string> k_labels, std::vector<std::string> m_labels)
      : k_labels_(std::move(k_labels)), m_labels_(std::move(m_labels)) {
    if (k_labels_.empty() || m_labels_.empty())
      throw InputError("a complete bipartite network needs both sides nonempty");
    std::unordered_set<std::string> seen;
    for (const auto* side : {&k_labels_, &m_labels_}) {
      for (const auto& label : *side) {
        if (label.empty()) throw InputError("node labels must be nonempty");
        if (!seen.insert(label).second) throw InputError("duplicate node label '" + label + "'");
      }
    }
  }

  /// Auto-labelled network K1..Kk, M1..Mm.
  static BipartiteNetwork from_sizes(unsigned k, unsigned m) {
    std::vector<std::string> ks, ms;
    for (unsigned i = 1; i <= k; ++i) ks.push_back("K" + std::to_string(i));
    for (unsigned j = 1; j <= m; ++j) ms.push_back("M" + std::to_string(j));
    return BipartiteNetwork(std::move(ks), std::move(ms));
  }

  unsigned k_size() const { return static_cast<unsigned>(k_labels_.size()); }
  unsigned m_size() const { return static_cast<unsigned>(m_labels_.size()); }
  unsigned size() const { return k_size() + m_size(); }
  unsigned side_size(Side side) const { return side == Side::K ? k_size() : m_size(); }
  Signature signature() const { return {k_size(), m_size()}; }

  const std::vector<std::string>& k_labels() const { return k_labels_; }
  const std::vector<std::string>& m_labels() const { return m_labels_; }

  Side side(NodeIndex node) const {
    check(node);
    return node < k_labels_.size() ? Side::K : Side::M;
  }

  const std::string& label(NodeIndex node) const {
    check(node);
    return node < k_labels_.size() ? k_labels_[node] : m_labels_[node - k_labels_.size()];
  }

  std::optional<NodeIndex> find(std::string_view label) const {
    for (NodeIndex i = 0; i < size(); ++i)
      if (this->label(i) == label) return i;
    return std::nullopt;
  }

  NodeIndex index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw InputError("unknown node '" + std::string(label) + "'");
  }

  friend bool operator==(const BipartiteNetwork&, const BipartiteNetwork&) = default;

 private:
  void check(NodeIndex node) const {
    if (node >= size()) throw InputError("node index " + std::to_string(node) + " out of range");
  }

  std::vector<std::string> k_labels_;
  std::vector<std::string> m_labels_;
};

/// A subset of a network's nodes together with its signature. Members are
/// kept sorted, so the K members precede the M members.
class Coalition {
 public:
  Coalition() = default;

  const std::vector<NodeIndex>& members() const { return members_; }
  const Signature& signature() const { return signature_; }
  unsigned k_count() const { return signature_.k; }
  unsigned m_count() const { return signature_.m; }
  unsigned size() const { return signature_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(NodeIndex node) const {
    return std::binary_search(members_.begin(), members_.end(), node);
  }

  /// Side of a member; std::nullopt for non-members.
  std::optional<Side> side_of(NodeIndex node) const {
    if (!contains(node)) return std::nullopt;
    return node < network_k_ ? Side::K : Side::M;
  }

  Coalition without(NodeIndex node) const {
    Coalition c = *this;
    const auto it = std::lower_bound(c.members_.begin(), c.members_.end(), node);
    if (it == c.members_.end() || *it != node) return c;
    c.signature_ = c.signature_.minus(node < network_k_ ? Side::K : Side::M);
    c.members_.erase(it);
    return c;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  friend Coalition induce(const BipartiteNetwork&, std::span<const NodeIndex>);

  std::vector<NodeIndex> members_;
  Signature signature_;
  std::size_t network_k_ = 0;
};

/// Coalition induced by a set of node indices.
inline Coalition induce(const BipartiteNetwork& network, std::span<const NodeIndex> nodes) {
  Coalition c;
  c.network_k_ = network.k_size();
  for (NodeIndex node : nodes) {
    if (node >= network.size()) throw InputError("node index " + std::to_string(node) + " out of range");
    c.members_.push_back(node);
  }
  std::sort(c.members_.begin(), c.members_.end());
  c.members_.erase(std::unique(c.members_.begin(), c.members_.end()), c.members_.end());
  for (NodeIndex node : c.members_) (node < c.network_k_ ? c.signature_.k : c.signature_.m)++;
  return c;
}

/// Coalition induced by node labels. Unknown labels raise an InputError that
/// names the offending id.
inline Coalition induce(const BipartiteNetwork& network, std::span<const std::string> labels) {
  std::vector<NodeIndex> nodes;
  nodes.reserve(labels.size());
  for (const auto& label : labels) nodes.push_back(network.index_of(label));
  return induce(network, std::span<const NodeIndex>(nodes));
}

inline Coalition induce(const BipartiteNetwork& network, std::initializer_list<std::string> labels) {
  const std::vector<std::string> v(labels);
  return induce(network, std::span<const std::string>(v));
}

/// Coalition whose members are the set bits of `mask` (bit i = node i).
inline Coalition from_mask(const BipartiteNetwork& network, std::uint64_t mask) {
  std::vector<NodeIndex> nodes;
  for (NodeIndex i = 0; i < network.size(); ++i)
    if ((mask >> i) & 1u) nodes.push_back(i);
  return induce(network, std::span<const NodeIndex>(nodes));
}

inline Coalition grand_coalition(const BipartiteNetwork& network) {
  return from_mask(network, network.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << network.size()) - 1);
}

/// Adjacency matrix of the induced subnetwork, rows in member order:
/// [[0, 1], [1, 0]] with k_S x m_S all-ones off-diagonal blocks.
inline Matrix<std::int64_t> adjacency(const Coalition& coalition) {
  const Signature s = coalition.signature();
  Matrix<std::int64_t> g(s.size(), s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < s.size(); ++c)
      g(r, c) = ((r < s.k) != (c < s.k)) ? 1 : 0;
  return g;
}

/// sqrt(radicand), kept symbolic. For a complete bipartite coalition the
/// largest adjacency eigenvalue is sqrt(k_S m_S).
struct SpectralRadius {
  Integer radicand;

  /// delta < 1 / sqrt(radicand), decided exactly as radicand * delta^2 < 1.
  bool below_inverse(const Rational& delta) const { return Rational(radicand) * delta * delta < 1; }
  double approx() const { return std::sqrt(radicand.convert_to<double>()); }
};

inline SpectralRadius spectral_radius(const Signature& s) { return {Integer(s.links())}; }
inline SpectralRadius spectral_radius(const Coalition& c) { return spectral_radius(c.signature()); }

}  // namespace bipgame

#endif  // BIPGAME_NETWORK_HPP
