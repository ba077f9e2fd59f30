#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace opep {

// 1-indexed node id, matching the labels of the bundled board graphs.
using NodeId = int;

// Dense bitset over node ids 1..capacity. Binary set operations require both
// operands to share the same capacity (the owning graph's node count).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int capacity)
      : capacity_(capacity), words_(static_cast<std::size_t>(capacity) / 64 + 1, 0) {}
  NodeSet(int capacity, std::initializer_list<NodeId> ids) : NodeSet(capacity) {
    for (NodeId v : ids) insert(v);
  }

  int capacity() const { return capacity_; }

  bool contains(NodeId v) const {
    return v >= 1 && v <= capacity_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(NodeId v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
  void erase(NodeId v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int count = 0;
    for (auto w : words_) count += std::popcount(w);
    return count;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  NodeSet& operator|=(const NodeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // Set difference.
  NodeSet& operator-=(const NodeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  // Ascending node ids.
  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  // Smallest member, or 0 when empty.
  NodeId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return 0;
  }

 private:
  static std::size_t word(NodeId v) { return static_cast<std::size_t>(v) / 64; }
  static unsigned bit(NodeId v) { return static_cast<unsigned>(v) % 64; }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace opep
