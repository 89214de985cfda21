#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fmpart/types.hpp"

namespace fmpart {

/// Bucket-sorted store of cells keyed by gain in [-max_gain, +max_gain].
///
/// Each gain slot holds an intrusive doubly-linked list in insertion order
/// (head = oldest) for FIFO/LIFO selection, mirrored by a dense member array
/// so a uniformly random pick costs O(1). A per-cell locator makes removal
/// O(1). The max pointer only moves down by linear scan when its slot empties.
class GainBucket {
  struct Slot;

 public:
  static constexpr CellId kNone = static_cast<CellId>(-1);

  GainBucket() = default;
  GainBucket(int max_gain, std::size_t cell_capacity);

  int max_gain_bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(CellId c) const { return c < cells_.size() && cells_[c].present; }
  int gain_of(CellId c) const { return cells_[c].gain; }

  /// Highest nonempty gain index, or nullopt when empty.
  std::optional<int> max_gain() const noexcept {
    if (max_slot_ < 0) return std::nullopt;
    return max_slot_ - bound_;
  }

  /// Throws std::out_of_range if |gain| exceeds the bound, std::logic_error
  /// if `c` is already present.
  void insert(CellId c, int gain);
  void remove(CellId c);
  void relocate(CellId c, int new_gain);

  /// A cell at the max index chosen by `policy`, or nullopt when empty.
  std::optional<CellId> select_max(TiePolicy policy, Rng& rng) const;

  /// Full-scan consistency check. Returns an empty string when every list is
  /// well-linked, mirrors its member array, and the max pointer is exact.
  std::string audit() const;

  /// Lazily materialized nonincreasing-gain ordering of the bucket contents.
  /// Within a slot, FIFO walks head to tail, LIFO tail to head, and Random
  /// draws members in uniformly random order (lazy Fisher-Yates, O(1) per
  /// cell drawn). Valid only while the bucket is not modified.
  class Cursor {
   public:
    Cursor(const GainBucket& bucket, TiePolicy policy, Rng& rng);
    /// k-th cell of the ordering, or kNone past the end.
    CellId at(std::size_t k);

   private:
    bool advance();
    void enter_slot();
    CellId member_at(const Slot& slot, std::size_t i) const;

    const GainBucket* bucket_;
    TiePolicy policy_;
    Rng* rng_;
    int slot_;
    std::size_t visited_in_slot_ = 0;
    std::unordered_map<std::size_t, CellId> displaced_;  // lazy shuffle state
    CellId link_ = kNone;
    std::vector<CellId> seen_;
  };

 private:
  struct CellEntry {
    CellId prev = kNone;
    CellId next = kNone;
    int gain = 0;
    std::size_t pos = 0;
    bool present = false;
  };
  struct Slot {
    CellId head = kNone;
    CellId tail = kNone;
    std::vector<CellId> members;
  };

  std::size_t slot_index(int gain) const;
  void link(CellId c, int gain);
  void unlink(CellId c);

  int bound_ = 0;
  int max_slot_ = -1;
  std::size_t size_ = 0;
  std::vector<Slot> slots_;
  std::vector<CellEntry> cells_;
};

}  // namespace fmpart
