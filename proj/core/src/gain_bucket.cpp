#include "fmpart/gain_bucket.hpp"

#include <stdexcept>

namespace fmpart {

namespace {

std::size_t uniform_below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

GainBucket::GainBucket(int max_gain, std::size_t cell_capacity)
    : bound_(max_gain), slots_(static_cast<std::size_t>(2 * max_gain + 1)), cells_(cell_capacity) {
  if (max_gain < 0) throw std::invalid_argument("gain bound must be nonnegative");
}

std::size_t GainBucket::slot_index(int gain) const {
  if (gain < -bound_ || gain > bound_) {
    throw std::out_of_range("gain " + std::to_string(gain) + " outside [-" + std::to_string(bound_) +
                            ", " + std::to_string(bound_) + "]");
  }
  return static_cast<std::size_t>(gain + bound_);
}

void GainBucket::link(CellId c, int gain) {
  const std::size_t s = slot_index(gain);
  Slot& slot = slots_[s];
  CellEntry& e = cells_[c];
  e.gain = gain;
  e.prev = slot.tail;
  e.next = kNone;
  if (slot.tail != kNone) cells_[slot.tail].next = c;
  else slot.head = c;
  slot.tail = c;
  e.pos = slot.members.size();
  slot.members.push_back(c);
  if (static_cast<int>(s) > max_slot_) max_slot_ = static_cast<int>(s);
}

void GainBucket::unlink(CellId c) {
  CellEntry& e = cells_[c];
  const std::size_t s = slot_index(e.gain);
  Slot& slot = slots_[s];
  if (e.prev != kNone) cells_[e.prev].next = e.next;
  else slot.head = e.next;
  if (e.next != kNone) cells_[e.next].prev = e.prev;
  else slot.tail = e.prev;
  e.prev = e.next = kNone;

  const CellId last = slot.members.back();
  slot.members[e.pos] = last;
  cells_[last].pos = e.pos;
  slot.members.pop_back();

  if (static_cast<int>(s) == max_slot_) {
    while (max_slot_ >= 0 && slots_[static_cast<std::size_t>(max_slot_)].head == kNone) --max_slot_;
  }
}

void GainBucket::insert(CellId c, int gain) {
  if (c >= cells_.size()) throw std::out_of_range("cell id beyond bucket capacity");
  if (cells_[c].present) throw std::logic_error("cell already in bucket");
  link(c, gain);
  cells_[c].present = true;
  ++size_;
}

void GainBucket::remove(CellId c) {
  if (!contains(c)) throw std::logic_error("cell not in bucket");
  unlink(c);
  cells_[c].present = false;
  --size_;
}

void GainBucket::relocate(CellId c, int new_gain) {
  if (!contains(c)) throw std::logic_error("cell not in bucket");
  if (cells_[c].gain == new_gain) return;
  slot_index(new_gain);
  unlink(c);
  link(c, new_gain);
}

std::optional<CellId> GainBucket::select_max(TiePolicy policy, Rng& rng) const {
  if (max_slot_ < 0) return std::nullopt;
  const Slot& slot = slots_[static_cast<std::size_t>(max_slot_)];
  switch (policy) {
    case TiePolicy::Fifo: return slot.head;
    case TiePolicy::Lifo: return slot.tail;
    case TiePolicy::Random: break;
  }
  if (slot.members.size() == 1) return slot.members.front();
  return slot.members[uniform_below(rng, slot.members.size())];
}

std::string GainBucket::audit() const {
  std::size_t total = 0;
  int highest = -1;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const Slot& slot = slots_[s];
    const int gain = static_cast<int>(s) - bound_;
    std::size_t walked = 0;
    CellId prev = kNone;
    for (CellId c = slot.head; c != kNone; c = cells_[c].next) {
      const CellEntry& e = cells_[c];
      if (!e.present) return "absent cell " + std::to_string(c) + " linked in slot " + std::to_string(gain);
      if (e.gain != gain) return "cell " + std::to_string(c) + " stored gain disagrees with slot";
      if (e.prev != prev) return "broken back link at cell " + std::to_string(c);
      if (e.pos >= slot.members.size() || slot.members[e.pos] != c) {
        return "member array out of sync at cell " + std::to_string(c);
      }
      prev = c;
      if (++walked > cells_.size()) return "cycle in slot " + std::to_string(gain);
    }
    if (prev != slot.tail) return "tail mismatch in slot " + std::to_string(gain);
    if (walked != slot.members.size()) return "member count mismatch in slot " + std::to_string(gain);
    if (walked > 0) highest = static_cast<int>(s);
    total += walked;
  }
  if (total != size_) return "size counter mismatch";
  if (highest != max_slot_) return "max pointer is stale";
  std::size_t flagged = 0;
  for (const CellEntry& e : cells_) flagged += e.present ? 1 : 0;
  if (flagged != size_) return "presence flags disagree with list contents";
  return {};
}

GainBucket::Cursor::Cursor(const GainBucket& bucket, TiePolicy policy, Rng& rng)
    : bucket_(&bucket), policy_(policy), rng_(&rng), slot_(bucket.max_slot_) {
  if (slot_ >= 0) enter_slot();
}

void GainBucket::Cursor::enter_slot() {
  const Slot& slot = bucket_->slots_[static_cast<std::size_t>(slot_)];
  visited_in_slot_ = 0;
  switch (policy_) {
    case TiePolicy::Fifo: link_ = slot.head; break;
    case TiePolicy::Lifo: link_ = slot.tail; break;
    case TiePolicy::Random: displaced_.clear(); break;
  }
}

CellId GainBucket::Cursor::member_at(const Slot& slot, std::size_t i) const {
  const auto it = displaced_.find(i);
  return it != displaced_.end() ? it->second : slot.members[i];
}

bool GainBucket::Cursor::advance() {
  while (slot_ >= 0) {
    const Slot& slot = bucket_->slots_[static_cast<std::size_t>(slot_)];
    if (policy_ == TiePolicy::Random) {
      const std::size_t n = slot.members.size();
      if (visited_in_slot_ < n) {
        const std::size_t i = visited_in_slot_;
        const std::size_t j = i + uniform_below(*rng_, n - i);
        const CellId picked = member_at(slot, j);
        if (j != i) {
          const CellId moved = member_at(slot, i);
          displaced_[j] = moved;
        }
        seen_.push_back(picked);
        ++visited_in_slot_;
        return true;
      }
    } else if (link_ != kNone) {
      seen_.push_back(link_);
      const CellEntry& e = bucket_->cells_[link_];
      link_ = policy_ == TiePolicy::Fifo ? e.next : e.prev;
      return true;
    }
    do {
      --slot_;
    } while (slot_ >= 0 && bucket_->slots_[static_cast<std::size_t>(slot_)].head == kNone);
    if (slot_ >= 0) enter_slot();
  }
  return false;
}

CellId GainBucket::Cursor::at(std::size_t k) {
  while (seen_.size() <= k) {
    if (!advance()) return kNone;
  }
  return seen_[k];
}

}  // namespace fmpart
