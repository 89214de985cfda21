#include "fmpart/gain_state.hpp"

#include <stdexcept>

namespace fmpart {

int compute_gain(const Hypergraph& h, const Partition& p, CellId c) {
  const Block from = p.side(c);
  const Block to = other(from);
  int gain = 0;
  for (NetId n : h.nets_of(c)) {
    if (h.pins(n).size() < 2) continue;
    if (p.pins_in(n, from) == 1) ++gain;
    if (p.pins_in(n, to) == 0) --gain;
  }
  return gain;
}

GainState::GainState(const Hypergraph& h, const Partition& p)
    : gain_(h.cell_count(), 0),
      locked_(h.cell_count(), 0),
      bucket_{GainBucket(static_cast<int>(h.max_cell_degree()), h.cell_count()),
              GainBucket(static_cast<int>(h.max_cell_degree()), h.cell_count())},
      unlocked_(h.cell_count()) {
  for (CellId c = 0; c < h.cell_count(); ++c) {
    gain_[c] = compute_gain(h, p, c);
    bucket_[index(p.side(c))].insert(c, gain_[c]);
  }
}

void GainState::bump(CellId c, int delta) {
  if (locked_[c]) return;
  gain_[c] += delta;
  // An unlocked cell sits in exactly one bucket; try the one it is in.
  GainBucket& b = bucket_[0].contains(c) ? bucket_[0] : bucket_[1];
  b.relocate(c, gain_[c]);
}

void GainState::move_and_update(const Hypergraph& h, Partition& p, CellId c) {
  if (locked_[c]) throw std::logic_error("cell " + std::to_string(c) + " is locked");
  const Block from = p.side(c);
  const Block to = other(from);
  locked_[c] = 1;
  --unlocked_;
  bucket_[index(from)].remove(c);

  for (NetId n : h.nets_of(c)) {
    const auto pins = h.pins(n);
    if (pins.size() < 2) continue;
    const std::uint32_t to_before = p.pins_in(n, to);
    if (to_before == 0) {
      for (CellId x : pins) bump(x, +1);
    } else if (to_before == 1) {
      for (CellId x : pins) {
        if (p.side(x) == to) {
          bump(x, -1);
          break;
        }
      }
    }
    const std::uint32_t from_after = p.pins_in(n, from) - 1;
    if (from_after == 0) {
      for (CellId x : pins) {
        if (x != c) bump(x, -1);
      }
    } else if (from_after == 1) {
      for (CellId x : pins) {
        if (x != c && p.side(x) == from) {
          bump(x, +1);
          break;
        }
      }
    }
  }
  p.apply_move(h, c);
}

std::string GainState::audit(const Hypergraph& h, const Partition& p) const {
  const int bound = static_cast<int>(h.max_cell_degree());
  for (CellId c = 0; c < h.cell_count(); ++c) {
    const Block b = p.side(c);
    if (locked_[c]) {
      if (bucket_[0].contains(c) || bucket_[1].contains(c)) {
        return "locked cell " + std::to_string(c) + " still bucketed";
      }
      continue;
    }
    const int fresh = compute_gain(h, p, c);
    if (gain_[c] != fresh) {
      return "cell " + std::to_string(c) + " stored gain " + std::to_string(gain_[c]) + " != " +
             std::to_string(fresh);
    }
    if (fresh < -bound || fresh > bound) return "gain bound violated at cell " + std::to_string(c);
    if (!bucket_[index(b)].contains(c) || bucket_[index(other(b))].contains(c)) {
      return "cell " + std::to_string(c) + " in wrong bucket";
    }
    if (bucket_[index(b)].gain_of(c) != fresh) return "bucket slot disagrees for cell " + std::to_string(c);
  }
  for (const auto& bk : bucket_) {
    if (auto msg = bk.audit(); !msg.empty()) return msg;
  }
  return {};
}

}  // namespace fmpart
