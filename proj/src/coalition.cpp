#include "coopet/coalition.hpp"

#include <stdexcept>

namespace coopet {

Coalition Coalition::from_mask(Mask m) {
  if (m >> kMaxPlayers)
    throw std::out_of_range("coalition mask uses a player id beyond " +
                            std::to_string(kMaxPlayers));
  return Coalition(m);
}

Coalition Coalition::from_ids(std::span<const int> ids) {
  Mask m = 0;
  for (int id : ids) {
    if (id < 1 || id > kMaxPlayers)
      throw std::out_of_range("player id " + std::to_string(id) + " out of range 1.." +
                              std::to_string(kMaxPlayers));
    m |= Mask{1} << (id - 1);
  }
  return Coalition(m);
}

Coalition Coalition::of(std::initializer_list<int> ids) {
  return from_ids(std::span<const int>(ids.begin(), ids.size()));
}

Coalition Coalition::single(int id) { return from_ids(std::span<const int>(&id, 1)); }

Coalition Coalition::full(int n) {
  if (n < 0 || n > kMaxPlayers)
    throw std::out_of_range("player count out of range 0.." + std::to_string(kMaxPlayers));
  if (n == 0) return Coalition(0);
  return Coalition((Mask{1} << (n - 1) << 1) - 1);
}

bool Coalition::contains(int id) const {
  if (id < 1 || id > kMaxPlayers) return false;
  return (mask_ >> (id - 1)) & 1;
}

int Coalition::min_member() const {
  if (mask_ == 0) throw std::invalid_argument("min_member of the empty coalition");
  return std::countr_zero(mask_) + 1;
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(size());
  Mask m = mask_;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Coalition Coalition::complement_in(int n) const {
  Coalition everyone = full(n);
  if (!subset_of(everyone))
    throw std::out_of_range("coalition has members outside 1.." + std::to_string(n));
  return everyone.minus(*this);
}

std::string to_string(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (int id : c.members()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(id);
  }
  out += "}";
  return out;
}

bool size_lex_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // The coalition holding the lowest differing player id comes first; with
  // equal sizes this matches lexicographic order on sorted member lists.
  Mask diff = a.mask() ^ b.mask();
  Mask low = diff & (~diff + 1);
  return (a.mask() & low) != 0;
}

}  // namespace coopet
