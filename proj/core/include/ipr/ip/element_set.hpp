#pragma once

#include "ipr/algebra/vector.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ipr {

inline std::string render(std::int64_t v) { return std::to_string(v); }
inline std::string render(const Integer& v) { return v.get_str(10); }
inline std::string render(const Scalar& v) { return v.to_string(); }
inline std::string render(const Vector& v) { return v.to_string(); }

/// A finite set of group elements, stored sorted in canonical order.
template <class G>
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<G> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  bool contains(const G& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<G>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }
  ElementSet intersect(const ElementSet& other) const {
    std::vector<G> out;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                          std::back_inserter(out));
    return ElementSet(std::move(out));
  }
  ElementSet minus(const ElementSet& other) const {
    std::vector<G> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
    return ElementSet(std::move(out));
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<G> elems_;
};

/// The universe a set lives in: a whole finite group (exact verdicts) or a
/// finite window of an infinite group (window-limited verdicts).
template <class G>
struct Ambient {
  ElementSet<G> elements;
  bool complete = false;
  std::string description;
};

}  // namespace ipr
