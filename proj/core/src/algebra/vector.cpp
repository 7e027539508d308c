#include "ipr/algebra/vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

namespace {

void require_same_shape(const Vector& a, const Vector& b, std::string_view what) {
  require_same_ring(a.ring(), b.ring(), what);
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

}  // namespace

Vector::Vector(GroundRing ring, std::vector<Scalar> coords) : ring_(ring), coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("vector of dimension 0");
  for (const auto& c : coords_) require_same_ring(ring_, c.ring(), "vector coordinate");
}

Vector Vector::zero(const GroundRing& ring, std::size_t dim) {
  return Vector(ring, std::vector<Scalar>(dim, Scalar::zero(ring)));
}

Vector Vector::basis(const GroundRing& ring, std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Scalar> c(dim, Scalar::zero(ring));
  c[index] = Scalar::one(ring);
  return Vector(ring, std::move(c));
}

Vector Vector::parse(const GroundRing& ring, std::size_t dim, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::vector<Scalar> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unterminated vector '" + std::string(text) + "'");
    auto body = text.substr(1, text.size() - 2);
    // Split on commas at bracket depth 0 so F_p[t] coefficient lists survive.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        coords.push_back(Scalar::parse(ring, body.substr(start, i - start)));
        start = i + 1;
      } else if (body[i] == '[') {
        ++depth;
      } else if (body[i] == ']') {
        --depth;
      }
    }
  } else {
    coords.push_back(Scalar::parse(ring, text));
  }
  if (coords.size() != dim)
    throw std::invalid_argument("expected a vector of dimension " + std::to_string(dim) + ", got '" +
                                std::string(text) + "'");
  return Vector(ring, std::move(coords));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Vector::operator-() const {
  std::vector<Scalar> c;
  c.reserve(coords_.size());
  for (const auto& x : coords_) c.push_back(-x);
  return Vector(ring_, std::move(c));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_shape(a, b, "vector addition");
  std::vector<Scalar> c;
  c.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
  return Vector(a.ring_, std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector operator*(const Scalar& a, const Vector& v) {
  std::vector<Scalar> c;
  c.reserve(v.dim());
  for (const auto& x : v.coords_) c.push_back(a * x);
  return Vector(v.ring_, std::move(c));
}

bool operator==(const Vector& a, const Vector& b) { return a.ring_ == b.ring_ && a.coords_ == b.coords_; }

bool operator<(const Vector& a, const Vector& b) {
  require_same_shape(a, b, "vector comparison");
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string Vector::to_string() const {
  if (coords_.size() == 1) return coords_[0].to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::string to_string(const Vector& v) { return v.to_string(); }

}  // namespace ipr
