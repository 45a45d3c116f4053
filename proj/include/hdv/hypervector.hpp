#pragma once

// Dense hypervector value type. Elements are 32-bit floats so that bipolar
// values and their integer-valued bundles are stored exactly; similarity
// accumulates in double.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdv {

/// Default dimensionality used throughout the library and the CLI.
inline constexpr std::size_t kDefaultDim = 10000;

class Hypervector {
 public:
  Hypervector() = default;

  /// Zero vector of the given dimension.
  explicit Hypervector(std::size_t dim) : elems_(dim, 0.0f) {}

  explicit Hypervector(std::vector<float> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) {
      throw std::invalid_argument("Hypervector: dimension must be at least 1");
    }
  }

  static Hypervector zero(std::size_t dim) { return Hypervector(dim); }

  static Hypervector ones(std::size_t dim) {
    Hypervector v(dim);
    for (auto& e : v.elems_) e = 1.0f;
    return v;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return elems_.size(); }

  [[nodiscard]] float operator[](std::size_t i) const { return elems_[i]; }
  float& operator[](std::size_t i) { return elems_[i]; }

  [[nodiscard]] const std::vector<float>& elements() const noexcept { return elems_; }
  std::vector<float>& elements() noexcept { return elems_; }

  /// True when every element is exactly -1 or +1.
  [[nodiscard]] bool is_bipolar() const noexcept {
    for (float e : elems_) {
      if (e != 1.0f && e != -1.0f) return false;
    }
    return !elems_.empty();
  }

  [[nodiscard]] bool is_zero() const noexcept {
    for (float e : elems_) {
      if (e != 0.0f) return false;
    }
    return true;
  }

  friend bool operator==(const Hypervector&, const Hypervector&) = default;

 private:
  std::vector<float> elems_;
};

namespace detail {

inline void require_same_dim(const Hypervector& a, const Hypervector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace detail

}  // namespace hdv
