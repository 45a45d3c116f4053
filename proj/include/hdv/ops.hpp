#pragma once

// The bipolar multiply-add-permute operation set: binding (element-wise
// multiplication), bundling (element-wise addition), cyclic permutation,
// sign quantization, and the cosine/dot similarity measures.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "hdv/hypervector.hpp"
#include "hdv/random.hpp"

namespace hdv {

enum class TieBreakKind { Bias, Random, Auxiliary };

/// Tie-breaking policy for the element-wise majority function. Ties occur on
/// coordinates whose operand sum is zero (only possible for even operand
/// counts); handling is always explicit, never silent.
class TieBreak {
 public:
  /// Ties resolve to +1.
  static TieBreak bias() { return TieBreak(TieBreakKind::Bias, std::nullopt); }

  /// Ties resolve by a seeded coin flip (the majority call takes an Rng).
  static TieBreak random() { return TieBreak(TieBreakKind::Random, std::nullopt); }

  /// Ties resolve to the corresponding coordinate of a fixed bipolar vector.
  static TieBreak auxiliary(Hypervector aux);

  [[nodiscard]] TieBreakKind kind() const noexcept { return kind_; }
  [[nodiscard]] const Hypervector& aux() const;

 private:
  TieBreak(TieBreakKind kind, std::optional<Hypervector> aux)
      : kind_(kind), aux_(std::move(aux)) {}

  TieBreakKind kind_;
  std::optional<Hypervector> aux_;
};

/// Element-wise product. Bipolar inputs give a bipolar result dissimilar to
/// both operands; binding is its own inverse.
Hypervector bind(const Hypervector& a, const Hypervector& b);

/// Element-wise sum, unquantized. Exactly associative and commutative for
/// bipolar inputs (integer-valued floats).
Hypervector bundle(const Hypervector& a, const Hypervector& b);

/// Element-wise difference: bundle_inverse(bundle(a, b), b) == a exactly.
Hypervector bundle_inverse(const Hypervector& s, const Hypervector& v);

/// Element-wise negation.
Hypervector negate(const Hypervector& a);

/// Rightward cyclic rotation by `shifts` positions (element i moves to
/// (i + shifts) mod d). Negative shifts invert: permute(permute(a, i), -i) == a.
Hypervector permute(const Hypervector& a, std::int64_t shifts);

/// Element-wise sign into {-1, +1}; zero maps to +1 so that quantization is
/// deterministic and matches the Bias tie-break.
Hypervector quantize(const Hypervector& a);

/// Cosine similarity in [-1, 1]. Throws for a zero-norm operand.
double cosine(const Hypervector& a, const Hypervector& b);

/// Inner product. For a multiset S of bipolar values, dot(S, V) / d estimates
/// the multiplicity of V in S.
double dot(const Hypervector& a, const Hypervector& b);

/// Element-wise majority over one or more bipolar operands: the sign of the
/// per-coordinate sum, ties resolved per TieBreak. `rng` is required exactly
/// when the policy is Random.
Hypervector majority(std::span<const Hypervector> operands, const TieBreak& tie,
                     Rng* rng = nullptr);

/// Left fold of the two-argument majority: result <- majority(result, next).
/// Unlike exact addition this is not associative; the divergence it
/// accumulates against the exact mean is measured by the bundle-error
/// experiment in the CLI.
Hypervector iterative_majority(std::span<const Hypervector> operands, const TieBreak& tie,
                               Rng* rng = nullptr);

inline Hypervector operator*(const Hypervector& a, const Hypervector& b) { return bind(a, b); }
inline Hypervector operator+(const Hypervector& a, const Hypervector& b) { return bundle(a, b); }
inline Hypervector operator-(const Hypervector& a, const Hypervector& b) {
  return bundle_inverse(a, b);
}
inline Hypervector operator-(const Hypervector& a) { return negate(a); }

}  // namespace hdv
