#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace bicomplex::symcore {

/// Largest supported number of base coordinates.
inline constexpr std::size_t kMaxBase = 8;

/// Symmetric multi-index over n base coordinates: counts[mu] is the number
/// of derivatives taken along x^mu.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::size_t n, std::initializer_list<unsigned> counts);

  static MultiIndex unit(std::size_t n, std::size_t mu);

  std::size_t n() const { return n_; }
  unsigned order() const { return order_; }
  unsigned operator[](std::size_t mu) const { return counts_[mu]; }

  /// Lambda + 1_mu.
  MultiIndex raised(std::size_t mu) const;
  /// Lambda - 1_mu; Lambda[mu] must be positive.
  MultiIndex lowered(std::size_t mu) const;
  /// Lambda + other (componentwise).
  MultiIndex plus(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// Graded: lower order first, then earlier coordinates first
  /// (t < x < tt < tx < xx for a (t, x) chart).
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b);

 private:
  std::array<std::uint8_t, kMaxBase> counts_{};
  std::uint8_t n_ = 0;
  std::uint16_t order_ = 0;
};

/// A coordinate on the infinite jet bundle: a base coordinate x^mu, or a jet
/// coordinate z^i_Lambda (|Lambda| = 0 being the field y^i itself).
class VarRef {
 public:
  enum class Kind : std::uint8_t { Base = 0, Jet = 1 };

  static VarRef base(std::size_t mu);
  static VarRef jet(std::size_t field, MultiIndex lambda);
  static VarRef field(std::size_t field, std::size_t n) {
    return jet(field, MultiIndex(n));
  }

  Kind kind() const { return kind_; }
  bool is_base() const { return kind_ == Kind::Base; }
  bool is_jet() const { return kind_ == Kind::Jet; }
  /// mu for Base, i for Jet.
  std::size_t index() const { return index_; }
  const MultiIndex& lambda() const { return lambda_; }
  unsigned jet_order() const { return is_jet() ? lambda_.order() : 0; }

  friend bool operator==(const VarRef&, const VarRef&) = default;

  /// Base variables before Jet variables; Base by mu; Jet by (i, Lambda).
  friend std::strong_ordering operator<=>(const VarRef& a, const VarRef& b);

 private:
  Kind kind_ = Kind::Base;
  std::uint16_t index_ = 0;
  MultiIndex lambda_;
};

}  // namespace bicomplex::symcore
