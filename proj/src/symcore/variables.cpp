#include "bicomplex/symcore/variables.hpp"

#include <string>

#include "bicomplex/errors.hpp"

namespace bicomplex::symcore {

MultiIndex::MultiIndex(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n == 0 || n > kMaxBase) {
    throw Error(ErrorCode::InvalidChart,
                "base dimension must be in 1.." + std::to_string(kMaxBase));
  }
}

MultiIndex::MultiIndex(std::size_t n, std::initializer_list<unsigned> counts)
    : MultiIndex(n) {
  if (counts.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "multi-index length mismatch");
  }
  std::size_t mu = 0;
  for (unsigned c : counts) {
    if (c > 255) throw Error(ErrorCode::InvalidArgument, "multi-index entry too large");
    counts_[mu++] = static_cast<std::uint8_t>(c);
    order_ = static_cast<std::uint16_t>(order_ + c);
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t mu) {
  return MultiIndex(n).raised(mu);
}

MultiIndex MultiIndex::raised(std::size_t mu) const {
  if (mu >= n_) throw Error(ErrorCode::InvalidArgument, "base index out of range");
  if (counts_[mu] == 255) throw Error(ErrorCode::InvalidArgument, "multi-index entry too large");
  MultiIndex out = *this;
  ++out.counts_[mu];
  ++out.order_;
  return out;
}

MultiIndex MultiIndex::lowered(std::size_t mu) const {
  if (mu >= n_ || counts_[mu] == 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot lower a zero multi-index entry");
  }
  MultiIndex out = *this;
  --out.counts_[mu];
  --out.order_;
  return out;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::InvalidArgument, "multi-index length mismatch");
  MultiIndex out = *this;
  for (std::size_t mu = 0; mu < n_; ++mu) {
    const unsigned c = unsigned{counts_[mu]} + other.counts_[mu];
    if (c > 255) throw Error(ErrorCode::InvalidArgument, "multi-index entry too large");
    out.counts_[mu] = static_cast<std::uint8_t>(c);
  }
  out.order_ = static_cast<std::uint16_t>(order_ + other.order_);
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  // Same order: more derivatives along earlier coordinates sorts first.
  for (std::size_t mu = 0; mu < a.n_; ++mu) {
    if (auto c = b.counts_[mu] <=> a.counts_[mu]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

VarRef VarRef::base(std::size_t mu) {
  if (mu >= kMaxBase) throw Error(ErrorCode::InvalidArgument, "base index out of range");
  VarRef v;
  v.kind_ = Kind::Base;
  v.index_ = static_cast<std::uint16_t>(mu);
  return v;
}

VarRef VarRef::jet(std::size_t field, MultiIndex lambda) {
  if (field > 0xffff) throw Error(ErrorCode::InvalidArgument, "field index out of range");
  VarRef v;
  v.kind_ = Kind::Jet;
  v.index_ = static_cast<std::uint16_t>(field);
  v.lambda_ = lambda;
  return v;
}

std::strong_ordering operator<=>(const VarRef& a, const VarRef& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  if (a.kind_ == VarRef::Kind::Base) return std::strong_ordering::equal;
  return a.lambda_ <=> b.lambda_;
}

}  // namespace bicomplex::symcore
