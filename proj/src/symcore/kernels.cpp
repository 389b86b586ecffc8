#include "bicomplex/symcore/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <vector>

namespace bicomplex::symcore::kernels {

namespace {

std::atomic<std::size_t> g_threshold{4096};

// Appends the terms of d_mu applied to a single term.
void derivative_terms(const Term& t, std::size_t mu, std::vector<Term>& out) {
  for (const Factor& f : t.monomial.factors()) {
    const Rational c = t.coeff * Rational(static_cast<long>(f.exponent));
    if (f.var.is_base()) {
      if (f.var.index() == mu) out.push_back({t.monomial.lowered(f.var), c});
    } else {
      const VarRef next = VarRef::jet(f.var.index(), f.var.lambda().raised(mu));
      out.push_back({t.monomial.lowered(f.var) * Monomial::of(next), c});
    }
  }
}

// Merges per-chunk canonical lists in chunk order.
Poly merge_chunks(std::vector<std::vector<Term>>& chunks) {
  while (chunks.size() > 1) {
    std::vector<std::vector<Term>> next((chunks.size() + 1) / 2);
    const auto pairs = static_cast<long>(chunks.size() / 2);
#pragma omp parallel for schedule(static)
    for (long k = 0; k < pairs; ++k) {
      next[k] = merge_terms(chunks[2 * k], chunks[2 * k + 1]);
    }
    if (chunks.size() % 2 == 1) next.back() = std::move(chunks.back());
    chunks = std::move(next);
  }
  return chunks.empty() ? Poly() : canonical_poly(std::move(chunks.front()));
}

std::size_t chunk_count(std::size_t items) {
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
  return std::max<std::size_t>(1, std::min(items, 4 * threads));
}

}  // namespace

std::size_t parallel_threshold() { return g_threshold.load(); }
void set_parallel_threshold(std::size_t work) { g_threshold.store(work); }

Poly multiply_serial(const Poly& a, const Poly& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly multiply_parallel(const Poly& a, const Poly& b) {
  const auto& left = a.terms();
  const auto& right = b.terms();
  const std::size_t chunks = chunk_count(left.size());
  std::vector<std::vector<Term>> partial(chunks);
  const auto nchunks = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < nchunks; ++k) {
    const std::size_t begin = left.size() * static_cast<std::size_t>(k) / chunks;
    const std::size_t end = left.size() * static_cast<std::size_t>(k + 1) / chunks;
    std::vector<Term>& local = partial[k];
    local.reserve((end - begin) * right.size());
    for (std::size_t i = begin; i < end; ++i) {
      for (const Term& t : right) {
        local.push_back({left[i].monomial * t.monomial, left[i].coeff * t.coeff});
      }
    }
    canonicalize_terms(local);
  }
  return merge_chunks(partial);
}

Poly total_derivative_serial(const Poly& p, std::size_t mu) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) derivative_terms(t, mu, out);
  return Poly::from_terms(std::move(out));
}

Poly total_derivative_parallel(const Poly& p, std::size_t mu) {
  const auto& terms = p.terms();
  const std::size_t chunks = chunk_count(terms.size());
  std::vector<std::vector<Term>> partial(chunks);
  const auto nchunks = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < nchunks; ++k) {
    const std::size_t begin = terms.size() * static_cast<std::size_t>(k) / chunks;
    const std::size_t end = terms.size() * static_cast<std::size_t>(k + 1) / chunks;
    std::vector<Term>& local = partial[k];
    for (std::size_t i = begin; i < end; ++i) derivative_terms(terms[i], mu, local);
    canonicalize_terms(local);
  }
  return merge_chunks(partial);
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() * b.size() >= parallel_threshold() && !omp_in_parallel()) {
    return multiply_parallel(a, b);
  }
  return multiply_serial(a, b);
}

Poly total_derivative(const Poly& p, std::size_t mu) {
  if (p.size() >= parallel_threshold() && !omp_in_parallel()) {
    return total_derivative_parallel(p, mu);
  }
  return total_derivative_serial(p, mu);
}

}  // namespace bicomplex::symcore::kernels
