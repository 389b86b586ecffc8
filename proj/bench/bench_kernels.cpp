#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "bicomplex/symcore/kernels.hpp"

namespace {

using bicomplex::symcore::MultiIndex;
using bicomplex::symcore::Poly;
using bicomplex::symcore::Rational;
using bicomplex::symcore::VarRef;

/// Random polynomial in x, y^0..y^2 and their first and second jets (n = 2).
Poly random_poly(std::mt19937_64& gen, int terms) {
  std::vector<VarRef> vars = {VarRef::base(0), VarRef::base(1)};
  for (std::size_t i = 0; i < 3; ++i) {
    MultiIndex lambda(2);
    vars.push_back(VarRef::jet(i, lambda));
    for (std::size_t mu = 0; mu < 2; ++mu) {
      vars.push_back(VarRef::jet(i, lambda.raised(mu)));
      vars.push_back(VarRef::jet(i, lambda.raised(mu).raised(1)));
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(1, 3);
  Poly out;
  for (int k = 0; k < terms; ++k) {
    const int c = coeff(gen);
    Poly t(Rational(c == 0 ? 1 : c));
    for (int f = 0; f < 3; ++f) t = t * Poly::variable(vars[pick(gen)], exp(gen));
    out = out + t;
  }
  return out;
}

template <typename F>
double seconds(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / reps;
}

}  // namespace

int main() {
  namespace k = bicomplex::symcore::kernels;
  std::mt19937_64 gen(20261018);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-18s %8s %12s %12s %8s %s\n", "kernel", "terms", "serial_s", "parallel_s",
              "speedup", "equal");
  for (int terms : {50, 150, 400}) {
    const Poly a = random_poly(gen, terms);
    const Poly b = random_poly(gen, terms);
    const int reps = terms >= 400 ? 1 : 3;
    Poly rs, rp;
    const double ts = seconds([&] { rs = k::multiply_serial(a, b); }, reps);
    const double tp = seconds([&] { rp = k::multiply_parallel(a, b); }, reps);
    std::printf("%-18s %8zu %12.6f %12.6f %8.2f %s\n", "multiply", a.size(), ts, tp, ts / tp,
                rs == rp ? "yes" : "NO");
    const Poly big = rs;
    Poly ds, dp;
    const double us = seconds([&] { ds = k::total_derivative_serial(big, 1); }, 3);
    const double up = seconds([&] { dp = k::total_derivative_parallel(big, 1); }, 3);
    std::printf("%-18s %8zu %12.6f %12.6f %8.2f %s\n", "total_derivative", big.size(), us, up,
                us / up, ds == dp ? "yes" : "NO");
    if (!(rs == rp) || !(ds == dp)) return 1;
  }
  return 0;
}
