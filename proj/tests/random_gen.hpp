#pragma once

#include <random>

#include "aqp/laurent.hpp"
#include "aqp/ore.hpp"
#include "aqp/ratfun.hpp"

namespace aqp::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  template <int N>
  Poly<N> poly(int max_deg, int max_terms, int coeff = 5) {
    std::vector<typename Poly<N>::Term> raw;
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      typename Poly<N>::Exponents e{};
      for (int i = 0; i < N; ++i) e[i] = uniform(0, max_deg);
      raw.push_back({Poly<N>::pack(e), Integer(uniform(-coeff, coeff))});
    }
    return Poly<N>::from_terms(std::move(raw));
  }

  template <int N>
  Poly<N> nonzero_poly(int max_deg, int max_terms, int coeff = 5) {
    for (;;) {
      Poly<N> p = poly<N>(max_deg, max_terms, coeff);
      if (!p.is_zero()) return p;
    }
  }

  BiPoly bipoly(int max_deg = 3, int max_terms = 4) { return poly<2>(max_deg, max_terms); }

  RatFun ratfun(int max_deg = 2, int max_terms = 3) {
    return RatFun(poly<2>(max_deg, max_terms), nonzero_poly<2>(max_deg, max_terms));
  }
  RatFun nonzero_ratfun(int max_deg = 2, int max_terms = 3) {
    return RatFun(nonzero_poly<2>(max_deg, max_terms),
                  nonzero_poly<2>(max_deg, max_terms));
  }

  OreOp ore(int max_order, int max_deg = 1, int max_terms = 2) {
    std::vector<RatFun> c;
    const int d = uniform(0, max_order);
    for (int k = 0; k <= d; ++k) c.push_back(ratfun(max_deg, max_terms));
    return OreOp(std::move(c));
  }
  OreOp nonzero_ore(int min_order, int max_order, int max_deg = 1, int max_terms = 2) {
    std::vector<RatFun> c;
    const int d = uniform(min_order, max_order);
    for (int k = 0; k < d; ++k) c.push_back(ratfun(max_deg, max_terms));
    c.push_back(nonzero_ratfun(max_deg, max_terms));
    return OreOp(std::move(c));
  }

  LaurentPoly laurent(int span = 4, int max_terms = 4) {
    std::vector<LaurentPoly::Term> raw;
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Rational c(uniform(-5, 5), uniform(1, 3));
      c.canonicalize();
      raw.push_back({uniform(-span, span), c});
    }
    return LaurentPoly::from_terms(std::move(raw));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace aqp::testing
