#ifndef BRUNONF_IDEAL_HPP
#define BRUNONF_IDEAL_HPP

#include <map>
#include <memory>
#include <vector>

#include "brunonf/automorphism.hpp"
#include "brunonf/series.hpp"

namespace brunonf {

class LogDerivation;

// Reduced-row-echelon basis of the degree-<=d slice of an ideal, over the
// graded-lex monomial list of degree <= d.
struct SliceBasis {
  int degree = 0;
  std::vector<Exponent> monomials;  // graded-lex, deg <= degree
  // echelon rows keyed by pivot monomial; each row is a sparse map
  // monomial -> coefficient with leading coefficient 1
  std::map<Exponent, std::map<Exponent, Scalar, GradedLex>, GradedLex> rows;
  bool heuristic = false;  // float-kind rank decisions
  int rank() const { return (int)rows.size(); }
};

// Finitely generated ideal at truncation order N; every predicate is a
// statement mod m^N answered by graded linear algebra over the scalar field.
class TruncatedIdeal {
public:
  TruncatedIdeal() = default;
  TruncatedIdeal(int n, int order, ScalarKind kind) : n_(n), order_(order), kind_(kind) {}
  TruncatedIdeal(int n, int order, ScalarKind kind, std::vector<Series> gens);

  int dim() const { return n_; }
  int order() const { return order_; }
  ScalarKind kind() const { return kind_; }
  const std::vector<Series>& generators() const { return gens_; }
  bool is_zero_ideal(int N) const;

  const SliceBasis& graded_slice_basis(int d) const;

  bool contains(const Series& f, int N) const;

  // Canonical coset representative: f minus its projection onto the degree
  // < N slice of the ideal. contains(f, N) iff reduce(f, N) is zero.
  Series reduce(const Series& f, int N) const;

  TruncatedIdeal pullback(const Automorphism& phi, int N) const;

  TruncatedIdeal sum(const TruncatedIdeal& other, int N) const;

  // Smallest ideal containing this one that is stable under d, mod m^N.
  TruncatedIdeal differential_closure(const LogDerivation& d, int N) const;

  TruncatedIdeal truncate(int N) const;

private:
  int n_ = 0;
  int order_ = 0;
  ScalarKind kind_ = ScalarKind::Rational;
  std::vector<Series> gens_;  // nonzero, graded-lex canonical order
  mutable std::map<int, SliceBasis> slice_cache_;
};

bool ideal_equal(const TruncatedIdeal& a, const TruncatedIdeal& b, int N);

}  // namespace brunonf

#endif
