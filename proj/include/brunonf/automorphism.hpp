#ifndef BRUNONF_AUTOMORPHISM_HPP
#define BRUNONF_AUTOMORPHISM_HPP

#include <vector>

#include "brunonf/series.hpp"

namespace brunonf {

// Formal coordinate change x |-> (phi_1(x),...,phi_n(x)) with phi_i(0) = 0 and
// invertible linear part. Exponentials of logarithmic derivations give the
// logarithmic special case phi_i = x_i * u_i; general linear maps (e.g.
// x |-> x + i y) are also allowed since ideals get pulled back through them.
class Automorphism {
public:
  Automorphism() = default;
  static Automorphism identity(int n, int order, ScalarKind kind);
  static Automorphism from_images(std::vector<Series> images);

  int dim() const { return n_; }
  int order() const { return order_; }
  ScalarKind kind() const { return kind_; }
  const Series& image(int i) const { return images_[i]; }
  const std::vector<Series>& images() const { return images_; }

  bool is_identity() const;
  bool is_logarithmic() const;  // each phi_i divisible by x_i, unit cofactor

  // Coordinate-map composition: (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other, int N) const;
  // psi with this(psi(x)) = psi(this(x)) = x mod m^N.
  Automorphism inverse(int N) const;

  Automorphism truncate(int N) const;

private:
  int n_ = 0;
  int order_ = 0;
  ScalarKind kind_ = ScalarKind::Rational;
  std::vector<Series> images_;
};

}  // namespace brunonf

#endif
