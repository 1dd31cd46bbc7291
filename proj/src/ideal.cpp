#include "brunonf/ideal.hpp"

#include <algorithm>

#include "brunonf/derivation.hpp"

namespace brunonf {

namespace {

using Row = std::map<Exponent, Scalar, GradedLex>;

void enumerate_monomials(int n, int maxdeg, Exponent& cur, int pos,
                         std::vector<Exponent>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int i = 0; i < pos; ++i) used += cur[i];
  for (int v = 0; v <= maxdeg - used; ++v) {
    cur[pos] = v;
    enumerate_monomials(n, maxdeg, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

double row_max_abs(const Row& r) {
  double m = 0;
  for (auto& [e, c] : r) m = std::max(m, c.abs());
  return m;
}

// Full forward reduction of `row` against the RREF rows; rows have leading
// coefficient 1 at their pivot monomial.
void reduce_row(Row& row, const std::map<Exponent, Row, GradedLex>& rows,
                double float_threshold) {
  auto it = row.begin();
  while (it != row.end()) {
    auto pit = rows.find(it->first);
    if (pit == rows.end()) {
      ++it;
      continue;
    }
    Scalar c = it->second;
    const Exponent key = it->first;
    for (auto& [e, v] : pit->second) {
      auto jt = row.find(e);
      if (jt == row.end()) {
        Scalar nv = -(c * v);
        if (!nv.is_zero()) row.emplace(e, nv);
      } else {
        jt->second -= c * v;
        if (jt->second.is_zero()) row.erase(jt);
      }
    }
    // pivot monomial is now cancelled; resume after it
    it = row.upper_bound(key);
  }
  if (float_threshold > 0) {
    for (auto jt = row.begin(); jt != row.end();)
      jt = jt->second.abs() <= float_threshold ? row.erase(jt) : std::next(jt);
  }
}

void insert_row(Row row, std::map<Exponent, Row, GradedLex>& rows, double float_threshold) {
  reduce_row(row, rows, float_threshold);
  if (row.empty()) return;
  Exponent pivot = row.begin()->first;
  Scalar lead = row.begin()->second;
  Scalar inv = lead.inverse();
  for (auto& [e, c] : row) c *= inv;
  // back-substitute into existing rows to keep the basis fully reduced
  for (auto& [p, r] : rows) {
    auto jt = r.find(pivot);
    if (jt == r.end()) continue;
    Scalar c = jt->second;
    for (auto& [e, v] : row) {
      auto kt = r.find(e);
      if (kt == r.end()) {
        Scalar nv = -(c * v);
        if (!nv.is_zero()) r.emplace(e, nv);
      } else {
        kt->second -= c * v;
        if (kt->second.is_zero()) r.erase(kt);
      }
    }
  }
  rows.emplace(std::move(pivot), std::move(row));
}

bool series_less(const Series& a, const Series& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  GradedLex lt;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (lt(ia->first, ib->first)) return true;
    if (lt(ib->first, ia->first)) return false;
    if (ia->second.deterministic_less(ib->second)) return true;
    if (ib->second.deterministic_less(ia->second)) return false;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace

TruncatedIdeal::TruncatedIdeal(int n, int order, ScalarKind kind,
                               std::vector<Series> gens)
    : n_(n), order_(order), kind_(kind) {
  for (auto& g : gens) {
    if (g.dim() != n_) throw DimensionMismatchError();
    if (g.kind() != kind_) throw ScalarMismatchError();
    Series t = g.truncate(order_);
    if (!t.is_zero()) gens_.push_back(std::move(t));
  }
  std::sort(gens_.begin(), gens_.end(), series_less);
  gens_.erase(std::unique(gens_.begin(), gens_.end(),
                          [](const Series& a, const Series& b) {
                            return !series_less(a, b) && !series_less(b, a);
                          }),
              gens_.end());
}

bool TruncatedIdeal::is_zero_ideal(int N) const {
  for (auto& g : gens_)
    if (!g.truncate(N).is_zero()) return false;
  return true;
}

const SliceBasis& TruncatedIdeal::graded_slice_basis(int d) const {
  if (d >= order_) throw Error("DegreeOutOfRange", "slice degree must be < truncation order");
  auto it = slice_cache_.find(d);
  if (it != slice_cache_.end()) return it->second;

  SliceBasis basis;
  basis.degree = d;
  Exponent cur(n_, 0);
  enumerate_monomials(n_, d, cur, 0, basis.monomials);
  std::sort(basis.monomials.begin(), basis.monomials.end(), GradedLex());
  basis.heuristic = (kind_ == ScalarKind::Float);

  for (auto& g : gens_) {
    int go = g.ord();
    if (go > d) continue;
    std::vector<Exponent> mults;
    Exponent c2(n_, 0);
    enumerate_monomials(n_, d - go, c2, 0, mults);
    std::sort(mults.begin(), mults.end(), GradedLex());
    for (auto& a : mults) {
      Row row;
      for (auto& [m, c] : g.terms()) {
        Exponent e = exp_add(a, m);
        if (norm1(e) > d) continue;
        auto jt = row.find(e);
        if (jt == row.end())
          row.emplace(std::move(e), c);
        else {
          jt->second += c;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
      if (row.empty()) continue;
      double thr = kind_ == ScalarKind::Float ? 1e-9 * row_max_abs(row) : 0.0;
      insert_row(std::move(row), basis.rows, thr);
    }
  }
  return slice_cache_.emplace(d, std::move(basis)).first->second;
}

Series TruncatedIdeal::reduce(const Series& f, int N) const {
  int cut = std::min(N, order_);
  Series t = f.truncate(cut);
  if (t.is_zero()) return t;
  const SliceBasis& basis = graded_slice_basis(cut - 1);
  Row row;
  for (auto& [m, c] : t.terms()) row.emplace(m, c);
  double thr = kind_ == ScalarKind::Float ? 1e-9 * row_max_abs(row) : 0.0;
  reduce_row(row, basis.rows, thr);
  Series rem(n_, cut, kind_);
  for (auto& [m, c] : row) rem.add_term(m, c);
  return rem;
}

bool TruncatedIdeal::contains(const Series& f, int N) const {
  return reduce(f, N).is_zero();
}

TruncatedIdeal TruncatedIdeal::pullback(const Automorphism& phi, int N) const {
  std::vector<Series> gens;
  gens.reserve(gens_.size());
  for (auto& g : gens_) gens.push_back(substitute(g, phi, N));
  return TruncatedIdeal(n_, N, kind_, std::move(gens));
}

TruncatedIdeal TruncatedIdeal::sum(const TruncatedIdeal& other, int N) const {
  if (n_ != other.n_) throw DimensionMismatchError();
  if (kind_ != other.kind_) throw ScalarMismatchError();
  std::vector<Series> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return TruncatedIdeal(n_, std::min({N, order_, other.order_}), kind_, std::move(gens));
}

TruncatedIdeal TruncatedIdeal::differential_closure(const LogDerivation& d, int N) const {
  if (d.dim() != n_) throw DimensionMismatchError();
  int order = std::min(N, order_);
  std::vector<Series> gens;
  for (auto& g : gens_) {
    Series t = g.truncate(order);
    if (!t.is_zero()) gens.push_back(t);
  }
  for (;;) {
    TruncatedIdeal cur(n_, order, kind_, gens);
    std::vector<Series> next = cur.generators();
    bool grew = false;
    for (auto& g : cur.generators()) {
      Series h = d.apply(g, order);
      if (!h.is_zero() && !cur.contains(h, order)) {
        next.push_back(h);
        grew = true;
      }
    }
    if (!grew) return cur;
    gens = std::move(next);
  }
}

TruncatedIdeal TruncatedIdeal::truncate(int N) const {
  return TruncatedIdeal(n_, std::min(N, order_), kind_, gens_);
}

bool ideal_equal(const TruncatedIdeal& a, const TruncatedIdeal& b, int N) {
  for (auto& g : a.generators())
    if (!b.contains(g, N)) return false;
  for (auto& g : b.generators())
    if (!a.contains(g, N)) return false;
  return true;
}

}  // namespace brunonf
