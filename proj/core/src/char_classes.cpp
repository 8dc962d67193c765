#include "spencer/char_classes.hpp"

#include <functional>
#include <string>

#include "spencer/error.hpp"
#include "spencer/symmetric_functions.hpp"

namespace spencer {

namespace {

// Calls visit(indices) for every multiset (repeat = true) or subset of size k
// drawn from 0..r-1, indices sorted.
void for_each_selection(int r, int k, bool repeat, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      visit(idx);
      return;
    }
    for (int i = start; i < r; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1, repeat ? i : i + 1);
    }
  };
  rec(0, 0);
}

// Product over selections of (1 + x_{i_1} + ... + x_{i_k}) in the splitting ring of e.
GradedElement total_class_of_selection(const BundleClass& e, int k, bool repeat) {
  const ChernRoots roots(e);
  const RingDescriptor ring = e.ring();
  const int r = e.rank();
  SplitElement total = SplitElement::constant(ring, r, ParamPoly(1));
  const SplitElement one = total;
  for_each_selection(r, k, repeat, [&](const std::vector<int>& sel) {
    SplitElement factor = one;
    for (int i : sel) factor += roots.roots[static_cast<std::size_t>(i)];
    total = total * factor;
  });
  return roots.symmetrize(total);
}

void check_character(const BundleClass& result, const GradedElement& expected, const std::string& what) {
  if (chern_character(result) != expected)
    throw InternalError(what + ": splitting-ring and Adams-operation characters disagree");
}

}  // namespace

BundleClass::BundleClass(int rank, GradedElement total_chern) : rank_(rank), chern_(std::move(total_chern)) {
  if (rank < 0) throw ValidationError("bundle rank must be non-negative");
  if (chern_[0] != ParamPoly(1)) throw ValidationError("total Chern class must have constant term 1");
  for (int i = rank + 1; i <= chern_.dim(); ++i)
    if (!chern_[i].is_zero())
      throw ValidationError("c_" + std::to_string(i) + " is nonzero but exceeds the rank " + std::to_string(rank));
}

BundleClass BundleClass::from_chern_numbers(RingDescriptor ring, int rank, const std::vector<ParamPoly>& classes) {
  GradedElement c = GradedElement::one(ring);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const int degree = static_cast<int>(i) + 1;
    if (degree > rank && !classes[i].is_zero())
      throw ValidationError("c_" + std::to_string(degree) + " given for a bundle of rank " + std::to_string(rank));
    if (degree <= ring.dim) c[degree] = classes[i];
  }
  return BundleClass(rank, std::move(c));
}

BundleClass BundleClass::trivial(RingDescriptor ring, int rank) { return BundleClass(rank, GradedElement::one(ring)); }

BundleClass BundleClass::line(RingDescriptor ring, ParamPoly degree) {
  return BundleClass(1, GradedElement::one(ring) + GradedElement::monomial(ring, 1, std::move(degree)));
}

ParamPoly BundleClass::chern_number(int i) const {
  if (i < 0 || i > chern_.dim()) return ParamPoly();
  return chern_[i];
}

std::vector<GradedElement> BundleClass::chern_classes() const {
  std::vector<GradedElement> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) out.push_back(chern_.component(i));
  return out;
}

ChernRoots::ChernRoots(const BundleClass& e) : bundle(e) {
  for (int i = 0; i < e.rank(); ++i) roots.push_back(SplitElement::root(e.ring(), e.rank(), i));
}

std::vector<GradedElement> power_sums(const BundleClass& e) {
  const RingDescriptor ring = e.ring();
  std::vector<GradedElement> elementary{GradedElement::one(ring)};
  for (const auto& c : e.chern_classes()) elementary.push_back(c);
  std::vector<GradedElement> p = power_sums_from_elementary(elementary, ring.dim);
  p[0] = GradedElement::constant(ring, ParamPoly(e.rank()));
  return p;
}

GradedElement chern_character(const BundleClass& e) { return adams(e, 1); }

GradedElement adams(const BundleClass& e, int k) {
  if (k < 1) throw ValidationError("Adams operations are indexed by k >= 1");
  const std::vector<GradedElement> p = power_sums(e);
  GradedElement out = p[0];
  Rational scale(1);
  for (int j = 1; j <= e.ring().dim; ++j) {
    scale *= Rational(k);
    out += p[static_cast<std::size_t>(j)] * ParamPoly(scale / factorial(j));
  }
  return out;
}

// log(x / (1 - e^{-x})) = x/2 - sum_{m>=2} B_m x^m / (m * m!), so
// td(E) = exp(sum_j t_j p_j) with the same coefficients t_j.
GradedElement todd_class(const BundleClass& e) {
  const int n = e.ring().dim;
  const std::vector<GradedElement> p = power_sums(e);
  const std::vector<Rational> b = bernoulli_numbers(n);
  GradedElement log_td(e.ring());
  for (int j = 1; j <= n; ++j) {
    const Rational t = j == 1 ? Rational(1, 2) : -b[static_cast<std::size_t>(j)] / (Rational(j) * factorial(j));
    if (!t.is_zero()) log_td += p[static_cast<std::size_t>(j)] * ParamPoly(t);
  }
  return exp_truncated(log_td);
}

BundleClass dual(const BundleClass& e) {
  GradedElement c = e.chern();
  for (int i = 1; i <= c.dim(); i += 2) c[i] = -c[i];
  return BundleClass(e.rank(), std::move(c));
}

BundleClass direct_sum(const BundleClass& e, const BundleClass& f) {
  return BundleClass(e.rank() + f.rank(), e.chern() * f.chern());
}

BundleClass tensor(const BundleClass& e, const BundleClass& f) {
  if (e.ring() != f.ring()) throw ValidationError("tensor product of bundles on different spaces");
  const RingDescriptor ring = e.ring();
  const int r = e.rank();
  const int s = f.rank();
  SplitElement total = SplitElement::constant(ring, r + s, ParamPoly(1));
  const SplitElement one = total;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j)
      total = total * (one + SplitElement::root(ring, r + s, i) + SplitElement::root(ring, r + s, r + j));
  const SplitElement over_f = symmetrize_group(total, 0, r, e.chern_classes());
  const GradedElement c = symmetrize_to_chern(over_f, f.chern_classes());
  BundleClass out(r * s, c);
  if (chern_character(out) != chern_character(e) * chern_character(f))
    throw InternalError("tensor: ch(E (x) F) != ch(E) ch(F)");
  return out;
}

BundleClass sym_power(const BundleClass& e, int k) {
  if (k < 0) throw ValidationError("symmetric power degree must be non-negative");
  if (k == 0) return BundleClass::trivial(e.ring(), 1);
  const Rational rank = binomial(e.rank() + k - 1, k);
  BundleClass out(static_cast<int>(rank.to_int64()), total_class_of_selection(e, k, true));
  check_character(out, sym_power_character_adams(e, k), "Sym^" + std::to_string(k));
  return out;
}

BundleClass ext_power(const BundleClass& e, int k) {
  if (k < 0) throw ValidationError("exterior power degree must be non-negative");
  if (k > e.rank())
    throw ValidationError("exterior power " + std::to_string(k) + " exceeds the rank " + std::to_string(e.rank()));
  if (k == 0) return BundleClass::trivial(e.ring(), 1);
  const Rational rank = binomial(e.rank(), k);
  BundleClass out(static_cast<int>(rank.to_int64()), total_class_of_selection(e, k, false));
  check_character(out, ext_power_character_adams(e, k), "Lambda^" + std::to_string(k));
  return out;
}

GradedElement sym_power_character_adams(const BundleClass& e, int k) {
  if (k < 0) throw ValidationError("symmetric power degree must be non-negative");
  std::vector<GradedElement> psi;
  std::vector<GradedElement> sigma{GradedElement::one(e.ring())};
  for (int m = 1; m <= k; ++m) {
    psi.push_back(adams(e, m));
    GradedElement acc(e.ring());
    for (int i = 1; i <= m; ++i) acc += psi[static_cast<std::size_t>(i - 1)] * sigma[static_cast<std::size_t>(m - i)];
    sigma.push_back(acc / Rational(m));
  }
  return sigma.back();
}

GradedElement ext_power_character_adams(const BundleClass& e, int k) {
  if (k < 0) throw ValidationError("exterior power degree must be non-negative");
  std::vector<GradedElement> psi;
  std::vector<GradedElement> lambda{GradedElement::one(e.ring())};
  for (int m = 1; m <= k; ++m) {
    psi.push_back(adams(e, m));
    GradedElement acc(e.ring());
    for (int i = 1; i <= m; ++i) {
      const GradedElement term = psi[static_cast<std::size_t>(i - 1)] * lambda[static_cast<std::size_t>(m - i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    lambda.push_back(acc / Rational(m));
  }
  return lambda.back();
}

BundleClass tangent_projective(int n) {
  if (n < 1) throw ValidationError("tangent_projective needs n >= 1");
  const RingDescriptor ring{n};
  const GradedElement one_plus_h = GradedElement::one(ring) + GradedElement::hyperplane(ring);
  return BundleClass(n, pow(one_plus_h, static_cast<unsigned>(n + 1)));
}

}  // namespace spencer
