#pragma once

#include <memory>
#include <vector>

#include "lgc/poly.hpp"

namespace lgc {

/// Gröbner computations keep dense per-monomial tables; beyond this many
/// variables they are refused with UniverseTooLarge.
inline constexpr int kMaxGroebnerVars = 16;

namespace detail {
struct MonomialIndex;
}

/// Reduced Gröbner basis, under degrevlex, of the ideal generated by a
/// polynomial set together with every field polynomial x_i^2 + x_i.
/// Immutable once built.
class GroebnerBasis {
 public:
  int m() const noexcept { return m_; }
  /// Reduced basis elements, sorted by leading term (largest first).
  const std::vector<Poly>& polys() const noexcept { return polys_; }

  /// Full reduction: no term of the result is divisible by a leading term
  /// of the basis.
  Poly normal_form(const Poly& p) const;

 private:
  friend GroebnerBasis groebner_basis(const PolySet& v);

  int m_ = 0;
  std::shared_ptr<const detail::MonomialIndex> index_;
  std::vector<Poly> polys_;
};

/// Buchberger completion in the Boolean quotient ring. Besides the ordinary
/// S-pairs, each element g is paired with every variable x of its leading
/// term (the S-pair against x^2 + x, which reduces to x*g).
GroebnerBasis groebner_basis(const PolySet& v);

Poly normal_form(const Poly& p, const GroebnerBasis& g);

/// s |= t decided by ideal membership: every member of t reduces to zero
/// modulo the basis of s.
bool entails_groebner(const PolySet& s, const PolySet& t);

/// Reduces every member of u modulo the basis of v and drops zeros, so no
/// member of the result is entailed by v while zeros(delta(u,v) ∪ v) =
/// zeros(u). Throws PreconditionViolated unless u |= v.
PolySet delta(const PolySet& u, const PolySet& v);

}  // namespace lgc
