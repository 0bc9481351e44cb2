#include "lgc/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "lgc/error.hpp"

namespace lgc {

namespace detail {

// Monomials numbered by ascending degrevlex rank, so the leading term of a
// dense polynomial is its highest set bit.
struct MonomialIndex {
  explicit MonomialIndex(int vars) : m(vars) {
    const std::size_t count = std::size_t{1} << m;
    mask_of.resize(count);
    for (std::size_t i = 0; i < count; ++i) mask_of[i] = static_cast<Monomial>(i);
    std::sort(mask_of.begin(), mask_of.end(), degrevlex_less);
    rank_of.resize(count);
    for (std::size_t r = 0; r < count; ++r) rank_of[mask_of[r]] = static_cast<std::uint32_t>(r);
    words = (count + 63) / 64;
  }

  int m;
  std::size_t words;
  std::vector<Monomial> mask_of;
  std::vector<std::uint32_t> rank_of;
};

}  // namespace detail

namespace {

using detail::MonomialIndex;
using Dense = std::vector<std::uint64_t>;

void check_vars(int m) {
  if (m < 0 || m > kMaxGroebnerVars) {
    throw Error(ErrorCode::UniverseTooLarge, "Groebner engine supports m <= " +
                                                 std::to_string(kMaxGroebnerVars) + ", got " +
                                                 std::to_string(m));
  }
}

void flip(Dense& d, std::uint32_t r) { d[r >> 6] ^= std::uint64_t{1} << (r & 63); }

bool is_zero(const Dense& d) {
  return std::all_of(d.begin(), d.end(), [](std::uint64_t w) { return w == 0; });
}

// Highest set rank, or -1.
long highest(const Dense& d) {
  for (std::size_t w = d.size(); w-- > 0;) {
    if (d[w]) return static_cast<long>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(d[w])));
  }
  return -1;
}

Dense to_dense(const Poly& p, const MonomialIndex& idx) {
  if (p.max_var() > idx.m) {
    throw Error(ErrorCode::VariableOutOfRange,
                "x" + std::to_string(p.max_var()) + " exceeds m=" + std::to_string(idx.m));
  }
  Dense d(idx.words, 0);
  for (Monomial t : p.terms()) flip(d, idx.rank_of[t]);
  return d;
}

Poly to_sparse(const Dense& d, const MonomialIndex& idx) {
  std::vector<Monomial> terms;
  for (std::size_t w = 0; w < d.size(); ++w) {
    std::uint64_t x = d[w];
    while (x) {
      terms.push_back(idx.mask_of[w * 64 + static_cast<std::size_t>(std::countr_zero(x))]);
      x &= x - 1;
    }
  }
  return Poly::from_monomials(std::move(terms));
}

// Reduction against a growing list of elements with fixed leading terms.
class Reducer {
 public:
  Reducer(const MonomialIndex& idx, bool cache_multiples)
      : idx_(idx),
        cache_(cache_multiples && idx.words <= 64),
        divisor_(idx.mask_of.size(), -1),
        checked_(idx.mask_of.size(), 0) {}

  std::size_t size() const { return elems_.size(); }
  const Dense& element(std::size_t i) const { return elems_[i]; }
  Monomial lead(std::size_t i) const { return leads_[i]; }

  void push(Dense d) {
    leads_.push_back(idx_.mask_of[static_cast<std::size_t>(highest(d))]);
    elems_.push_back(std::move(d));
    multiples_.emplace_back();
  }

  // acc += u * element(i) in the quotient ring.
  void add_multiple(Dense& acc, std::size_t i, Monomial u) {
    if (!cache_) {
      add_multiple_direct(acc, elems_[i], u);
      return;
    }
    auto [it, fresh] = multiples_[i].try_emplace(u);
    if (fresh) {
      it->second.assign(idx_.words, 0);
      add_multiple_direct(it->second, elems_[i], u);
    }
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= it->second[w];
  }

  // Full normal form.
  Dense reduce(Dense p) {
    Dense out(idx_.words, 0);
    for (long r = highest(p); r >= 0; r = highest(p)) {
      const Monomial t = idx_.mask_of[static_cast<std::size_t>(r)];
      const long d = divisor(static_cast<std::size_t>(r), t);
      if (d >= 0) {
        add_multiple(p, static_cast<std::size_t>(d), t & ~leads_[static_cast<std::size_t>(d)]);
      } else {
        flip(out, static_cast<std::uint32_t>(r));
        flip(p, static_cast<std::uint32_t>(r));
      }
    }
    return out;
  }

 private:
  void add_multiple_direct(Dense& acc, const Dense& g, Monomial u) const {
    for (std::size_t w = 0; w < g.size(); ++w) {
      std::uint64_t x = g[w];
      while (x) {
        const Monomial s = idx_.mask_of[w * 64 + static_cast<std::size_t>(std::countr_zero(x))];
        flip(acc, idx_.rank_of[s | u]);
        x &= x - 1;
      }
    }
  }

  // Some element whose leading term divides t; elements are only appended,
  // so a found divisor stays valid and only newer elements need checking.
  long divisor(std::size_t r, Monomial t) {
    if (divisor_[r] >= 0) return divisor_[r];
    for (std::size_t k = checked_[r]; k < leads_.size(); ++k) {
      if ((leads_[k] & ~t) == 0) {
        divisor_[r] = static_cast<long>(k);
        return divisor_[r];
      }
    }
    checked_[r] = leads_.size();
    return -1;
  }

  const MonomialIndex& idx_;
  bool cache_;
  std::vector<Dense> elems_;
  std::vector<Monomial> leads_;
  std::vector<std::unordered_map<Monomial, Dense>> multiples_;
  std::vector<long> divisor_;
  std::vector<std::size_t> checked_;
};

constexpr std::size_t kFieldPair = std::size_t{1} << 40;

struct Pair {
  int degree;
  std::uint32_t lcm_rank;
  std::size_t i;
  std::size_t j;  // kFieldPair + variable for pairs against x^2 + x

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.lcm_rank, a.i, a.j) < std::tie(b.degree, b.lcm_rank, b.i, b.j);
  }
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

GroebnerBasis groebner_basis(const PolySet& v) {
  check_vars(v.m);
  validate(v);
  auto idx = std::make_shared<const MonomialIndex>(v.m);
  Reducer red(*idx, /*cache_multiples=*/true);
  std::set<Pair> queue;
  std::unordered_set<std::uint64_t> pending;
  bool inconsistent = false;

  auto add = [&](Dense h) {
    const std::size_t n = red.size();
    red.push(std::move(h));
    const Monomial lt = red.lead(n);
    if (lt == 0) {
      inconsistent = true;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial other = red.lead(i);
      if ((other & lt) == 0) continue;  // coprime leading terms
      const Monomial lcm = other | lt;
      queue.insert({degree(lcm), idx->rank_of[lcm], i, n});
      pending.insert(pair_key(i, n));
    }
    for (int x = 0; x < v.m; ++x) {
      if ((lt >> x) & 1u) {
        queue.insert({degree(lt) + 1, idx->rank_of[lt], n, kFieldPair + static_cast<std::size_t>(x)});
      }
    }
  };

  for (const Poly& p : v.polys) {
    Dense h = red.reduce(to_dense(p, *idx));
    if (!is_zero(h)) add(std::move(h));
    if (inconsistent) break;
  }

  while (!queue.empty() && !inconsistent) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    Dense s(idx->words, 0);
    if (pr.j >= kFieldPair) {
      red.add_multiple(s, pr.i, Monomial{1} << (pr.j - kFieldPair));
    } else {
      pending.erase(pair_key(pr.i, pr.j));
      const Monomial lcm = red.lead(pr.i) | red.lead(pr.j);
      bool chain = false;
      for (std::size_t k = 0; k < red.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j || (red.lead(k) & ~lcm) != 0) continue;
        chain = !pending.count(pair_key(pr.i, k)) && !pending.count(pair_key(pr.j, k));
      }
      if (chain) continue;
      red.add_multiple(s, pr.i, lcm & ~red.lead(pr.i));
      red.add_multiple(s, pr.j, lcm & ~red.lead(pr.j));
    }
    Dense h = red.reduce(std::move(s));
    if (!is_zero(h)) add(std::move(h));
  }

  GroebnerBasis gb;
  gb.m_ = v.m;
  gb.index_ = idx;
  if (inconsistent) {
    gb.polys_ = {Poly::one()};
    return gb;
  }

  // Minimal basis: drop elements whose leading term is divisible by another
  // element's (keeping the first of equal leading terms).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < red.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < red.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial a = red.lead(i);
      const Monomial b = red.lead(k);
      if ((b & ~a) == 0 && (b != a || k < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  Reducer minimal(*idx, /*cache_multiples=*/false);
  for (std::size_t i : keep) minimal.push(red.element(i));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Dense tail = minimal.element(i);
    const std::uint32_t lead_rank = idx->rank_of[minimal.lead(i)];
    flip(tail, lead_rank);
    Dense reduced = minimal.reduce(std::move(tail));
    flip(reduced, lead_rank);
    gb.polys_.push_back(to_sparse(reduced, *idx));
  }
  std::sort(gb.polys_.begin(), gb.polys_.end(), [](const Poly& a, const Poly& b) {
    return degrevlex_less(b.leading(), a.leading());
  });
  return gb;
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  Reducer red(*index_, /*cache_multiples=*/false);
  for (const Poly& g : polys_) red.push(to_dense(g, *index_));
  return to_sparse(red.reduce(to_dense(p, *index_)), *index_);
}

Poly normal_form(const Poly& p, const GroebnerBasis& g) { return g.normal_form(p); }

bool entails_groebner(const PolySet& s, const PolySet& t) {
  PolySet premises = s;
  premises.m = std::max(s.m, t.m);
  const GroebnerBasis gb = groebner_basis(premises);
  return std::all_of(t.polys.begin(), t.polys.end(),
                     [&](const Poly& w) { return gb.normal_form(w).is_zero(); });
}

PolySet delta(const PolySet& u, const PolySet& v) {
  const int m = std::max(u.m, v.m);
  if (!entails_groebner(u, v)) {
    throw Error(ErrorCode::PreconditionViolated, "delta(u, v) requires u |= v");
  }
  PolySet background = v;
  background.m = m;
  const GroebnerBasis gb = groebner_basis(background);
  PolySet out{m, {}};
  for (const Poly& p : u.polys) out.polys.push_back(gb.normal_form(p));
  return normalize_set(std::move(out));
}

}  // namespace lgc
