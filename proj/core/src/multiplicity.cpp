#include "intclos/multiplicity.hpp"

#include <algorithm>
#include <random>

#include "intclos/error.hpp"
#include "intclos/grobner.hpp"

namespace intclos {

void RandomSpec::validate() const {
  if (bound < 1) throw InvalidArgument("random coefficient bound must be at least 1");
  if (trials < 1) throw InvalidArgument("trial count must be at least 1");
}

std::string to_string(MultiplicityMethod m) {
  switch (m) {
    case MultiplicityMethod::ColengthDirect:
      return "colength-direct";
    case MultiplicityMethod::GenericReduction:
      return "generic-reduction";
    case MultiplicityMethod::Volume:
      return "volume";
  }
  return "unknown";
}

namespace {

class CoefficientStream {
 public:
  CoefficientStream(const RandomSpec& rs, unsigned trial) : bound_(rs.bound) {
    std::seed_seq seq{static_cast<std::uint32_t>(rs.seed), static_cast<std::uint32_t>(rs.seed >> 32), trial};
    rng_.seed(seq);
  }

  // uniform on {-B, ..., B} minus {0}
  std::int64_t next() {
    std::uniform_int_distribution<std::int64_t> d(1, 2 * bound_);
    std::int64_t v = d(rng_);
    return v <= bound_ ? v : bound_ - v;
  }

  Polynomial combination(const std::vector<Polynomial>& gens) {
    Polynomial f(gens.front().ring_ptr());
    for (const auto& g : gens) f += g.scaled(Rational(static_cast<long>(next())));
    return f;
  }

 private:
  std::int64_t bound_;
  std::mt19937_64 rng_;
};

MultiplicityValue direct(std::uint64_t v) {
  MultiplicityValue m;
  m.value = v;
  m.method = MultiplicityMethod::ColengthDirect;
  return m;
}

template <typename Trial>
MultiplicityValue generic_min(const RandomSpec& rs, Trial&& trial) {
  rs.validate();
  MultiplicityValue m;
  m.method = MultiplicityMethod::GenericReduction;
  m.trials = rs.trials;
  m.seed = rs.seed;
  for (unsigned t = 0; t < rs.trials; ++t) {
    CoefficientStream stream(rs, t);
    m.per_trial.push_back(trial(stream));
  }
  m.value = *std::min_element(m.per_trial.begin(), m.per_trial.end());
  return m;
}

void require_primary(const Ideal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("multiplicity of the zero ideal");
  // throws when the colength at the origin is infinite
  local_colength(ideal);
}

}  // namespace

MultiplicityValue hs_multiplicity(const Ideal& ideal, const RandomSpec& rs) {
  const std::size_t n = ideal.nvars();
  if (ideal.is_zero()) throw InvalidArgument("multiplicity of the zero ideal");
  ColengthValue own = local_colength(ideal);
  if (ideal.gens().size() == n) return direct(own.value());
  return generic_min(rs, [&](CoefficientStream& s) {
    std::vector<Polynomial> f;
    for (std::size_t j = 0; j < n; ++j) f.push_back(s.combination(ideal.gens()));
    return local_colength(Ideal(ideal.ring_ptr(), std::move(f))).value();
  });
}

MultiplicityValue mixed_multiplicity(const std::vector<Ideal>& ideals, const RandomSpec& rs) {
  if (ideals.empty()) throw InvalidArgument("mixed multiplicity of no ideals");
  const RingPtr& ring = ideals.front().ring_ptr();
  if (ideals.size() != ring->size()) {
    throw DimensionError("mixed multiplicity needs as many ideals as variables");
  }
  for (const auto& i : ideals) {
    require_same_ring(ring, i.ring_ptr());
    require_primary(i);
  }
  bool principal = std::all_of(ideals.begin(), ideals.end(), [](const Ideal& i) { return i.gens().size() == 1; });
  if (principal) {
    std::vector<Polynomial> f;
    for (const auto& i : ideals) f.push_back(i.gens().front());
    return direct(local_colength(Ideal(ring, std::move(f))).value());
  }
  return generic_min(rs, [&](CoefficientStream& s) {
    std::vector<Polynomial> f;
    for (const auto& i : ideals) f.push_back(s.combination(i.gens()));
    return local_colength(Ideal(ring, std::move(f))).value();
  });
}

MultiplicityValue delta(const Submodule& m, const RandomSpec& rs) {
  rs.validate();
  const std::size_t p = m.rows(), n = m.ring_ptr()->size();
  if (p == 0) throw InvalidArgument("delta of a module in R^0");
  std::vector<Ideal> rows;
  for (std::size_t i = 0; i < p; ++i) {
    rows.emplace_back(m.ring_ptr(), m.row(i));
    require_primary(rows.back());
  }
  MultiplicityValue total;
  total.method = MultiplicityMethod::GenericReduction;
  total.trials = rs.trials;
  total.seed = rs.seed;
  bool all_direct = true;
  // compositions of n into p nonnegative parts
  std::vector<std::size_t> parts(p, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == p) {
      parts[i] = left;
      std::vector<Ideal> family;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t c = 0; c < parts[k]; ++c) family.push_back(rows[k]);
      }
      MultiplicityValue e = mixed_multiplicity(family, rs);
      if (e.method != MultiplicityMethod::ColengthDirect) all_direct = false;
      total.value += e.value;
      total.per_trial.push_back(e.value);
      return;
    }
    for (std::size_t a = left + 1; a-- > 0;) {
      parts[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, n);
  if (all_direct) {
    total.method = MultiplicityMethod::ColengthDirect;
    total.trials = 0;
    total.seed.reset();
  }
  return total;
}

MultiplicityValue buchsbaum_rim(const Submodule& m, const RandomSpec& rs) {
  const std::size_t p = m.rows(), n = m.ring_ptr()->size();
  const std::size_t want = n + p - 1;
  if (p == 0) throw InvalidArgument("Buchsbaum-Rim multiplicity of a module in R^0");
  if (m.cols() < want) {
    throw InfiniteColength("a module with fewer than d + p - 1 generators has infinite colength");
  }
  ColengthValue own = local_colength(m);
  if (m.cols() == want) return direct(own.value());
  return generic_min(rs, [&](CoefficientStream& s) {
    PolyMatrix c(m.ring_ptr(), m.cols(), want);
    for (std::size_t i = 0; i < m.cols(); ++i) {
      for (std::size_t j = 0; j < want; ++j) {
        c(i, j) = Polynomial::constant(m.ring_ptr(), Rational(static_cast<long>(s.next())));
      }
    }
    return local_colength(m * c).value();
  });
}

MultiplicityValue monomial_multiplicity(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) throw InvalidArgument("multiplicity of the zero ideal");
  auto cv = covolume(newton_polyhedron(ideal.dim(), ideal.generators()));
  if (!cv) throw InfiniteColength("the monomial ideal does not have finite colength");
  Rational v = *cv;
  for (std::size_t k = 2; k <= ideal.dim(); ++k) v *= static_cast<long>(k);
  if (v.get_den() != 1) throw Error("non-integral normalized volume");
  MultiplicityValue m;
  m.value = v.get_num().get_ui();
  m.method = MultiplicityMethod::Volume;
  return m;
}

std::optional<unsigned> ideal_reduction_check(const Ideal& i, const Ideal& l, unsigned cap) {
  require_same_ring(i.ring_ptr(), l.ring_ptr());
  if (i.is_zero() || l.is_zero()) throw InvalidArgument("reduction check of the zero ideal");
  if (!contained(i, l)) throw InvalidArgument("reduction check needs I contained in L");
  Ideal lk(l.ring_ptr(), {Polynomial::constant(l.ring_ptr(), 1)});
  for (unsigned k = 0; k <= cap; ++k) {
    Ideal next = lk * l;
    if (contained(next, i * lk)) return k;
    lk = minimal_generators(next);
  }
  return std::nullopt;
}

}  // namespace intclos
