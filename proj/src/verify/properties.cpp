#include <random>

#include "fitt/verify.hpp"

namespace fitt {

namespace {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Field field() {
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    std::uint64_t pick = below(5);
    return pick == 4 ? Field::rationals() : Field::prime(primes[pick]);
  }

  Coeff coeff(const Field& k) {
    if (k.is_prime_field()) return k.from_int(static_cast<long long>(below(k.characteristic())));
    long long num = static_cast<long long>(below(11)) - 5;
    long long den = static_cast<long long>(below(3)) + 1;
    return k.from_fraction(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  }

  Polynomial poly(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
    std::vector<Term> terms;
    std::size_t count = below(max_terms + 1);
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<std::uint32_t> exps(ring->nvars(), 0);
      std::uint32_t budget = static_cast<std::uint32_t>(below(max_degree + 1));
      for (std::uint32_t step = 0; step < budget; ++step) ++exps[below(ring->nvars())];
      terms.push_back(Term{Monomial(exps), coeff(ring->field())});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Polynomial nonzero_poly(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
    for (;;) {
      Polynomial f = poly(ring, max_terms, max_degree);
      if (!f.is_zero()) return f;
    }
  }

 private:
  std::mt19937_64 rng_;
};

void expect(PropertyCounts& counts, bool ok, const std::string& what) {
  if (!ok) counts.failures.push_back(what);
}

void groebner_suite(Generator& gen, const PropertyOptions& options, PropertyCounts& counts) {
  std::size_t round = 0;
  while (counts.spoly_checks < options.min_spoly_checks) {
    ++round;
    RingPtr ring = make_ring(gen.field(), {"x", "y", "z"});
    MonomialOrder order = round % 2 ? MonomialOrder::grevlex() : MonomialOrder::lex();
    std::vector<Polynomial> gens;
    std::size_t ngens = 2 + gen.below(2);
    for (std::size_t g = 0; g < ngens; ++g) gens.push_back(gen.nonzero_poly(ring, 3, 3));
    Ideal ideal(ring, gens);
    auto basis = ideal.groebner_basis(order);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        ++counts.spoly_checks;
        expect(counts, reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero(),
               "S-polynomial does not reduce to zero for " + ideal.to_string());
      }
    }
    for (const auto& g : gens) {
      expect(counts, reduce(g, basis, order).is_zero(), "generator outside its own basis: " + ideal.to_string());
    }
  }
}

PresentedModule random_module(Generator& gen) {
  static const std::uint64_t primes[] = {2, 3, 5};
  RingPtr ring = make_ring(Field::prime(primes[gen.below(3)]), {"a", "b", "c"});
  std::size_t rows = 1 + gen.below(3);
  std::size_t cols = 1 + gen.below(3);
  PolyMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, gen.poly(ring, 2, 2));
  }
  std::vector<Polynomial> relations;
  if (gen.below(2)) relations.push_back(gen.nonzero_poly(ring, 2, 2));
  return PresentedModule(PresentedAlgebra(Ideal(ring, relations)), std::move(m));
}

void fitting_suite(Generator& gen, const PropertyOptions& options, PropertyCounts& counts) {
  for (std::size_t inst = 0; inst < options.fitting_instances; ++inst) {
    PresentedModule module = random_module(gen);
    const RingPtr& ring = module.algebra.ring;
    const long m = static_cast<long>(module.generators());
    const std::string tag = "instance " + std::to_string(inst);

    std::vector<Ideal> fitt;
    for (long i = -1; i <= m + 1; ++i) fitt.push_back(fitting_ideal(module, i));
    auto at = [&](long i) -> const Ideal& { return fitt[static_cast<std::size_t>(i + 1)]; };

    for (long i = -1; i <= m; ++i) {
      ++counts.chain_checks;
      expect(counts, ideal_contains(at(i + 1), at(i)), tag + ": Fitt_" + std::to_string(i) + " not in next");
    }

    PresentedModule bigger = direct_sum_free(module, 1);
    for (long i = -1; i <= m; ++i) {
      ++counts.shift_checks;
      expect(counts, ideal_equal(fitting_ideal(bigger, i + 1), at(i)), tag + ": shift law at " + std::to_string(i));
    }

    std::vector<Polynomial> column(module.matrix.rows(), Polynomial(ring));
    for (std::size_t c = 0; c < module.matrix.cols(); ++c) {
      Polynomial weight = gen.poly(ring, 2, 1);
      for (std::size_t r = 0; r < module.matrix.rows(); ++r) column[r] = column[r] + weight * module.matrix.at(r, c);
    }
    PresentedModule widened(module.algebra, module.matrix.with_column(column), module.row_labels);
    for (long i = 0; i <= m; ++i) {
      ++counts.independence_checks;
      expect(counts, ideal_equal(fitting_ideal(widened, i), at(i)),
             tag + ": extra dependent column changed Fitt_" + std::to_string(i));
    }

    std::string var = ring->variables()[gen.below(ring->nvars())];
    Polynomial shifted = Polynomial::variable(ring, var) + Polynomial::constant(ring, gen.coeff(ring->field()));
    for (const auto& image : {Polynomial(ring), shifted}) {
      RingMap sigma = RingMap::from_assignments(ring, ring, {{var, image}});
      PresentedModule changed = base_change(module, sigma);
      for (long i = 0; i <= m; ++i) {
        ++counts.base_change_checks;
        expect(counts, ideal_equal(fitting_ideal(changed, i), sigma.apply(at(i))),
               tag + ": base change " + var + " -> " + image.to_string() + " at " + std::to_string(i));
      }
    }
    ++counts.fitting_instances;
  }
}

void derivative_suite(Generator& gen, const PropertyOptions& options, PropertyCounts& counts) {
  for (std::size_t pair = 0; pair < options.derivative_pairs; ++pair) {
    // Alternate characteristics so both regimes get half the pairs.
    Field k = pair % 2 ? Field::rationals() : Field::prime(std::vector<std::uint64_t>{2, 3, 5, 7}[gen.below(4)]);
    RingPtr ring = make_ring(k, {"x", "y", "z"});
    Polynomial f = gen.poly(ring, 4, 4);
    Polynomial g = gen.poly(ring, 4, 4);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      ++counts.leibniz_checks;
      expect(counts, (f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v),
             "Leibniz rule fails for " + f.to_string() + " and " + g.to_string());
    }
    if (k.is_prime_field()) {
      Polynomial power = f.pow(k.characteristic());
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        ++counts.frobenius_checks;
        expect(counts, power.derivative(v).is_zero(), "derivative of p-th power nonzero: " + f.to_string());
      }
    }
  }
}

}  // namespace

PropertyCounts run_property_suites(const PropertyOptions& options) {
  PropertyCounts counts;
  Generator gb_gen(options.seed);
  groebner_suite(gb_gen, options, counts);
  Generator fitting_gen(options.seed ^ 0x9e3779b97f4a7c15ULL);
  fitting_suite(fitting_gen, options, counts);
  Generator derivative_gen(options.seed + 1);
  derivative_suite(derivative_gen, options, counts);
  return counts;
}

}  // namespace fitt
