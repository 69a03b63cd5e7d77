#include "skewmorph/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/dessin.hpp"
#include "skewmorph/errors.hpp"
#include "skewmorph/reciprocal.hpp"
#include "skewmorph/singularity.hpp"

namespace skewmorph {

SkewMorphism negation_conjugate(const SkewMorphism& s) {
  const std::int32_t n = s.modulus();
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) {
    image[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(normalize(-s.phi()(static_cast<std::int32_t>(normalize(-x, n))), n));
  }
  auto conj = is_skew_morphism(n, Permutation(std::move(image)));
  if (!conj) throw SelfCheckFailure("negation conjugate of a skew-morphism is not a skew-morphism");
  return *conj;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // `describe` is only evaluated for the first failure
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  void fail(const std::string& detail) { expect(false, [&] { return detail; }); }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string at_pair(std::int32_t m, std::int32_t n) {
  return "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

std::string describe(const SkewMorphism& s) {
  return "Z_" + std::to_string(s.modulus()) + " " + s.phi().to_cycle_string();
}

std::string describe(const ReciprocalPair& p) {
  return at_pair(p.m(), p.n()) + " phi " + p.phi().phi().to_cycle_string() + " phi_star " +
         p.phi_star().phi().to_cycle_string();
}

struct Data {
  std::int32_t max;
  unsigned jobs;
  std::uint64_t seed;
  std::vector<std::vector<SkewMorphism>> skew;                                   // index n
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<ReciprocalPair>> pairs;  // (m, n)
};

void oracle_equivalence(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= std::min(d.max, kBruteForceLimit); ++n) {
    s.expect(brute_force_skew_morphisms(n) == d.skew[static_cast<std::size_t>(n)],
             [&] { return "enumeration differs from brute force at n = " + std::to_string(n); });
  }
}

void orbit_inversion(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= d.max; ++n) {
    for (const SkewMorphism& phi : d.skew[static_cast<std::size_t>(n)]) {
      const CycleIndex index(phi.phi());
      for (std::int32_t x = 0; x < n; ++x) {
        const auto& orbit = index.cycles()[static_cast<std::size_t>(index.cycle_of(x))];
        const auto neg_x = static_cast<std::int32_t>(normalize(-x, n));
        const auto& target = index.cycles()[static_cast<std::size_t>(index.cycle_of(neg_x))];
        std::set<std::int32_t> negated, expected(target.begin(), target.end());
        for (std::int32_t z : orbit) negated.insert(static_cast<std::int32_t>(normalize(-z, n)));
        s.expect(negated == expected, [&] { return describe(phi) + " at x = " + std::to_string(x); });
      }
    }
  }
}

void sigma_vanishing(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= d.max; ++n) {
    for (const SkewMorphism& phi : d.skew[static_cast<std::size_t>(n)]) {
      for (std::int32_t x = 0; x < n; ++x) {
        s.expect(sigma(phi, Residue(x, n), phi.order()).value() == 0,
                 [&] { return describe(phi) + " at x = " + std::to_string(x); });
      }
    }
  }
}

void power_exponent_law(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= d.max; ++n) {
    for (const SkewMorphism& phi : d.skew[static_cast<std::size_t>(n)]) {
      for (std::int32_t x1 = 0; x1 < n; ++x1) {
        for (std::int32_t x2 = 0; x2 < n; ++x2) {
          const auto lhs = phi.pi()[static_cast<std::size_t>((x1 + x2) % n)];
          const auto rhs = sigma(phi, Residue(x2, n), phi.pi()[static_cast<std::size_t>(x1)]).value();
          s.expect(lhs == rhs, [&] { return describe(phi) + " at (" + std::to_string(x1) + ", " + std::to_string(x2) + ")"; });
        }
      }
    }
  }
}

void inverse_closure(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= d.max; ++n) {
    const auto& list = d.skew[static_cast<std::size_t>(n)];
    for (const SkewMorphism& phi : list) {
      const Permutation inv = phi.phi().inverse();
      s.expect(std::any_of(list.begin(), list.end(), [&](const SkewMorphism& t) { return t.phi() == inv; }),
               [&] { return describe(phi) + " has no inverse in the list"; });
    }
    const auto autos = automorphisms(n);
    s.expect(static_cast<std::int64_t>(autos.size()) == euler_phi(n),
             [&] { return "automorphism count at n = " + std::to_string(n); });
  }
}

void pair_identities(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    for (const auto& p : pairs) s.expect(check_corollary_identities(p), [&] { return describe(p); });
  }
}

void swap_closure(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    const auto& other = d.pairs.at({mn.second, mn.first});
    s.expect(other.size() == pairs.size(), [&] { return "pair counts differ under swap at " + at_pair(mn.first, mn.second); });
    for (const auto& p : pairs) {
      const ReciprocalPair q = swap_pair(p);
      s.expect(std::find(other.begin(), other.end(), q) != other.end(), [&] { return describe(p); });
    }
  }
}

void symmetric_skew(const Data& d, Suite& s) {
  for (std::int32_t n = 1; n <= d.max; ++n) {
    const auto& pairs = d.pairs.at({n, n});
    for (const SkewMorphism& phi : d.skew[static_cast<std::size_t>(n)]) {
      const bool listed = std::any_of(pairs.begin(), pairs.end(),
                                      [&](const ReciprocalPair& p) { return p.phi() == phi && p.phi_star() == phi; });
      s.expect(listed == is_symmetric_skew(phi), [&] { return describe(phi); });
    }
    for (const SkewMorphism& r : automorphisms(n)) {
      s.expect(symmetric_automorphism_criterion(n, r.phi()(1 % n)) == is_symmetric_skew(r),
               [&] { return "criterion disagrees for " + describe(r); });
    }
  }
}

void mirror_conjugation(const Data& d, Suite& s) {
  for (std::int32_t m = 1; m <= d.max; ++m) {
    for (std::int32_t n = 1; n <= d.max; ++n) {
      for (const SkewMorphism& phi : d.skew[static_cast<std::size_t>(n)]) {
        const SkewMorphism phi_c = negation_conjugate(phi);
        for (const SkewMorphism& phi_star : d.skew[static_cast<std::size_t>(m)]) {
          const bool standard = is_reciprocal_pair(phi, phi_star).has_value();
          const bool mirror = is_reciprocal_pair_mirror(phi_c, negation_conjugate(phi_star)).has_value();
          s.expect(standard == mirror, [&] { return at_pair(m, n) + " " + describe(phi) + " / " + describe(phi_star); });
        }
      }
    }
  }
}

void round_trip(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    for (const auto& p : pairs) {
      const BicyclicTriple t = triple_from_pair(p, d.seed);
      s.expect(induced_pair(t) == p, [&] { return "induced pair differs for " + describe(p); });
      const PermutationModel model = permutation_model(p);
      s.expect(model_matches_triple(model, t), [&] { return "model mismatch for " + describe(p); });
      s.expect(pair_from_model(model) == p, [&] { return "model pair differs for " + describe(p); });
    }
  }
}

void triple_equivalence(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    if (mn.first > 8 || mn.second > 8) continue;
    std::vector<BicyclicTriple> triples;
    for (const auto& p : pairs) triples.push_back(triple_from_pair(p, d.seed));
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (std::size_t j = 0; j < triples.size(); ++j) {
        s.expect(triples_equivalent(triples[i], triples[j]) == (i == j), [&] { return describe(pairs[i]); });
      }
    }
  }
}

void uniqueness(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    const auto [m, n] = mn;
    const SingularityReport r = uniqueness_report(pairs, m, n, d.jobs, d.seed);
    s.expect(r.singular == is_singular(n, m), [&] { return "singularity not symmetric at " + at_pair(m, n); });
    if (m == n) {
      s.expect(r.singular == (std::gcd(static_cast<std::int64_t>(n), euler_phi(n)) == 1),
               [&] { return "single-integer singularity at n = " + std::to_string(n); });
    }
    if (r.witness) {
      s.expect(!is_abelian(triple_from_pair(*r.witness, d.seed)), [&] { return "abelian witness at " + at_pair(m, n); });
    }
  }
}

void dessin_invariants(const Data& d, Suite& s) {
  for (const auto& [mn, pairs] : d.pairs) {
    for (const auto& p : pairs) {
      const BicyclicTriple t = triple_from_pair(p, d.seed);
      const Dessin dessin = dessin_from_triple(t);
      const DessinTopology topo = topology(dessin);
      const auto order_ab = element_order(t, multiply(t, t.a(), t.b()));
      s.expect(topo.faces * order_ab == t.size(), [&] { return "F |ab| != mn for " + describe(p); });
      s.expect(faces_by_orbits(dessin) == faces_by_order(dessin), [&] { return "face counts differ for " + describe(p); });
      const Dessin reciprocal = reciprocal_dessin(dessin);
      s.expect(topology(reciprocal).genus == topo.genus, [&] { return "reciprocal genus differs for " + describe(p); });
      s.expect(reciprocal_dessin(reciprocal).triple().pair() == p, [&] { return "double reciprocal differs for " + describe(p); });
      const Dessin mirror = dessin_from_triple(triple_from_pair(mirror_pair(t), d.seed));
      s.expect(topology(mirror).genus == topo.genus, [&] { return "mirror genus differs for " + describe(p); });
      if (t.size() <= kFullAssociativityLimit) {
        s.expect(translations_commute(dessin), [&] { return "left translations fail for " + describe(p); });
      }
    }
  }
}

void standard_genus(const Data& d, Suite& s) {
  for (std::int32_t m = 1; m <= d.max; ++m) {
    for (std::int32_t n = 1; n <= d.max; ++n) {
      const std::int32_t g = topology(standard_dessin(m, n)).genus;
      const std::int32_t expected = (m * n - m - n - std::gcd(m, n) + 2) / 2;
      s.expect(g == expected, [&] { return "standard genus at " + at_pair(m, n); });
      if (m == n) s.expect(g == (n - 1) * (n - 2) / 2, [&] { return "standard genus at n = " + std::to_string(n); });
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_property_suites(std::int32_t max, unsigned jobs, std::uint64_t seed,
                                             const std::function<void(const SuiteResult&)>& progress) {
  if (max < 1) throw std::invalid_argument("run_property_suites: max must be positive");
  Data d{max, jobs, seed, {}, {}};
  EnumerationOptions options;
  options.jobs = jobs;
  d.skew.resize(static_cast<std::size_t>(max) + 1);
  for (std::int32_t n = 1; n <= max; ++n) d.skew[static_cast<std::size_t>(n)] = enumerate_skew_morphisms(n, options);
  for (std::int32_t m = 1; m <= max; ++m) {
    for (std::int32_t n = 1; n <= max; ++n) {
      d.pairs[{m, n}] = enumerate_reciprocal_pairs(d.skew[static_cast<std::size_t>(m)], d.skew[static_cast<std::size_t>(n)], jobs);
    }
  }

  const std::vector<std::pair<const char*, void (*)(const Data&, Suite&)>> suites{
      {"oracle-equivalence", oracle_equivalence},
      {"orbit-inversion", orbit_inversion},
      {"sigma-vanishing", sigma_vanishing},
      {"power-exponent-law", power_exponent_law},
      {"inverse-closure", inverse_closure},
      {"pair-identities", pair_identities},
      {"swap-closure", swap_closure},
      {"symmetric-skew", symmetric_skew},
      {"mirror-conjugation", mirror_conjugation},
      {"round-trip", round_trip},
      {"triple-equivalence", triple_equivalence},
      {"uniqueness", uniqueness},
      {"dessin-invariants", dessin_invariants},
      {"standard-genus", standard_genus},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, body] : suites) {
    Suite suite(name);
    try {
      body(d, suite);
    } catch (const std::exception& e) {
      suite.fail(e.what());
    }
    results.push_back(suite.take());
    if (progress) progress(results.back());
  }
  return results;
}

}  // namespace skewmorph
