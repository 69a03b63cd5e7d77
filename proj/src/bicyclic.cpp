#include "skewmorph/bicyclic.hpp"

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "skewmorph/errors.hpp"
#include "skewmorph/kernels.hpp"

namespace skewmorph {

namespace {

std::size_t at(std::int32_t row, std::int32_t width, std::int32_t col) {
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col);
}

void require_member(const BicyclicTriple& t, const GroupElement& g) {
  if (g.y.modulus() != t.m() || g.x.modulus() != t.n()) {
    throw std::invalid_argument("element with moduli (" + std::to_string(g.y.modulus()) + ", " +
                                std::to_string(g.x.modulus()) + ") does not belong to an (" + std::to_string(t.m()) +
                                ", " + std::to_string(t.n()) + ") triple");
  }
}

// Checks every group axiom the construction is supposed to guarantee.
void verify_triple(const BicyclicTriple& t, std::uint64_t seed) {
  const std::int32_t m = t.m(), n = t.n(), size = t.size();
  auto mul = [&](std::int32_t g, std::int32_t h) {
    auto [y, x] = t.multiply_raw(g / n, g % n, h / n, h % n);
    return y * n + x;
  };
  for (std::int32_t g = 0; g < size; ++g) {
    if (mul(g, 0) != g || mul(0, g) != g) throw SelfCheckFailure("(0,0) is not a two-sided identity");
    // (a^y b^x)^-1 = b^-x a^-y
    const std::int32_t y = g / n, x = g % n;
    const std::int32_t inv =
        mul(static_cast<std::int32_t>(normalize(-x, n)), static_cast<std::int32_t>(normalize(-y, m)) * n);
    if (mul(g, inv) != 0 || mul(inv, g) != 0) throw SelfCheckFailure("element without a two-sided inverse");
  }
  auto associative = [&](std::int32_t g, std::int32_t h, std::int32_t k) { return mul(mul(g, h), k) == mul(g, mul(h, k)); };
  if (size <= kFullAssociativityLimit) {
    for (std::int32_t g = 0; g < size; ++g) {
      for (std::int32_t h = 0; h < size; ++h) {
        for (std::int32_t k = 0; k < size; ++k) {
          if (!associative(g, h, k)) throw SelfCheckFailure("multiplication is not associative");
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int32_t> pick(0, size - 1);
    for (int s = 0; s < kAssociativitySamples; ++s) {
      const std::int32_t g = pick(rng), h = pick(rng), k = pick(rng);
      if (!associative(g, h, k)) throw SelfCheckFailure("multiplication is not associative");
    }
  }
  if (element_order(t, t.a()) != m) throw SelfCheckFailure("a does not have order m");
  if (element_order(t, t.b()) != n) throw SelfCheckFailure("b does not have order n");
}

SkewMorphism require_skew(std::int32_t n, std::vector<std::int32_t> image, const char* what) {
  auto s = is_skew_morphism(n, Permutation(std::move(image)));
  if (!s) throw SelfCheckFailure(std::string(what) + " is not a skew-morphism");
  return *s;
}

// Assembles a standard pair from induced maps and insists that its extended
// tables are exactly the exponents that were read off.
ReciprocalPair require_pair(std::vector<std::int32_t> phi, std::vector<std::int32_t> pi,
                            std::vector<std::int32_t> phi_star, std::vector<std::int32_t> pi_star) {
  const auto n = static_cast<std::int32_t>(phi.size()), m = static_cast<std::int32_t>(phi_star.size());
  auto pair = is_reciprocal_pair(require_skew(n, std::move(phi), "induced phi"),
                                 require_skew(m, std::move(phi_star), "induced phi_star"));
  if (!pair) throw SelfCheckFailure("induced skew-morphisms do not form a reciprocal pair");
  if (pair->pi_ext() != pi || pair->pi_star_ext() != pi_star) {
    throw SelfCheckFailure("induced power tables differ from the reciprocal tables");
  }
  return *pair;
}

}  // namespace

BicyclicTriple::BicyclicTriple(ReciprocalPair pair) : pair_(std::move(pair)) {
  const std::int32_t m = pair_.m(), n = pair_.n();
  const std::size_t row = static_cast<std::size_t>(m);
  star_power_.resize(row * static_cast<std::size_t>(n));
  star_power_inverse_.resize(star_power_.size());
  sigma_star_.assign(star_power_.size(), 0);
  for (std::int32_t y = 0; y < m; ++y) star_power_[static_cast<std::size_t>(y)] = y;

  std::vector<std::int32_t> step(row);
  for (std::int32_t l = 0; l + 1 < n; ++l) {
    std::span<const std::int32_t> power(&star_power_[at(l, m, 0)], row);
    std::span<const std::int32_t> sigma(&sigma_star_[at(l, m, 0)], row);
    // phi_star^{l+1} = phi_star o phi_star^l; sigma*(y, l+1) = sigma*(y, l) + pi*(phi_star^l(y))
    kernels::gather(pair_.phi_star().phi().image(), power, {&star_power_[at(l + 1, m, 0)], row});
    kernels::gather(pair_.pi_star_ext(), power, step);
    kernels::add_mod(sigma, step, n, {&sigma_star_[at(l + 1, m, 0)], row});
  }
  for (std::int32_t l = 0; l < n; ++l) {
    for (std::int32_t y = 0; y < m; ++y) star_power_inverse_[at(l, m, star_power_[at(l, m, y)])] = y;
  }
}

BicyclicTriple triple_from_pair(const ReciprocalPair& pair, std::uint64_t seed) {
  if (pair.convention() != PairConvention::standard) {
    throw std::invalid_argument("triple_from_pair: needs a standard-convention pair");
  }
  BicyclicTriple t(pair);
  verify_triple(t, seed);
  return t;
}

GroupElement multiply(const BicyclicTriple& t, const GroupElement& g, const GroupElement& h) {
  require_member(t, g);
  require_member(t, h);
  auto [y, x] = t.multiply_raw(g.y.value(), g.x.value(), h.y.value(), h.x.value());
  return t.element(y, x);
}

std::int32_t element_order(const BicyclicTriple& t, const GroupElement& g) {
  require_member(t, g);
  std::int32_t y = g.y.value(), x = g.x.value();
  for (std::int32_t k = 1; k <= t.size(); ++k) {
    if (y == 0 && x == 0) return k;
    std::tie(y, x) = t.multiply_raw(y, x, g.y.value(), g.x.value());
  }
  throw SelfCheckFailure("element order exceeds the group order");
}

std::pair<Residue, Residue> b_first_form(const BicyclicTriple& t, const GroupElement& g) {
  require_member(t, g);
  const std::int32_t m = t.m(), n = t.n();
  std::optional<std::pair<Residue, Residue>> found;
  // b^i a^j = (phi_star^i(j), sigma*(j, i))
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t j = t.star_power_inverse_[at(i, m, g.y.value())];
    if (t.sigma_star_[at(i, m, j)] != g.x.value()) continue;
    if (found) throw SelfCheckFailure("element has two b-first normal forms");
    found.emplace(Residue(i, n), Residue(j, m));
  }
  if (!found) throw SelfCheckFailure("element has no b-first normal form");
  return *found;
}

ReciprocalPair induced_pair(const BicyclicTriple& t) {
  const std::int32_t m = t.m(), n = t.n();
  std::vector<std::int32_t> phi(static_cast<std::size_t>(n)), pi(phi.size());
  for (std::int32_t x = 0; x < n; ++x) {
    // a b^x = (1, x) = b^{phi(x)} a^{pi(x)}
    auto [i, j] = b_first_form(t, t.element(1, x));
    phi[static_cast<std::size_t>(x)] = i.value();
    pi[static_cast<std::size_t>(x)] = j.value();
  }
  std::vector<std::int32_t> phi_star(static_cast<std::size_t>(m)), pi_star(phi_star.size());
  for (std::int32_t y = 0; y < m; ++y) {
    // b a^y is already in a-first form
    auto [yy, xx] = t.multiply_raw(0, 1 % n, y, 0);
    phi_star[static_cast<std::size_t>(y)] = yy;
    pi_star[static_cast<std::size_t>(y)] = xx;
  }
  return require_pair(std::move(phi), std::move(pi), std::move(phi_star), std::move(pi_star));
}

ReciprocalPair mirror_pair(const BicyclicTriple& t) {
  const std::int32_t m = t.m(), n = t.n();
  auto neg = [](std::int32_t v, std::int32_t mod) { return static_cast<std::int32_t>(normalize(-v, mod)); };
  // With A = a^-1, B = b^-1 the element A^y B^x is (-y, -x).
  std::vector<std::int32_t> phi(static_cast<std::size_t>(n)), pi(phi.size());
  for (std::int32_t x = 0; x < n; ++x) {
    // A B^x = (-1, -x) = b^i a^j = B^-i A^-j
    auto [i, j] = b_first_form(t, t.element(-1, -x));
    phi[static_cast<std::size_t>(x)] = neg(i.value(), n);
    pi[static_cast<std::size_t>(x)] = neg(j.value(), m);
  }
  std::vector<std::int32_t> phi_star(static_cast<std::size_t>(m)), pi_star(phi_star.size());
  for (std::int32_t y = 0; y < m; ++y) {
    // B A^y = a^Y b^X = A^-Y B^-X
    auto [yy, xx] = t.multiply_raw(0, neg(1, n), neg(y, m), 0);
    phi_star[static_cast<std::size_t>(y)] = neg(yy, m);
    pi_star[static_cast<std::size_t>(y)] = neg(xx, n);
  }
  return require_pair(std::move(phi), std::move(pi), std::move(phi_star), std::move(pi_star));
}

PermutationModel permutation_model(const ReciprocalPair& pair) {
  const std::int32_t m = pair.m(), n = pair.n();
  std::vector<std::int32_t> a(static_cast<std::size_t>(m + n)), b(a.size());
  for (std::int32_t y = 0; y < m; ++y) {
    a[static_cast<std::size_t>(y)] = (y + 1) % m;
    b[static_cast<std::size_t>(y)] = pair.phi_star().phi()(y);
  }
  for (std::int32_t x = 0; x < n; ++x) {
    a[static_cast<std::size_t>(m + x)] = m + pair.phi().phi()(x);
    b[static_cast<std::size_t>(m + x)] = m + (x + 1) % n;
  }
  PermutationModel model{m, n, Permutation(std::move(a)), Permutation(std::move(b))};

  // closure of <a, b>, abandoned as soon as it outgrows m*n
  const auto limit = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  std::set<Permutation> seen{Permutation::identity(m + n)};
  std::vector<Permutation> frontier{Permutation::identity(m + n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& g : frontier) {
      for (const Permutation* s : {&model.a, &model.b}) {
        Permutation h = compose(g, *s);
        if (seen.insert(h).second) {
          if (seen.size() > limit) throw SelfCheckFailure("permutation model generates more than m*n elements");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  if (seen.size() != limit) throw SelfCheckFailure("permutation model generates fewer than m*n elements");
  return model;
}

Permutation model_element(const PermutationModel& model, std::int32_t y, std::int32_t x) {
  return compose(power(model.b, x), power(model.a, y));
}

bool model_matches_triple(const PermutationModel& model, const BicyclicTriple& t) {
  if (model.m != t.m() || model.n != t.n()) return false;
  const std::int32_t size = t.size();
  std::vector<Permutation> images;
  images.reserve(static_cast<std::size_t>(size));
  for (std::int32_t g = 0; g < size; ++g) images.push_back(model_element(model, g / t.n(), g % t.n()));
  if (std::set<Permutation>(images.begin(), images.end()).size() != images.size()) return false;

  auto image_of_product = [&](std::int32_t g, std::int32_t h) {
    auto [y, x] = t.multiply_raw(g / t.n(), g % t.n(), h / t.n(), h % t.n());
    return images[static_cast<std::size_t>(y * t.n() + x)];
  };
  // P(g h) = P(g) P(h) in function notation, i.e. P(h) acts first
  const bool exhaustive = size <= kFullAssociativityLimit;
  const std::vector<std::int32_t> generators{t.index_of(t.a()), t.index_of(t.b())};
  for (std::int32_t g = 0; g < size; ++g) {
    const std::int32_t hs = exhaustive ? size : static_cast<std::int32_t>(generators.size());
    for (std::int32_t k = 0; k < hs; ++k) {
      const std::int32_t h = exhaustive ? k : generators[static_cast<std::size_t>(k)];
      if (image_of_product(g, h) != compose(images[static_cast<std::size_t>(h)], images[static_cast<std::size_t>(g)])) {
        return false;
      }
    }
  }
  return true;
}

ReciprocalPair pair_from_model(const PermutationModel& model) {
  const std::int32_t m = model.m, n = model.n;
  std::map<Permutation, std::pair<std::int32_t, std::int32_t>> a_first, b_first;
  for (std::int32_t y = 0; y < m; ++y) {
    const Permutation ay = power(model.a, y);
    for (std::int32_t x = 0; x < n; ++x) {
      const Permutation bx = power(model.b, x);
      a_first.emplace(compose(bx, ay), std::pair{y, x});  // a^y b^x
      b_first.emplace(compose(ay, bx), std::pair{x, y});  // b^x a^y
    }
  }
  auto lookup = [](const auto& table, const Permutation& p) {
    auto it = table.find(p);
    if (it == table.end()) throw SelfCheckFailure("product escapes the normal forms of the model");
    return it->second;
  };
  std::vector<std::int32_t> phi(static_cast<std::size_t>(n)), pi(phi.size());
  for (std::int32_t x = 0; x < n; ++x) {
    auto [i, j] = lookup(b_first, compose(power(model.b, x), model.a));  // a b^x
    phi[static_cast<std::size_t>(x)] = i;
    pi[static_cast<std::size_t>(x)] = j;
  }
  std::vector<std::int32_t> phi_star(static_cast<std::size_t>(m)), pi_star(phi_star.size());
  for (std::int32_t y = 0; y < m; ++y) {
    auto [yy, xx] = lookup(a_first, compose(power(model.a, y), model.b));  // b a^y
    phi_star[static_cast<std::size_t>(y)] = yy;
    pi_star[static_cast<std::size_t>(y)] = xx;
  }
  return require_pair(std::move(phi), std::move(pi), std::move(phi_star), std::move(pi_star));
}

bool triples_equivalent(const BicyclicTriple& t1, const BicyclicTriple& t2) {
  if (t1.m() != t2.m() || t1.n() != t2.n()) return false;
  const std::int32_t size = t1.size(), n = t1.n();
  const bool exhaustive = size <= kFullAssociativityLimit;
  // Same normal forms on both sides, so the generator-respecting map is the
  // identity on coordinates; it is a homomorphism iff the products agree
  // (right multiplication by generators already determines everything).
  bool direct = true;
  const std::vector<std::int32_t> generators{t1.index_of(t1.a()), t1.index_of(t1.b())};
  for (std::int32_t g = 0; g < size && direct; ++g) {
    const std::int32_t hs = exhaustive ? size : 2;
    for (std::int32_t k = 0; k < hs && direct; ++k) {
      const std::int32_t h = exhaustive ? k : generators[static_cast<std::size_t>(k)];
      direct = t1.multiply_raw(g / n, g % n, h / n, h % n) == t2.multiply_raw(g / n, g % n, h / n, h % n);
    }
  }
  if (direct != (t1.pair() == t2.pair())) {
    throw SelfCheckFailure("triple equivalence disagrees with equality of the defining pairs");
  }
  return direct;
}

bool is_abelian(const BicyclicTriple& t) { return multiply(t, t.a(), t.b()) == multiply(t, t.b(), t.a()); }

namespace {

std::int64_t smallest_prime_factor(std::int64_t v) {
  for (std::int64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return p;
  }
  return v;
}

// Smallest s in Z_mod of multiplicative order p (p prime dividing phi(mod)).
std::int64_t unit_of_order(std::int64_t p, std::int32_t mod) {
  for (std::int64_t s = 2; s < mod; ++s) {
    if (std::gcd(s, static_cast<std::int64_t>(mod)) == 1 && multiplicative_order(s, mod) == p) return s;
  }
  throw SelfCheckFailure("no unit of order " + std::to_string(p) + " modulo " + std::to_string(mod));
}

}  // namespace

std::optional<ReciprocalPair> nonabelian_witness_pair(std::int32_t m, std::int32_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("nonabelian_witness_pair: m and n must be positive");
  std::optional<ReciprocalPair> pair;
  if (const std::int64_t g = std::gcd(static_cast<std::int64_t>(n), euler_phi(m)); g > 1) {
    const std::int64_t s = unit_of_order(smallest_prime_factor(g), m);
    pair = is_reciprocal_pair(*is_skew_morphism(n, Permutation::identity(n)), multiplication_map(m, s));
  } else if (const std::int64_t h = std::gcd(static_cast<std::int64_t>(m), euler_phi(n)); h > 1) {
    const std::int64_t s = unit_of_order(smallest_prime_factor(h), n);
    pair = is_reciprocal_pair(multiplication_map(n, s), *is_skew_morphism(m, Permutation::identity(m)));
  } else {
    return std::nullopt;
  }
  if (!pair) throw SelfCheckFailure("metacyclic witness is not a reciprocal pair");
  if (is_abelian(triple_from_pair(*pair))) throw SelfCheckFailure("metacyclic witness gives an abelian group");
  return pair;
}

std::vector<std::int32_t> cayley_table(const BicyclicTriple& t) {
  const std::int32_t size = t.size(), n = t.n();
  std::vector<std::int32_t> table(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (std::int32_t g = 0; g < size; ++g) {
    for (std::int32_t h = 0; h < size; ++h) {
      auto [y, x] = t.multiply_raw(g / n, g % n, h / n, h % n);
      table[at(g, size, h)] = y * n + x;
    }
  }
  return table;
}

}  // namespace skewmorph
