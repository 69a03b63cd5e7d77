#include "skewmorph/dessin.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skewmorph/errors.hpp"
#include "skewmorph/parallel.hpp"

namespace skewmorph {

namespace {

Permutation right_translation(const BicyclicTriple& t, const GroupElement& h) {
  const std::int32_t n = t.n();
  std::vector<std::int32_t> image(static_cast<std::size_t>(t.size()));
  for (std::int32_t g = 0; g < t.size(); ++g) {
    auto [y, x] = t.multiply_raw(g / n, g % n, h.y.value(), h.x.value());
    image[static_cast<std::size_t>(g)] = y * n + x;
  }
  return Permutation(std::move(image));
}

// Labels each edge by the unique coset member satisfying `is_rep`, whose
// label is `label_of(member)`. Throws unless every cycle has exactly one.
template <class IsRep, class LabelOf>
std::vector<std::int32_t> coset_labels(const Permutation& translation, std::int32_t cycle_count,
                                       std::int32_t cycle_length, IsRep is_rep, LabelOf label_of, const char* what) {
  const auto cycles = orbits(translation);
  if (static_cast<std::int32_t>(cycles.size()) != cycle_count) {
    throw SelfCheckFailure(std::string(what) + " rotation has the wrong number of cycles");
  }
  std::vector<std::int32_t> labels(static_cast<std::size_t>(translation.degree()));
  for (const Cycle& c : cycles) {
    if (static_cast<std::int32_t>(c.size()) != cycle_length) {
      throw SelfCheckFailure(std::string(what) + " vertex with the wrong valency");
    }
    const auto reps = std::count_if(c.begin(), c.end(), is_rep);
    if (reps != 1) throw SelfCheckFailure(std::string(what) + " coset without a unique representative");
    const std::int32_t label = label_of(*std::find_if(c.begin(), c.end(), is_rep));
    for (std::int32_t e : c) labels[static_cast<std::size_t>(e)] = label;
  }
  return labels;
}

bool transitive(const Permutation& p, const Permutation& q) {
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  std::vector<std::int32_t> stack{0};
  seen[0] = true;
  std::int32_t reached = 1;
  while (!stack.empty()) {
    const std::int32_t e = stack.back();
    stack.pop_back();
    for (std::int32_t f : {p(e), q(e)}) {
      if (!seen[static_cast<std::size_t>(f)]) {
        seen[static_cast<std::size_t>(f)] = true;
        ++reached;
        stack.push_back(f);
      }
    }
  }
  return reached == p.degree();
}

}  // namespace

Dessin::Dessin(BicyclicTriple triple)
    : triple_(std::move(triple)),
      rho_(right_translation(triple_, triple_.a())),
      lambda_(right_translation(triple_, triple_.b())) {
  const std::int32_t m = triple_.m(), n = triple_.n();
  // b^i = (0, i) represents the black coset b^i<a>; a^y = (y, 0) the white a^y<b>
  black_ = coset_labels(
      rho_, n, m, [n](std::int32_t e) { return e / n == 0; }, [n](std::int32_t e) { return e % n; }, "black");
  white_ = coset_labels(
      lambda_, m, n, [n](std::int32_t e) { return e % n == 0; }, [n](std::int32_t e) { return e / n; }, "white");
  if (!transitive(rho_, lambda_)) throw SelfCheckFailure("monodromy group is not transitive on edges");

  std::vector<std::int32_t> incidences(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
  for (std::int32_t e = 0; e < edge_count(); ++e) {
    auto& count = incidences[static_cast<std::size_t>(black_of(e)) * static_cast<std::size_t>(m) +
                             static_cast<std::size_t>(white_of(e))];
    if (++count > 1) throw SelfCheckFailure("a black and a white vertex share more than one edge");
  }
}

Cycle Dessin::black_rotation(std::int32_t i) const {
  if (i < 0 || i >= n()) throw std::invalid_argument("black vertex label out of range");
  Cycle rotation{i};
  for (std::int32_t e = rho_(i); e != i; e = rho_(e)) rotation.push_back(e);
  return rotation;
}

Cycle Dessin::white_rotation(std::int32_t y) const {
  if (y < 0 || y >= m()) throw std::invalid_argument("white vertex label out of range");
  const std::int32_t start = y * n();
  Cycle rotation{start};
  for (std::int32_t e = lambda_(start); e != start; e = lambda_(e)) rotation.push_back(e);
  return rotation;
}

Dessin dessin_from_triple(const BicyclicTriple& t) { return Dessin(t); }

std::int32_t faces_by_orbits(const Dessin& d) {
  return static_cast<std::int32_t>(orbits(compose(d.rho(), d.lambda())).size());
}

std::int32_t faces_by_order(const Dessin& d) {
  const BicyclicTriple& t = d.triple();
  return t.size() / element_order(t, multiply(t, t.a(), t.b()));
}

DessinTopology topology(const Dessin& d) {
  DessinTopology topo;
  topo.vertices = d.m() + d.n();
  topo.edges = d.edge_count();
  topo.faces = faces_by_orbits(d);
  if (topo.faces != faces_by_order(d)) throw SelfCheckFailure("face count by orbits differs from m*n/|ab|");
  topo.euler_characteristic = topo.vertices - topo.edges + topo.faces;
  if (topo.euler_characteristic % 2 != 0 || topo.euler_characteristic > 2) {
    throw SelfCheckFailure("impossible Euler characteristic " + std::to_string(topo.euler_characteristic));
  }
  topo.genus = (2 - topo.euler_characteristic) / 2;
  return topo;
}

bool translations_commute(const Dessin& d) {
  const BicyclicTriple& t = d.triple();
  const std::int32_t size = t.size(), n = t.n();
  std::vector<std::int32_t> hs;
  if (size <= kFullAssociativityLimit) {
    for (std::int32_t h = 0; h < size; ++h) hs.push_back(h);
  } else {
    hs = {t.index_of(t.a()), t.index_of(t.b())};
  }
  std::vector<std::int32_t> left(static_cast<std::size_t>(size));
  for (std::int32_t h : hs) {
    for (std::int32_t g = 0; g < size; ++g) {
      auto [y, x] = t.multiply_raw(h / n, h % n, g / n, g % n);
      left[static_cast<std::size_t>(g)] = y * n + x;
      if (h != 0 && left[static_cast<std::size_t>(g)] == g) return false;
    }
    for (std::int32_t g = 0; g < size; ++g) {
      const auto lg = left[static_cast<std::size_t>(g)];
      if (left[static_cast<std::size_t>(d.rho()(g))] != d.rho()(lg)) return false;
      if (left[static_cast<std::size_t>(d.lambda()(g))] != d.lambda()(lg)) return false;
    }
  }
  return true;
}

Dessin reciprocal_dessin(const Dessin& d) {
  return dessin_from_triple(triple_from_pair(swap_pair(d.triple().pair())));
}

bool is_symmetric_dessin(const Dessin& d) {
  const ReciprocalPair& p = d.triple().pair();
  return d.m() == d.n() && p.phi() == p.phi_star();
}

Dessin standard_dessin(std::int32_t m, std::int32_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("standard_dessin: m and n must be positive");
  auto pair = is_reciprocal_pair(*is_skew_morphism(n, Permutation::identity(n)),
                                 *is_skew_morphism(m, Permutation::identity(m)));
  if (!pair) throw SelfCheckFailure("(id_n, id_m) rejected as a reciprocal pair");
  return dessin_from_triple(triple_from_pair(*pair));
}

std::string rotation_system(const Dessin& d) {
  std::ostringstream out;
  auto line = [&out](char colour, std::int32_t label, const Cycle& edges) {
    out << colour << label << ':';
    for (std::int32_t e : edges) out << ' ' << e;
    out << '\n';
  };
  for (std::int32_t i = 0; i < d.n(); ++i) line('B', i, d.black_rotation(i));
  for (std::int32_t y = 0; y < d.m(); ++y) line('W', y, d.white_rotation(y));
  return out.str();
}

namespace {

struct ClassRecord {
  std::int32_t genus = 0;
  bool abelian = false;
  bool symmetric = false;
};

}  // namespace

DessinClassification classify_dessins(const std::vector<ReciprocalPair>& pairs,
                                      const std::vector<ReciprocalPair>& swapped_pairs, unsigned jobs,
                                      std::uint64_t seed) {
  if (pairs.empty()) throw std::invalid_argument("classify_dessins: no pairs (the identity pair always exists)");
  DessinClassification report;
  report.m = pairs.front().m();
  report.n = pairs.front().n();
  for (const auto& p : pairs) {
    if (p.m() != report.m || p.n() != report.n) throw std::invalid_argument("classify_dessins: mixed (m, n)");
  }
  for (const auto& p : swapped_pairs) {
    if (p.m() != report.n || p.n() != report.m) throw std::invalid_argument("classify_dessins: swapped list has wrong (m, n)");
  }

  std::vector<ClassRecord> records(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const Dessin d = dessin_from_triple(triple_from_pair(pairs[i], seed));
    const Dessin r = reciprocal_dessin(d);
    const std::int32_t genus = topology(d).genus;
    if (topology(r).genus != genus) throw SelfCheckFailure("reciprocal dessin changes the genus");
    records[i] = {genus, is_abelian(d.triple()), is_symmetric_dessin(d)};
  });

  report.total = static_cast<std::int32_t>(pairs.size());
  for (const auto& rec : records) {
    ++report.genus_spectrum[rec.genus];
    report.abelian += rec.abelian;
    report.symmetric += rec.symmetric;
  }

  // ReciprocalPair has no ordering, so match on the image tables
  using Key = std::pair<Permutation, Permutation>;
  auto key = [](const ReciprocalPair& p) { return Key{p.phi().phi(), p.phi_star().phi()}; };
  std::set<Key> other;
  for (const auto& p : swapped_pairs) other.insert(key(p));
  if (other.size() != swapped_pairs.size()) throw SelfCheckFailure("duplicate pair in the swapped list");

  std::int32_t matched = 0, orbits_found = 0;
  std::set<Key> visited;
  for (const auto& p : pairs) {
    const Key swapped{p.phi_star().phi(), p.phi().phi()};
    if (other.contains(swapped)) ++matched;
    if (visited.insert(key(p)).second) {
      ++orbits_found;
      visited.insert(swapped);
    }
  }
  if (matched != report.total || static_cast<std::int32_t>(swapped_pairs.size()) != report.total) {
    throw SelfCheckFailure("colour swap does not match the (m, n) and (n, m) classes one to one");
  }
  report.up_to_reciprocity = report.m == report.n ? orbits_found : matched;
  return report;
}

DessinClassification classify_dessins(std::int32_t m, std::int32_t n, unsigned jobs, std::uint64_t seed) {
  auto pairs = enumerate_reciprocal_pairs(m, n, jobs);
  if (m == n) return classify_dessins(pairs, pairs, jobs, seed);
  return classify_dessins(pairs, enumerate_reciprocal_pairs(n, m, jobs), jobs, seed);
}

}  // namespace skewmorph
