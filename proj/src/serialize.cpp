#include "skewmorph/serialize.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace skewmorph {

namespace {

std::vector<std::int32_t> as_vector(std::span<const std::int32_t> values) { return {values.begin(), values.end()}; }

template <class T>
T field(const Json& record, const char* name) {
  if (!record.is_object() || !record.contains(name)) {
    throw std::invalid_argument(std::string("record lacks field \"") + name + "\"");
  }
  try {
    return record.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field \"") + name + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const SkewMorphism& s) {
  Json j;
  j["n"] = s.modulus();
  j["perm"] = as_vector(s.phi().image());
  j["order"] = s.order();
  j["pi"] = s.pi();
  return j;
}

Json to_json(const ReciprocalPair& pair) {
  Json j;
  j["m"] = pair.m();
  j["n"] = pair.n();
  j["phi"] = to_json(pair.phi());
  j["phi_star"] = to_json(pair.phi_star());
  j["pi_ext"] = pair.pi_ext();
  j["pi_star_ext"] = pair.pi_star_ext();
  j["type"] = type_label(pair.type());
  if (pair.convention() == PairConvention::mirror) j["convention"] = "mirror";
  return j;
}

Json triple_to_json(const BicyclicTriple& t) {
  Json j = to_json(t.pair());
  j["abelian"] = is_abelian(t);
  j["order_ab"] = element_order(t, multiply(t, t.a(), t.b()));
  return j;
}

Json to_json(const DessinTopology& topo) {
  return Json{{"vertices", topo.vertices},
              {"edges", topo.edges},
              {"faces", topo.faces},
              {"euler_characteristic", topo.euler_characteristic},
              {"genus", topo.genus}};
}

Json to_json(const DessinClassification& c) {
  Json spectrum = Json::array();
  for (auto [genus, count] : c.genus_spectrum) spectrum.push_back(Json{{"genus", genus}, {"count", count}});
  return Json{{"m", c.m},
              {"n", c.n},
              {"total", c.total},
              {"up_to_reciprocity", c.up_to_reciprocity},
              {"symmetric", c.symmetric},
              {"abelian", c.abelian},
              {"genus_spectrum", spectrum}};
}

Json to_json(const SingularityReport& r) {
  Json j{{"m", r.m},
         {"n", r.n},
         {"phi_n", r.phi_n},
         {"phi_m", r.phi_m},
         {"gcd_m_phin", r.gcd_m_phin},
         {"gcd_n_phim", r.gcd_n_phim},
         {"singular", r.singular}};
  if (r.pair_count) j["pair_count"] = *r.pair_count;
  if (r.all_abelian) j["all_abelian"] = *r.all_abelian;
  if (r.all_standard) j["all_standard"] = *r.all_standard;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

SkewMorphism skew_from_json(const Json& record) {
  const auto n = field<std::int32_t>(record, "n");
  auto perm = field<std::vector<std::int32_t>>(record, "perm");
  if (n < 1 || static_cast<std::int32_t>(perm.size()) != n) throw std::invalid_argument("perm length differs from n");
  auto s = is_skew_morphism(n, Permutation(std::move(perm)));
  if (!s) throw std::invalid_argument("record is not a skew-morphism");
  if (field<std::int32_t>(record, "order") != s->order() || field<std::vector<std::int32_t>>(record, "pi") != s->pi()) {
    throw std::invalid_argument("stored order or power function differs from the recomputed one");
  }
  return *s;
}

ReciprocalPair pair_from_json(const Json& record) {
  const SkewMorphism phi = skew_from_json(field<Json>(record, "phi"));
  const SkewMorphism phi_star = skew_from_json(field<Json>(record, "phi_star"));
  const bool mirror = record.contains("convention") && record.at("convention") == "mirror";
  auto pair = make_pair(phi, phi_star, mirror ? PairConvention::mirror : PairConvention::standard);
  if (!pair) throw std::invalid_argument("record is not a reciprocal pair");
  if (field<std::int32_t>(record, "m") != pair->m() || field<std::int32_t>(record, "n") != pair->n() ||
      field<std::vector<std::int32_t>>(record, "pi_ext") != pair->pi_ext() ||
      field<std::vector<std::int32_t>>(record, "pi_star_ext") != pair->pi_star_ext() ||
      field<std::string>(record, "type") != type_label(pair->type())) {
    throw std::invalid_argument("stored pair fields differ from the recomputed ones");
  }
  return *pair;
}

std::string permutation_json(const Permutation& p) { return Json(as_vector(p.image())).dump(); }

std::string cycle_power_string(const SkewMorphism& s) {
  std::string out;
  for (const Cycle& c : orbits(s.phi())) {
    out += '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s.pi()[static_cast<std::size_t>(c[i])]);
    }
    out += ']';
  }
  return out;
}

std::string join(const std::vector<std::int32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string cayley_csv(const BicyclicTriple& t) {
  const auto table = cayley_table(t);
  const std::int32_t size = t.size(), n = t.n();
  auto label = [n](std::int32_t g) { return std::to_string(g / n) + "." + std::to_string(g % n); };
  std::ostringstream out;
  for (std::int32_t h = 0; h < size; ++h) out << ',' << label(h);
  out << '\n';
  for (std::int32_t g = 0; g < size; ++g) {
    out << label(g);
    for (std::int32_t h = 0; h < size; ++h) {
      out << ',' << label(table[static_cast<std::size_t>(g) * static_cast<std::size_t>(size) + static_cast<std::size_t>(h)]);
    }
    out << '\n';
  }
  return out.str();
}

std::string classification_text(const DessinClassification& c) {
  std::ostringstream out;
  auto row = [&out](const std::string& key, const std::string& value) {
    out << std::left << std::setw(20) << key << value << '\n';
  };
  row("m", std::to_string(c.m));
  row("n", std::to_string(c.n));
  row("classes", std::to_string(c.total));
  row("up to reciprocity", std::to_string(c.up_to_reciprocity));
  row("symmetric", std::to_string(c.symmetric));
  row("abelian", std::to_string(c.abelian));
  out << "genus  count\n";
  for (auto [genus, count] : c.genus_spectrum) out << std::right << std::setw(5) << genus << std::setw(7) << count << '\n';
  return out.str();
}

std::string singular_grid_csv(const std::vector<SingularityReport>& reports, std::int32_t max) {
  if (static_cast<std::int64_t>(reports.size()) != static_cast<std::int64_t>(max) * max) {
    throw std::invalid_argument("singular_grid_csv: expected max*max cells");
  }
  std::ostringstream out;
  out << "m\\n";
  for (std::int32_t n = 1; n <= max; ++n) out << ',' << n;
  out << '\n';
  for (std::int32_t m = 1; m <= max; ++m) {
    out << m;
    for (std::int32_t n = 1; n <= max; ++n) {
      const auto& r = reports[static_cast<std::size_t>((m - 1) * max + (n - 1))];
      out << ',';
      if (r.singular) {
        out << 'S';
      } else if (r.pair_count) {
        out << *r.pair_count;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace skewmorph
