#include "skewmorph/cli.hpp"

#include <iomanip>
#include <map>
#include <vector>

#include <CLI11.hpp>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/cache.hpp"
#include "skewmorph/dessin.hpp"
#include "skewmorph/errors.hpp"
#include "skewmorph/serialize.hpp"
#include "skewmorph/singularity.hpp"
#include "skewmorph/verify.hpp"

namespace skewmorph::cli {

namespace {

// Enumeration stays desk-scale; anything above this is refused rather than
// left running for hours.
constexpr std::int32_t kMaxModulus = 64;
constexpr std::int32_t kMaxScan = 30;

void require_modulus(const char* flag, std::int32_t v) {
  if (v < 1 || v > kMaxModulus) {
    throw UsageError(std::string(flag) + " must be in [1, " + std::to_string(kMaxModulus) + "], got " + std::to_string(v));
  }
}

Catalog make_catalog(const RunConfig& config, std::ostream& err) {
  Catalog::Options options;
  if (!config.no_cache) options.cache_dir = config.cache_dir ? *config.cache_dir : default_cache_dir();
  options.jobs = config.jobs;
  options.log = &err;
  return Catalog(std::move(options));
}

void skew_enum(const RunConfig& config, Catalog& catalog, std::ostream& out, std::ostream& err) {
  const auto& list = catalog.skew(config.n);
  if (config.oracle) {
    if (brute_force_skew_morphisms(config.n) != list) throw SelfCheckFailure("enumeration differs from brute force");
    err << "oracle: " << list.size() << " skew-morphisms of Z_" << config.n << " agree with brute force\n";
  }
  if (config.format == Format::csv) out << "n,perm,order,pi,automorphism\n";
  for (const SkewMorphism& s : list) {
    switch (config.format) {
      case Format::json:
        out << to_json(s).dump() << '\n';
        break;
      case Format::text:
        out << s.phi().to_cycle_string() << "  " << cycle_power_string(s) << "  order " << s.order() << '\n';
        break;
      case Format::csv:
        out << s.modulus() << ',' << join({s.phi().image().begin(), s.phi().image().end()}) << ',' << s.order() << ','
            << join(s.pi()) << ',' << (s.is_automorphism() ? "yes" : "no") << '\n';
        break;
    }
  }
}

void recip_enum(const RunConfig& config, Catalog& catalog, std::ostream& out) {
  const auto& pairs = catalog.pairs(config.m, config.n);
  std::map<PairType, int> counts;
  if (config.format == Format::csv) out << "index,type,phi,phi_star,pi_ext,pi_star_ext\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ReciprocalPair& p = pairs[i];
    ++counts[p.type()];
    switch (config.format) {
      case Format::json:
        out << to_json(p).dump() << '\n';
        break;
      case Format::text:
        out << std::setw(4) << i << "  " << std::left << std::setw(5) << type_label(p.type()) << std::right
            << "phi " << p.phi().phi().to_cycle_string() << "  phi_star " << p.phi_star().phi().to_cycle_string() << '\n';
        break;
      case Format::csv:
        out << i << ',' << type_label(p.type()) << ',' << p.phi().phi().to_cycle_string() << ','
            << p.phi_star().phi().to_cycle_string() << ',' << join(p.pi_ext()) << ',' << join(p.pi_star_ext()) << '\n';
        break;
    }
  }
  if (config.format == Format::text) {
    out << "total " << pairs.size() << "  I " << counts[PairType::type_i] << "  II " << counts[PairType::type_ii]
        << "  other " << counts[PairType::other] << '\n';
  }
}

void triple_build(const RunConfig& config, Catalog& catalog, std::ostream& out) {
  const auto& pairs = catalog.pairs(config.m, config.n);
  if (config.index < 0 || config.index >= static_cast<std::int32_t>(pairs.size())) {
    throw UsageError("--index must be in [0, " + std::to_string(pairs.size()) + ") for (m, n) = (" +
                     std::to_string(config.m) + ", " + std::to_string(config.n) + ")");
  }
  const BicyclicTriple t = triple_from_pair(pairs[static_cast<std::size_t>(config.index)], config.seed);
  if (config.cayley) {
    out << cayley_csv(t);
    return;
  }
  const Dessin d = dessin_from_triple(t);
  if (config.rotation_system) {
    out << rotation_system(d);
    return;
  }
  const DessinTopology topo = topology(d);
  const auto order_ab = element_order(t, multiply(t, t.a(), t.b()));
  switch (config.format) {
    case Format::json: {
      Json j = triple_to_json(t);
      j["index"] = config.index;
      j["topology"] = to_json(topo);
      out << j.dump() << '\n';
      break;
    }
    case Format::text:
      out << "pair " << config.index << " of (" << t.m() << ", " << t.n() << "), type " << type_label(t.pair().type())
          << '\n'
          << "phi       " << t.pair().phi().phi().to_cycle_string() << '\n'
          << "phi_star  " << t.pair().phi_star().phi().to_cycle_string() << '\n'
          << "order     " << t.size() << '\n'
          << "abelian   " << (is_abelian(t) ? "yes" : "no") << '\n'
          << "|ab|      " << order_ab << '\n'
          << "faces     " << topo.faces << '\n'
          << "genus     " << topo.genus << '\n';
      break;
    case Format::csv:
      out << "m,n,index,abelian,order_ab,faces,genus\n"
          << t.m() << ',' << t.n() << ',' << config.index << ',' << (is_abelian(t) ? "yes" : "no") << ',' << order_ab
          << ',' << topo.faces << ',' << topo.genus << '\n';
      break;
  }
}

void dessin_classify(const RunConfig& config, Catalog& catalog, std::ostream& out) {
  const auto& pairs = catalog.pairs(config.m, config.n);
  const auto& swapped = config.m == config.n ? pairs : catalog.pairs(config.n, config.m);
  const DessinClassification c = classify_dessins(pairs, swapped, config.jobs, config.seed);
  switch (config.format) {
    case Format::json:
      out << to_json(c).dump() << '\n';
      break;
    case Format::text:
      out << classification_text(c);
      break;
    case Format::csv: {
      std::string spectrum;
      for (auto [genus, count] : c.genus_spectrum) {
        if (!spectrum.empty()) spectrum += ' ';
        spectrum += std::to_string(genus) + ":" + std::to_string(count);
      }
      out << "m,n,total,up_to_reciprocity,symmetric,abelian,genus_spectrum\n"
          << c.m << ',' << c.n << ',' << c.total << ',' << c.up_to_reciprocity << ',' << c.symmetric << ','
          << c.abelian << ',' << spectrum << '\n';
      break;
    }
  }
}

void singular_scan(const RunConfig& config, Catalog& catalog, std::ostream& out) {
  std::vector<SingularityReport> cells;
  for (std::int32_t m = 1; m <= config.max; ++m) {
    for (std::int32_t n = 1; n <= config.max; ++n) {
      cells.push_back(uniqueness_report(catalog.pairs(m, n), m, n, config.jobs, config.seed));
    }
  }
  switch (config.format) {
    case Format::json:
      for (const auto& r : cells) out << to_json(r).dump() << '\n';
      break;
    case Format::csv:
      out << singular_grid_csv(cells, config.max);
      break;
    case Format::text: {
      out << " m\\n";
      for (std::int32_t n = 1; n <= config.max; ++n) out << std::setw(5) << n;
      out << '\n';
      for (std::int32_t m = 1; m <= config.max; ++m) {
        out << std::setw(4) << m;
        for (std::int32_t n = 1; n <= config.max; ++n) {
          const auto& r = cells[static_cast<std::size_t>((m - 1) * config.max + (n - 1))];
          out << std::setw(5) << (r.singular ? std::string("S") : std::to_string(*r.pair_count));
        }
        out << '\n';
      }
      break;
    }
  }
}

int verify_all(const RunConfig& config, std::ostream& out) {
  if (config.format == Format::csv) out << "suite,checks,passed\n";
  bool all = true;
  run_property_suites(config.max, config.jobs, config.seed, [&](const SuiteResult& r) {
    all = all && r.passed;
    switch (config.format) {
      case Format::json:
        out << Json{{"suite", r.name}, {"checks", r.checks}, {"passed", r.passed}, {"detail", r.detail}}.dump() << '\n';
        break;
      case Format::text:
        out << (r.passed ? "ok    " : "FAIL  ") << std::left << std::setw(22) << r.name << std::right << std::setw(10)
            << r.checks << " checks" << (r.passed ? "" : "  " + r.detail) << '\n';
        break;
      case Format::csv:
        out << r.name << ',' << r.checks << ',' << (r.passed ? "yes" : "no") << '\n';
        break;
    }
    out.flush();
  });
  return all ? kExitOk : kExitSelfCheck;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  switch (config.command) {
    case Command::skew_enum:
      require_modulus("--n", config.n);
      if (config.oracle && config.n > kBruteForceLimit) {
        throw UsageError("--oracle needs --n <= " + std::to_string(kBruteForceLimit));
      }
      break;
    case Command::recip_enum:
    case Command::dessin_classify:
      require_modulus("--m", config.m);
      require_modulus("--n", config.n);
      break;
    case Command::triple_build:
      require_modulus("--m", config.m);
      require_modulus("--n", config.n);
      if (config.cayley && config.rotation_system) throw UsageError("--cayley and --rotation-system are exclusive");
      if (config.cayley && config.m * config.n > kFullAssociativityLimit) {
        throw UsageError("--cayley needs m*n <= " + std::to_string(kFullAssociativityLimit));
      }
      break;
    case Command::singular_scan:
    case Command::verify_all:
      if (config.max < 1 || config.max > kMaxScan) {
        throw UsageError("--max must be in [1, " + std::to_string(kMaxScan) + "], got " + std::to_string(config.max));
      }
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.command == Command::verify_all) {
      const int status = verify_all(config, out);
      if (status != kExitOk) err << "error: property suite failed\n";
      return status;
    }
    Catalog catalog = make_catalog(config, err);
    switch (config.command) {
      case Command::skew_enum:
        skew_enum(config, catalog, out, err);
        break;
      case Command::recip_enum:
        recip_enum(config, catalog, out);
        break;
      case Command::triple_build:
        triple_build(config, catalog, out);
        break;
      case Command::dessin_classify:
        dessin_classify(config, catalog, out);
        break;
      case Command::singular_scan:
        singular_scan(config, catalog, out);
        break;
      case Command::verify_all:
        break;
    }
    out.flush();
    if (!out) throw IoError("cannot write output");
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "self-check failure: " << e.what() << '\n';
    return kExitSelfCheck;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-morphisms of cyclic groups, reciprocal pairs, bicyclic triples and complete regular dessins"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "json";
  std::string cache_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--cache-dir", cache_dir, "cache directory (default: $SKEWMORPH_CACHE_DIR or the user cache)");
    sub->add_flag("--no-cache", config.no_cache, "recompute and do not touch the cache");
    sub->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", config.seed, "seed for sampled associativity checks");
  };
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("--m", config.m, "order of a")->required();
    sub->add_option("--n", config.n, "order of b")->required();
  };

  auto* skew = app.add_subcommand("skew-enum", "list the skew-morphisms of Z_n");
  skew->add_option("--n", config.n, "modulus")->required();
  skew->add_flag("--oracle", config.oracle, "cross-check against brute force (n <= 9)");
  common(skew);

  auto* recip = app.add_subcommand("recip-enum", "list the (m, n)-reciprocal pairs");
  add_mn(recip);
  common(recip);

  auto* triple = app.add_subcommand("triple-build", "build the bicyclic triple and dessin of one pair");
  add_mn(triple);
  triple->add_option("--index", config.index, "position of the pair in recip-enum order");
  triple->add_flag("--cayley", config.cayley, "print the Cayley table as CSV (m*n <= 200)");
  triple->add_flag("--rotation-system", config.rotation_system, "print the dessin's rotation system");
  common(triple);

  auto* dessin = app.add_subcommand("dessin-classify", "classify the (m, n)-complete regular dessins");
  add_mn(dessin);
  common(dessin);

  auto* scan = app.add_subcommand("singular-scan", "pair counts and singular cells for m, n <= max");
  scan->add_option("--max", config.max, "grid size")->required();
  common(scan);

  auto* verify = app.add_subcommand("verify-all", "run every property suite for moduli <= max");
  verify->add_option("--max", config.max, "largest modulus")->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<CLI::App*, Command> commands{{skew, Command::skew_enum},         {recip, Command::recip_enum},
                                              {triple, Command::triple_build},    {dessin, Command::dessin_classify},
                                              {scan, Command::singular_scan},     {verify, Command::verify_all}};
  config.command = commands.at(app.get_subcommands().front());
  config.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  return run(config, out, err);
}

}  // namespace skewmorph::cli
