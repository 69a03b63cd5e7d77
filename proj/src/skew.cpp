#include "skewmorph/skew.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <mutex>
#include <thread>

#include "skewmorph/errors.hpp"
#include "skewmorph/kernels.hpp"

namespace skewmorph {

bool SkewMorphism::is_automorphism() const noexcept {
  const std::int64_t n = modulus();
  const std::int64_t r = n > 1 ? phi_(1) : 0;
  for (std::int32_t x = 0; x < n; ++x) {
    if (phi_(x) != normalize(r * x, n)) return false;
  }
  return true;
}

std::optional<SkewMorphism> is_skew_morphism(std::int32_t n, const Permutation& p) {
  if (p.degree() != n) {
    throw std::invalid_argument("is_skew_morphism: permutation degree " + std::to_string(p.degree()) +
                                " does not match n = " + std::to_string(n));
  }
  if (p(0) != 0) return std::nullopt;

  const CycleIndex index(p);
  if (index.order() > std::numeric_limits<std::int32_t>::max()) {
    throw std::overflow_error("permutation order exceeds the supported range");
  }
  const auto t = static_cast<std::int32_t>(index.order());

  std::vector<std::int32_t> diff(static_cast<std::size_t>(n));
  std::vector<std::int32_t> pi(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) {
    kernels::difference_row(p.image(), x, diff);
    // The difference row must be a power p^k; each cycle pins k modulo its
    // length, and the congruences must be simultaneously solvable.
    Congruence k;
    for (std::size_t c = 0; c < index.cycles().size(); ++c) {
      const Cycle& cycle = index.cycles()[c];
      const std::int32_t target = diff[static_cast<std::size_t>(cycle.front())];
      if (index.cycle_of(target) != static_cast<std::int32_t>(c)) return std::nullopt;
      auto merged = combine_congruences(k, {index.position_of(target), static_cast<std::int64_t>(cycle.size())});
      if (!merged) return std::nullopt;
      k = *merged;
    }
    if (!kernels::rows_equal(index.power_table(k.residue), diff)) return std::nullopt;
    pi[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k.residue);
  }
  return SkewMorphism(p, t, std::move(pi));
}

Residue sigma(const SkewMorphism& s, const Residue& x, std::int64_t k) {
  if (x.modulus() != s.modulus()) {
    throw std::invalid_argument("sigma: residue modulus does not match the skew-morphism");
  }
  if (k < 0) throw std::invalid_argument("sigma: k must be nonnegative");
  const std::int64_t t = s.order();
  auto partial_sum = [&](std::int64_t count) {
    std::int64_t acc = 0;
    std::int32_t point = x.value();
    for (std::int64_t i = 0; i < count; ++i) {
      acc += s.pi()[static_cast<std::size_t>(point)];
      point = s.phi()(point);
    }
    return acc % t;
  };
  // phi^t = id, so the summands repeat with period t.
  const std::int64_t full = partial_sum(t);
  return Residue((k / t % t) * full + partial_sum(k % t), static_cast<std::int32_t>(t));
}

SkewMorphism multiplication_map(std::int32_t n, std::int64_t r) {
  if (n < 1) throw std::invalid_argument("multiplication_map: n must be positive");
  if (std::gcd(normalize(r, n), static_cast<std::int64_t>(n)) != 1) {
    throw std::invalid_argument(std::to_string(r) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) image[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(normalize(r * x, n));
  auto s = is_skew_morphism(n, Permutation(std::move(image)));
  if (!s) throw SelfCheckFailure("multiplication by a unit failed the skew-morphism check");
  return *s;
}

std::vector<SkewMorphism> automorphisms(std::int32_t n) {
  if (n < 1) throw std::invalid_argument("automorphisms: n must be positive");
  std::vector<SkewMorphism> result;
  if (n == 1) {
    result.push_back(multiplication_map(1, 0));
    return result;
  }
  for (std::int32_t r = 1; r < n; ++r) {
    if (std::gcd(r, n) == 1) result.push_back(multiplication_map(n, r));
  }
  return result;
}

namespace {

// Search with the power function pi known in advance (values mod t, where t
// is the order sought). pi has some period s dividing n, and then
// phi(x + s) = phi(x) + T with T = phi(s) of additive order n/s. The search
// fixes T and then the steps D_i = phi(i+1) - phi(i) = phi^{pi(i)}(1) for
// i < s, checking after each step that the known part of phi is injective
// and that the orbit of 1 agrees with the steps and has length exactly t.
//
// Orbit lengths: in the group generated by phi and x -> x+1, phi^L fixing a
// generator g of Z_n makes <phi^L> normal (translation by g conjugates it
// back into <phi>, whose subgroups are determined by their order), and <phi>
// is core-free, so every generator has an orbit of length exactly |phi|.
class LiftedSearch {
 public:
  LiftedSearch(std::int32_t n, std::int32_t t, std::vector<std::int32_t> pi) : n_(n), t_(t), pi_(std::move(pi)) {
    period_ = n_;
    for (std::int32_t s = 1; s < n_; ++s) {
      if (n_ % s != 0) continue;
      bool periodic = true;
      for (std::int32_t x = 0; x + s < n_ && periodic; ++x) periodic = pi_[idx(x)] == pi_[idx(x + s)];
      if (periodic) {
        period_ = s;
        break;
      }
    }
    steps_.assign(idx(period_), -1);
    phi_.assign(idx(n_), -1);
    seen_.assign(idx(n_), 0);
    orbit_.reserve(idx(t_) + 1);
    orbit_pos_.assign(idx(n_), -1);
  }

  template <class Emit>
  void run(const Emit& emit) {
    for (std::int32_t total = 0; total < n_; ++total) {
      if (std::gcd(total, n_) != period_) continue;
      total_ = total;
      extend(0, emit);
    }
  }

 private:
  static std::size_t idx(std::int32_t i) { return static_cast<std::size_t>(i); }

  template <class Emit>
  void extend(std::int32_t filled, const Emit& emit) {
    if (!consistent(filled)) return;
    if (filled == period_) {
      emit(phi_);
      return;
    }
    const std::int32_t j = pi_[idx(filled)];
    if (j < static_cast<std::int32_t>(orbit_.size())) {
      steps_[idx(filled)] = orbit_[idx(j)];
      extend(filled + 1, emit);
    } else {
      // Known images form whole cosets of sZ_n, so one representative decides
      // injectivity for the next class.
      std::int64_t prefix = 0;
      for (std::int32_t i = 0; i < filled; ++i) prefix += steps_[idx(i)];
      const std::vector<char> taken = seen_;
      const std::vector<std::int32_t> placed = position_;
      for (std::int32_t v = 1; v < n_; ++v) {
        const auto image = static_cast<std::int32_t>((prefix + v) % n_);
        // the last step closes the period onto phi(s)
        if (filled + 1 == period_ ? image != total_ : taken[idx(image)] != 0) continue;
        if (!placed.empty() && placed[idx(v)] != -1 && placed[idx(v)] != j) continue;
        steps_[idx(filled)] = v;
        extend(filled + 1, emit);
      }
    }
    steps_[idx(filled)] = -1;
  }

  // Rebuilds phi on the residue classes fixed by steps_[0, filled) and checks
  // every necessary condition available.
  bool consistent(std::int32_t filled) {
    std::fill(phi_.begin(), phi_.end(), -1);
    std::fill(seen_.begin(), seen_.end(), 0);
    std::int64_t prefix = 0;
    for (std::int32_t r = 0; r <= filled && r < period_; ++r) {
      if (r > 0) prefix += steps_[idx(r - 1)];
      for (std::int32_t x = r, q = 0; x < n_; x += period_, ++q) {
        const auto v = static_cast<std::int32_t>((prefix + static_cast<std::int64_t>(q) * total_) % n_);
        if (seen_[idx(v)]) return false;
        seen_[idx(v)] = 1;
        phi_[idx(x)] = v;
      }
    }
    // the steps over one period add up to phi(s)
    if (filled == period_ && (prefix + steps_[idx(period_ - 1)]) % n_ != total_) return false;

    // orbit of 1, as far as phi is known
    for (std::int32_t v : orbit_) orbit_pos_[idx(v)] = -1;
    orbit_.clear();
    orbit_.push_back(1);
    orbit_pos_[1] = 0;
    while (true) {
      const std::int32_t next = phi_[idx(orbit_.back())];
      if (next == -1) break;
      const auto k = static_cast<std::int32_t>(orbit_.size());
      if (next == 1) {
        if (k != t_) return false;
        break;
      }
      if (k == t_ || orbit_pos_[idx(next)] != -1) return false;
      orbit_pos_[idx(next)] = k;
      orbit_.push_back(next);
    }
    const auto known = static_cast<std::int32_t>(orbit_.size());

    // each step is a point of the orbit, at the position pi dictates
    for (std::int32_t i = 0; i < filled; ++i) {
      const std::int32_t j = pi_[idx(i)];
      const std::int32_t v = steps_[idx(i)];
      if (j < known) {
        if (orbit_[idx(j)] != v) return false;
      } else if (orbit_pos_[idx(v)] != -1) {
        return false;
      }
      for (std::int32_t i2 = 0; i2 < i; ++i2) {
        if (steps_[idx(i2)] == v && pi_[idx(i2)] != j) return false;
      }
    }

    // pi(x+1) = sum_{l < pi(x)} pi(phi^l(1))
    for (std::int32_t x = 0; x < period_; ++x) {
      const std::int32_t k = pi_[idx(x)];
      if (k > known) continue;
      std::int64_t sum = 0;
      for (std::int32_t l = 0; l < k; ++l) sum += pi_[idx(orbit_[idx(l)])];
      if (sum % t_ != pi_[idx((x + 1) % n_)]) return false;
    }
    return filled == period_ || chains_consistent();
  }

  // Follows every point under the known part of phi. Orbit lengths divide t,
  // generators of Z_n have orbits of length exactly t, and
  // phi(x + y) = phi(x) + phi^{pi(x)}(y) wherever both sides are known.
  bool chains_consistent() {
    const std::size_t stride = idx(t_) + 1;
    chain_.assign(idx(n_) * stride, -1);
    chain_len_.assign(idx(n_), 0);
    for (std::int32_t y = 0; y < n_; ++y) {
      std::int32_t* c = &chain_[idx(y) * stride];
      c[0] = y;
      std::int32_t len = 1;
      while (len <= t_ && phi_[idx(c[len - 1])] != -1) {
        c[len] = phi_[idx(c[len - 1])];
        if (c[len] == y) {
          if (t_ % len != 0 || (len != t_ && std::gcd(y, n_) == 1)) return false;
          // the orbit is closed, so every power is known
          for (std::int32_t k = len + 1; k <= t_; ++k) c[k] = c[k - len];
          len = t_ + 1;
          break;
        }
        ++len;
      }
      if (len == t_ + 1 && c[t_] != y) return false;
      chain_len_[idx(y)] = len;
    }
    // Each step D_i is the orbit point at position pi(i); its known forward
    // chain then occupies the following positions.
    at_position_.assign(idx(t_), -1);
    position_.assign(idx(n_), -1);
    auto place = [&](std::int32_t point, std::int32_t pos) {
      if (position_[idx(point)] == -1 && at_position_[idx(pos)] == -1) {
        position_[idx(point)] = pos;
        at_position_[idx(pos)] = point;
        return true;
      }
      return position_[idx(point)] == pos && at_position_[idx(pos)] == point;
    };
    for (std::int32_t k = 0; k < static_cast<std::int32_t>(orbit_.size()); ++k) place(orbit_[idx(k)], k);
    for (std::int32_t i = 0; i < period_ && steps_[idx(i)] != -1; ++i) {
      const std::int32_t v = steps_[idx(i)];
      const std::int32_t j = pi_[idx(i)];
      const std::int32_t len = std::min(chain_len_[idx(v)], t_);
      for (std::int32_t m = 0; m < len; ++m) {
        if (!place(chain_[idx(v) * stride + idx(m)], (j + m) % t_)) return false;
      }
    }

    for (std::int32_t x = 1; x < n_; ++x) {
      const std::int32_t fx = phi_[idx(x)];
      if (fx == -1) continue;
      const std::int32_t k = pi_[idx(x)];
      for (std::int32_t y = 1; y < n_; ++y) {
        if (chain_len_[idx(y)] <= k) continue;
        std::int32_t sum = x + y;
        if (sum >= n_) sum -= n_;
        const std::int32_t lhs = phi_[idx(sum)];
        if (lhs == -1) continue;
        std::int32_t rhs = fx + chain_[idx(y) * stride + idx(k)];
        if (rhs >= n_) rhs -= n_;
        if (lhs != rhs) return false;
      }
    }
    return true;
  }

  std::int32_t n_, t_;
  std::vector<std::int32_t> pi_;
  std::int32_t period_ = 1;
  std::int32_t total_ = 0;
  std::vector<std::int32_t> steps_, phi_, orbit_, orbit_pos_;
  std::vector<std::int32_t> chain_, chain_len_, at_position_, position_;
  std::vector<char> seen_;
};

struct SearchTask {
  std::int32_t order;
  std::vector<std::int32_t> pi_table;
};

void run_task(std::int32_t n, const SearchTask& task, std::vector<SkewMorphism>& out) {
  LiftedSearch(n, task.order, task.pi_table).run([&](const std::vector<std::int32_t>& phi) {
    if (auto s = is_skew_morphism(n, Permutation(phi))) out.push_back(std::move(*s));
  });
}

// pi(x) = -psi^{-x}(-1) mod t for a skew-morphism psi of Z_t.
std::vector<std::int32_t> reciprocal_power_table(const SkewMorphism& psi, std::int32_t n) {
  const std::int32_t t = psi.modulus();
  const CycleIndex index(psi.phi());
  std::vector<std::int32_t> table(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) {
    table[static_cast<std::size_t>(x)] =
        static_cast<std::int32_t>(normalize(-index.apply_power(t - 1, -static_cast<std::int64_t>(x)), t));
  }
  return table;
}

std::vector<SkewMorphism> run_tasks(std::int32_t n, const std::vector<SearchTask>& tasks, unsigned jobs) {
  std::vector<std::vector<SkewMorphism>> found(tasks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(n, tasks[i], found[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(n, tasks[i], found[i]);
      });
    }
  }
  std::vector<SkewMorphism> result;
  for (auto& chunk : found) {
    for (auto& s : chunk) result.push_back(std::move(s));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

// A skew-morphism phi of Z_n of order t, together with the translation
// x -> x+1, generates an exact (t, n)-bicyclic group. The skew-morphism psi of
// Z_t induced there by the translation fixes the power function of phi, so
// only the orbit of 1 (of length t) is searched. Orders of skew-morphisms of
// Z_n are below n, so `smaller` only needs moduli 1..n-1.
std::vector<SkewMorphism> enumerate_lifted(std::int32_t n, const std::vector<std::vector<SkewMorphism>>& smaller,
                                           unsigned jobs) {
  if (n == 1) return {*is_skew_morphism(1, Permutation::identity(1))};
  std::vector<SearchTask> tasks;
  for (std::int32_t t = 1; t < n; ++t) {
    std::vector<std::vector<std::int32_t>> tables;
    for (const SkewMorphism& psi : smaller[static_cast<std::size_t>(t)]) {
      if (n % psi.order() == 0) tables.push_back(reciprocal_power_table(psi, n));
    }
    // distinct psi can share the orbit of -1 and hence the table
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    for (auto& table : tables) tasks.push_back({t, std::move(table)});
  }
  return run_tasks(n, tasks, jobs);
}

}  // namespace

std::vector<SkewMorphism> enumerate_skew_morphisms(std::int32_t n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("enumerate_skew_morphisms: n must be positive");

  // Results are immutable, so they are shared across calls.
  static std::mutex mutex;
  static std::vector<std::vector<SkewMorphism>> memo;
  std::lock_guard lock(mutex);
  if (memo.size() <= static_cast<std::size_t>(n)) memo.resize(static_cast<std::size_t>(n) + 1);
  for (std::int32_t t = 1; t <= n; ++t) {
    auto& slot = memo[static_cast<std::size_t>(t)];
    if (slot.empty()) slot = enumerate_lifted(t, memo, options.jobs);
  }
  return memo[static_cast<std::size_t>(n)];
}

std::vector<SkewMorphism> brute_force_skew_morphisms(std::int32_t n) {
  if (n < 1) throw std::invalid_argument("brute_force_skew_morphisms: n must be positive");
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_skew_morphisms: n = " + std::to_string(n) +
                                " exceeds the oracle limit of " + std::to_string(kBruteForceLimit));
  }
  std::vector<SkewMorphism> result;
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    if (auto s = is_skew_morphism(n, Permutation(image))) result.push_back(std::move(*s));
  } while (std::next_permutation(image.begin() + 1, image.end()));
  return result;
}

}  // namespace skewmorph
