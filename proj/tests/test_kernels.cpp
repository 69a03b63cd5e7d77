#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "skewmorph/kernels.hpp"

using namespace skewmorph;
namespace k = skewmorph::kernels;

namespace {

std::vector<std::int32_t> random_row(std::size_t len, std::int32_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int32_t> pick(0, bound - 1);
  std::vector<std::int32_t> row(len);
  for (auto& v : row) v = pick(rng);
  return row;
}

}  // namespace

TEST_CASE("scalar reference values") {
  const std::vector<std::int32_t> table{0, 3, 2, 5, 4, 7, 6, 1};
  std::vector<std::int32_t> out(8);
  k::scalar::difference_row(table.data(), 8, 1, out.data());
  // phi(1 + y) - phi(1) for the Z_8 skew-morphism equals phi^3(y)
  CHECK(out == std::vector<std::int32_t>{0, 7, 2, 1, 4, 3, 6, 5});
  std::vector<std::int32_t> g(3);
  k::scalar::gather(table.data(), std::vector<std::int32_t>{7, 1, 0}.data(), 3, g.data());
  CHECK(g == std::vector<std::int32_t>{1, 3, 0});
}

TEST_CASE("avx2 matches scalar on every length") {
  if (!k::isa_supported(k::Isa::avx2)) return;
  std::mt19937_64 rng(3);
  for (std::int32_t n = 1; n <= 70; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto table = random_row(static_cast<std::size_t>(n), n, rng);
      const auto x = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(n));
      std::vector<std::int32_t> s(static_cast<std::size_t>(n)), v(s.size());
      k::scalar::difference_row(table.data(), n, x, s.data());
      k::avx2::difference_row(table.data(), n, x, v.data());
      REQUIRE(s == v);

      const auto a = random_row(s.size(), n, rng), b = random_row(s.size(), n, rng);
      std::vector<std::int32_t> sa(s.size()), va(s.size());
      k::scalar::add_mod(a.data(), b.data(), n, s.size(), sa.data());
      k::avx2::add_mod(a.data(), b.data(), n, s.size(), va.data());
      REQUIRE(sa == va);

      const auto index = random_row(s.size(), n, rng);
      std::vector<std::int32_t> sg(s.size()), vg(s.size());
      k::scalar::gather(table.data(), index.data(), s.size(), sg.data());
      k::avx2::gather(table.data(), index.data(), s.size(), vg.data());
      REQUIRE(sg == vg);

      auto c = a;
      REQUIRE(k::avx2::rows_equal(a.data(), c.data(), c.size()));
      const auto pos = rng() % c.size();
      c[pos] = (c[pos] + 1) % (n + 1);
      REQUIRE(k::scalar::rows_equal(a.data(), c.data(), c.size()) == k::avx2::rows_equal(a.data(), c.data(), c.size()));
    }
  }
}

TEST_CASE("dispatch") {
  CHECK(k::isa_supported(k::Isa::scalar));
  CHECK((k::isa_name(k::active_isa()) == "scalar" || k::isa_name(k::active_isa()) == "avx2"));
  const k::Isa before = k::active_isa();
  k::force_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  std::vector<std::int32_t> a{1, 2, 3}, out(3);
  k::add_mod(a, a, 4, out);
  CHECK(out == std::vector<std::int32_t>{2, 0, 2});
  k::force_isa(before);
  std::vector<std::int32_t> bad(2);
  CHECK_THROWS_AS(k::add_mod(a, a, 4, bad), std::invalid_argument);
}
