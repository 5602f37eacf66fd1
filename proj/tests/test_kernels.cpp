#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "perlef/kernels.hpp"

using namespace perlef;
using kernels::Exec;

TEST_CASE("newton_seed_scan: parallel equals serial reference") {
  const MapSpec map = MapSpec::polynomial({Complex(0.1, 0.2), 0.0, 0.4});
  std::vector<Complex> seeds;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j) seeds.emplace_back(-1.0 + i / 20.0, -1.0 + j / 20.0);
  for (std::uint64_t m : {1, 3, 5}) {
    auto serial = kernels::newton_seed_scan(map, m, seeds, Exec::Serial);
    auto parallel = kernels::newton_seed_scan(map, m, seeds, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].converged == parallel[i].converged);
      CHECK(serial[i].z == parallel[i].z);
      CHECK(serial[i].residual == parallel[i].residual);
    }
  }
}

TEST_CASE("lefschetz_by_powers: both paths match the Newton-identity sequence") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    auto action = from_h1(oracle::random_matrix(rng, 1 + t % 6, -3, 3));
    auto serial = kernels::lefschetz_by_powers(action, 30, Exec::Serial);
    auto parallel = kernels::lefschetz_by_powers(action, 30, Exec::Parallel);
    CHECK(serial == parallel);
    CHECK(serial == lefschetz_sequence(action, 30).values);
  }
}

TEST_CASE("classify_batch: parallel equals serial reference") {
  std::mt19937_64 rng(62);
  std::vector<GradedHomologyAction> actions;
  for (int t = 0; t < 200; ++t) actions.push_back(from_h1(oracle::random_matrix(rng, 1 + t % 4, -2, 2)));
  actions.push_back(validate_action(std::map<int, IntMatrix>{{2, IntMatrix{{1}}}}));
  auto serial = kernels::classify_batch(actions, 4096, Exec::Serial);
  auto parallel = kernels::classify_batch(actions, 4096, Exec::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].exit_code == parallel[i].exit_code);
    const auto* a = std::get_if<ClassificationResult>(&serial[i].result);
    const auto* b = std::get_if<ClassificationResult>(&parallel[i].result);
    REQUIRE((a == nullptr) == (b == nullptr));
    if (!a) continue;
    CHECK(a->verdict == b->verdict);
    CHECK(a->witness_m == b->witness_m);
    CHECK(a->narrative == b->narrative);
    CHECK(a->l_prefix.values == b->l_prefix.values);
  }
  CHECK(serial.back().exit_code == 2);
}
