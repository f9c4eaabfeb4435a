#define CATCH_CONFIG_RUNNER
#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>

std::uint64_t g_test_seed = 20260808;

int main(int argc, char* argv[]) {
  if (const char* env = std::getenv("COMPGRAPH_TEST_SEED"))
    g_test_seed = std::strtoull(env, nullptr, 10);

  Catch::Session session;
  auto cli = session.cli() | Catch::clara::Opt(g_test_seed, "seed")["--seed"](
                                 "seed for the randomized property tests");
  session.cli(cli);
  const int rc = session.applyCommandLine(argc, argv);
  if (rc != 0) return rc;

  std::printf("randomized property test seed: %llu\n",
              static_cast<unsigned long long>(g_test_seed));
  return session.run();
}
