#include "doctest.h"

#include "qhorn/cache.hpp"
#include "qhorn/gw.hpp"

#include <filesystem>
#include <atomic>
#include <fstream>
#include <thread>

using namespace qhorn;
namespace fs = std::filesystem;

namespace {

GwProblem small() {
  return GwProblem(4, 2, 1, 0,
                   {SchubertIndex({1, 4}, 4), SchubertIndex({2, 3}, 4),
                    SchubertIndex({1, 2}, 4)});
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("qhorn-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("save/load round trip gives identical values") {
  TempDir tmp;
  std::string path = (tmp.dir / "cache.json").string();
  CoefficientCache a;
  Int v = gw_invariant(small(), a);
  a.save(path);

  CoefficientCache b;
  auto st = b.load(path);
  CHECK(st.loaded);
  CHECK(b.value("bs:" + small().sorted_key()) == v);
  // A warm cache changes nothing numerically.
  CHECK(gw_invariant(small(), b) == v);
}

TEST_CASE("corrupt cache is quarantined and ignored") {
  TempDir tmp;
  std::string path = (tmp.dir / "cache.json").string();
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CoefficientCache c;
  auto st = c.load(path);
  CHECK_FALSE(st.loaded);
  CHECK(st.note.find("quarantined") == 0);
  CHECK_FALSE(fs::exists(path));
  CHECK(fs::exists(path + ".corrupt"));
  // A fresh save rebuilds the file.
  gw_invariant(small(), c);
  c.save(path);
  CHECK(fs::exists(path));
  CoefficientCache d;
  CHECK(d.load(path).loaded);
}

TEST_CASE("version mismatch is ignored with a note") {
  TempDir tmp;
  std::string path = (tmp.dir / "cache.json").string();
  {
    std::ofstream out(path);
    out << R"({"version":"someone-else/9","values":{"k":"1"}})";
  }
  CoefficientCache c;
  auto st = c.load(path);
  CHECK_FALSE(st.loaded);
  CHECK(st.note.find("version-mismatch") == 0);
  CHECK(c.value_count() == 0);
  CHECK(fs::exists(path));  // not quarantined, just ignored
}

TEST_CASE("concurrent readers and writers agree") {
  // Contract: many concurrent readers, serialized writes, and redundant
  // recomputation of a missed entry is harmless (idempotent values).
  CoefficientCache shared;
  std::vector<GwProblem> probs;
  for (const auto& I : all_indices(2, 4))
    for (const auto& J : all_indices(2, 4)) {
      long long total = codim(I) + codim(J) + 2;
      if (total % 4 != 0 || total < 4) continue;
      probs.emplace_back(4, 2, static_cast<int>((total - 4) / 4), 0,
                         std::vector<SchubertIndex>{I, J, SchubertIndex({2, 3}, 4)});
    }
  REQUIRE(!probs.empty());
  std::vector<Int> expected;
  for (const auto& P : probs) {
    CoefficientCache solo;
    expected.push_back(gw_invariant(P, solo));
  }
  std::vector<std::thread> pool;
  std::atomic<int> bad{0};
  for (int w = 0; w < 8; ++w)
    pool.emplace_back([&] {
      for (int rep = 0; rep < 20; ++rep)
        for (size_t i = 0; i < probs.size(); ++i)
          if (gw_invariant(probs[i], shared) != expected[i]) ++bad;
    });
  for (auto& t : pool) t.join();
  CHECK(bad == 0);
}

TEST_CASE("cached values equal fresh recomputation") {
  CoefficientCache warm, cold;
  GwProblem P = small();
  Int w1 = gw_invariant(P, warm);
  Int w2 = gw_invariant(P, warm);  // served from cache
  Int c1 = gw_invariant(P, cold);
  CHECK(w1 == w2);
  CHECK(w1 == c1);
  CHECK(warm.value_count() >= 1);
  CHECK(warm.product_count() >= 1);
}
