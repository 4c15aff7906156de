#include <doctest.h>

#include "support.hpp"

#include <repkit/partition.hpp>

#include <set>

using namespace repkit;
using testsupport::algebra;

namespace {

struct Ctx {
  AlgebraPtr a;
  IndexedCategory cat;
  RadTable table;
};

Ctx make_ctx(const std::string& name) {
  AlgebraPtr a = algebra(name);
  IndexedCategory c = make_category(a, testsupport::indec_pool(a), true);
  RadTable t = rad_power_table(c);
  return {a, std::move(c), std::move(t)};
}

std::set<std::vector<int>> level_dims(const Ctx& cx, const Partition& p, int k) {
  std::set<std::vector<int>> out;
  for (int i : p.levels[k]) out.insert(cx.cat.objects[i].dims);
  return out;
}

} // namespace

TEST_CASE("partition lengths on the finite presets") {
  {
    Ctx cx = make_ctx("A2");
    CHECK(postprojective_partition(cx.cat).summary() == 1);
    CHECK(preinjective_partition(cx.cat).summary() == 1);
  }
  {
    Ctx cx = make_ctx("N3");
    CHECK(postprojective_partition(cx.cat).summary() == 2);
    CHECK(preinjective_partition(cx.cat).summary() == 2);
  }
  {
    Ctx cx = make_ctx("A3");
    CHECK(postprojective_partition(cx.cat).summary() == 2);
    CHECK(preinjective_partition(cx.cat).summary() == 2);
  }
}

TEST_CASE("level zero consists of the projectives, dually the injectives") {
  Ctx cx = make_ctx("A3");
  Partition post = postprojective_partition(cx.cat);
  CHECK(level_dims(cx, post, 0) ==
        std::set<std::vector<int>>{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  // Deeper levels, frozen: the simple top S(1) peels off last.
  CHECK(level_dims(cx, post, 1) == std::set<std::vector<int>>{{0, 1, 0}, {1, 1, 0}});
  CHECK(level_dims(cx, post, 2) == std::set<std::vector<int>>{{1, 0, 0}});

  Partition pre = preinjective_partition(cx.cat);
  CHECK(level_dims(cx, pre, 0) ==
        std::set<std::vector<int>>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(level_dims(cx, pre, 2) == std::set<std::vector<int>>{{0, 0, 1}});
}

TEST_CASE("every object lands in exactly one level") {
  for (const std::string& name : {"A2", "A3", "N3", "QH4"}) {
    CAPTURE(name);
    Ctx cx = make_ctx(name);
    for (const Partition& p :
         {postprojective_partition(cx.cat), preinjective_partition(cx.cat)}) {
      int covered = 0;
      for (const auto& level : p.levels) covered += static_cast<int>(level.size());
      CHECK(covered == cx.cat.size());
      for (int i = 0; i < cx.cat.size(); ++i) CHECK(p.level_of(i) >= 0);
    }
  }
}

TEST_CASE("cover and cocover verification with minimality") {
  for (const std::string& name : {"A2", "A3", "N3", "QH4"}) {
    CAPTURE(name);
    Ctx cx = make_ctx(name);
    Partition post = postprojective_partition(cx.cat);
    Partition pre = preinjective_partition(cx.cat);
    for (std::size_t k = 0; k < post.levels.size(); ++k) {
      CheckReport r = verify_cover(cx.cat, post, static_cast<int>(k));
      CHECK_MESSAGE(r.pass, name << " cover level " << k);
    }
    for (std::size_t k = 0; k < pre.levels.size(); ++k) {
      CheckReport r = verify_cocover(cx.cat, pre, static_cast<int>(k));
      CHECK_MESSAGE(r.pass, name << " cocover level " << k);
    }
  }
}

TEST_CASE("explicit epi and mono witnesses") {
  Ctx cx = make_ctx("A3");
  Partition post = postprojective_partition(cx.cat);
  Partition pre = preinjective_partition(cx.cat);
  for (int x = 0; x < cx.cat.size(); ++x) {
    Morph e = epi_from_cover(cx.cat, post, x, 0);
    CHECK(e.is_epi());
    CHECK(e.target.dims == cx.cat.objects[x].dims);
    Morph m = mono_into_cocover(cx.cat, pre, x, 0);
    CHECK(m.is_mono());
    CHECK(m.source.dims == cx.cat.objects[x].dims);
  }
}

TEST_CASE("mono chains walk down the preinjective levels") {
  Ctx cx = make_ctx("A3");
  Partition pre = preinjective_partition(cx.cat);
  for (int x = 0; x < cx.cat.size(); ++x) {
    int k = pre.level_of(x);
    MonoChain chain = preinjective_mono_chain(cx.cat, pre, x);
    CHECK(chain.steps.size() == static_cast<std::size_t>(k));
    if (k == 0) continue;
    for (const Morph& s : chain.steps) CHECK(s.is_mono());
    // The chain composes to a mono from the object into a level-0 sum.
    Morph total = chain.steps.front();
    for (std::size_t s = 1; s < chain.steps.size(); ++s)
      total = compose(chain.steps[s], total);
    CHECK(total.source.dims == cx.cat.objects[x].dims);
    CHECK(total.is_mono());
    for (int t : chain.final_targets) CHECK(pre.level_of(t) == 0);
  }
}

TEST_CASE("epi chains walk up the postprojective levels") {
  Ctx cx = make_ctx("N3");
  Partition post = postprojective_partition(cx.cat);
  for (int x = 0; x < cx.cat.size(); ++x) {
    int k = post.level_of(x);
    EpiChain chain = postprojective_epi_chain(cx.cat, post, x);
    CHECK(chain.steps.size() == static_cast<std::size_t>(k));
    if (k == 0) continue;
    for (const Morph& s : chain.steps) CHECK(s.is_epi());
    Morph total = chain.steps.front();
    for (std::size_t s = 1; s < chain.steps.size(); ++s)
      total = compose(chain.steps[s], total);
    CHECK(total.target.dims == cx.cat.objects[x].dims);
    CHECK(total.is_epi());
    for (int t : chain.initial_sources) CHECK(post.level_of(t) == 0);
  }
}

TEST_CASE("hom equals the level-indexed radical power") {
  for (const std::string& name : {"A1", "A2", "A3", "N3", "QH4"}) {
    CAPTURE(name);
    Ctx cx = make_ctx(name);
    CheckReport r1 = verify_propdan(cx.table, postprojective_partition(cx.cat));
    CheckReport r2 = verify_propdan(cx.table, preinjective_partition(cx.cat));
    CHECK_MESSAGE(r1.pass, name << " postprojective");
    CHECK_MESSAGE(r2.pass, name << " preinjective");
  }
}
