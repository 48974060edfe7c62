#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vho/schemes.hpp"

using namespace vho;
using namespace vho::schemes;
using selection::candidate_network;
using selection::method;
using selection::qos_vector;
using selection::technology;

namespace {

const qos_vector req = {512.0, 40.0, 6.0, 8.0};

std::vector<candidate_network> make_candidates(std::size_t n) {
  std::vector<candidate_network> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i + 1);
    out.push_back({"n" + std::to_string(i + 1), technology::wifi,
                   {400.0 + 100.0 * f, 20.0 + 5.0 * f, 2.0 + f, 3.0 + f}});
  }
  return out;
}

qos_vector random_qos(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> bw(64.0, 10000.0);
  std::uniform_real_distribution<double> ms(1.0, 200.0);
  std::uniform_real_distribution<double> money(0.5, 50.0);
  return {bw(rng), ms(rng), ms(rng), money(rng)};
}

delay_params example_delays() {
  delay_params d;
  d.t_uplink_ms = 10.0;
  d.t_downlink_ms = 10.0;
  d.t_calc_mt_ms = 5.0;
  d.t_calc_vn_ms = 5.0;
  d.t_select_ms = 1.0;
  return d;
}

}  // namespace

TEST_CASE("cvhd delay formula: N=4 with the example constants") {
  const auto outcome = run_cvhd(make_candidates(4), req,
                                selection::voice_profile(), method::saw,
                                example_delays());
  // 4*(10+10) + 4*5 + 1
  CHECK(outcome.processing_delay_ms == doctest::Approx(101.0).epsilon(1e-12));
  CHECK(outcome.messages == 8);
  CHECK(outcome.used == scheme::cvhd);
  CHECK(outcome.per_network_scores.size() == 4);
}

TEST_CASE("cvhd with one candidate and zero delays") {
  const auto outcome = run_cvhd(make_candidates(1), req,
                                selection::voice_profile(), method::saw,
                                delay_params{0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(outcome.processing_delay_ms == 0.0);
  CHECK(outcome.messages == 2);
  CHECK(*outcome.selected == "n1");
}

TEST_CASE("cvhd selects a dominant candidate") {
  std::vector<candidate_network> candidates = make_candidates(3);
  candidates.push_back({"best", technology::wimax, {9000.0, 5.0, 1.0, 1.0}});
  for (method m : {method::saw, method::wpm}) {
    const auto outcome = run_cvhd(candidates, req, selection::voice_profile(),
                                  m, example_delays());
    CHECK(*outcome.selected == "best");
  }
}

TEST_CASE("dvhd delay formula: constant in N") {
  const auto outcome = run_dvhd(make_candidates(4), req,
                                selection::voice_profile(), method::saw,
                                example_delays());
  // 10 + 5 + 10 + 1
  CHECK(outcome.processing_delay_ms == doctest::Approx(26.0).epsilon(1e-12));
  CHECK(outcome.messages == 8);
  const auto one = run_dvhd(make_candidates(1), req, selection::voice_profile(),
                            method::saw, delay_params{0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(one.processing_delay_ms == 0.0);
}

TEST_CASE("dvhd also selects a dominant candidate") {
  std::vector<candidate_network> candidates = make_candidates(3);
  candidates.push_back({"best", technology::wimax, {9000.0, 5.0, 1.0, 1.0}});
  for (method m : {method::saw, method::wpm}) {
    const auto c = run_cvhd(candidates, req, selection::voice_profile(), m,
                            example_delays());
    const auto d = run_dvhd(candidates, req, selection::voice_profile(), m,
                            example_delays());
    CHECK(*c.selected == "best");
    CHECK(*d.selected == "best");
  }
}

TEST_CASE("dvhd scores are peer-independent") {
  auto candidates = make_candidates(3);
  const auto before = run_dvhd(candidates, req, selection::voice_profile(),
                               method::saw, example_delays());
  candidates.push_back({"extra", technology::wimax, {9000.0, 5.0, 1.0, 1.0}});
  const auto after = run_dvhd(candidates, req, selection::voice_profile(),
                              method::saw, example_delays());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(after.per_network_scores[i].id == before.per_network_scores[i].id);
    CHECK(after.per_network_scores[i].nqv == before.per_network_scores[i].nqv);
  }
}

TEST_CASE("dvhd beats cvhd on processing delay for N in 2..8") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto candidates = make_candidates(n);
    const auto c = run_cvhd(candidates, req, selection::voice_profile(),
                            method::saw, example_delays());
    const auto d = run_dvhd(candidates, req, selection::voice_profile(),
                            method::saw, example_delays());
    CHECK(d.processing_delay_ms < c.processing_delay_ms);
    CHECK(c.messages == 2 * n);
    CHECK(d.messages == 2 * n);
  }
}

TEST_CASE("dvhd beats cvhd over random positive delay draws") {
  std::mt19937_64 rng(13579);
  std::uniform_real_distribution<double> positive(0.001, 50.0);
  for (int round = 0; round < 300; ++round) {
    delay_params d;
    d.t_uplink_ms = positive(rng);
    d.t_downlink_ms = positive(rng);
    d.t_calc_mt_ms = positive(rng);
    d.t_calc_vn_ms = std::uniform_real_distribution<double>(
        0.0, d.t_calc_mt_ms)(rng);  // vn no slower than mt
    d.t_select_ms = positive(rng);
    const std::size_t n = 2 + round % 7;
    const auto candidates = make_candidates(n);
    const auto c = run_cvhd(candidates, req, selection::voice_profile(),
                            method::saw, d);
    const auto v = run_dvhd(candidates, req, selection::voice_profile(),
                            method::saw, d);
    CHECK(v.processing_delay_ms < c.processing_delay_ms);
  }
}

TEST_CASE("tdvhd with all trust passing mirrors dvhd") {
  trust::trust_params tp;  // default 0.5 >= threshold 0.5
  const trust::trust_state all_pass(tp);
  const auto candidates = make_candidates(4);
  const auto d = run_dvhd(candidates, req, selection::voice_profile(),
                          method::saw, example_delays());
  const auto t = run_tdvhd(candidates, req, selection::voice_profile(),
                           method::saw, example_delays(), all_pass);
  CHECK(*t.outcome.selected == *d.selected);
  CHECK(t.outcome.processing_delay_ms == d.processing_delay_ms);
  CHECK(t.outcome.messages == d.messages);
  CHECK(t.outcome.used == scheme::tdvhd);
}

TEST_CASE("tdvhd charges one t_select per extra gate iteration") {
  const auto candidates = make_candidates(3);
  const auto d = run_dvhd(candidates, req, selection::voice_profile(),
                          method::saw, example_delays());
  const std::string top = *d.selected;

  trust::trust_params tp;
  trust::trust_state state(tp);
  state = state.with_lot(top, 0.2);  // distrust the top-ranked network
  const auto t = run_tdvhd(candidates, req, selection::voice_profile(),
                           method::saw, example_delays(), state);
  REQUIRE_FALSE(t.outcome.blocked());
  CHECK(*t.outcome.selected != top);
  CHECK(*t.outcome.selected == t.ranked[1]);
  CHECK(t.outcome.processing_delay_ms ==
        doctest::Approx(d.processing_delay_ms + 1.0).epsilon(1e-12));
}

TEST_CASE("tdvhd blocks when every network is distrusted") {
  const auto candidates = make_candidates(3);
  trust::trust_params tp;
  trust::trust_state state(tp);
  for (const auto& c : candidates) state = state.with_lot(c.id, 0.1);
  const auto t = run_tdvhd(candidates, req, selection::voice_profile(),
                           method::saw, example_delays(), state);
  CHECK(t.outcome.blocked());
  CHECK(t.ranked.size() == 3);
  // every candidate was tested: two extra gate iterations
  CHECK(t.outcome.processing_delay_ms == doctest::Approx(26.0 + 2.0).epsilon(1e-12));
}

TEST_CASE("tdvhd ranking is the dvhd score order") {
  const auto candidates = make_candidates(5);
  trust::trust_params tp;
  const auto t = run_tdvhd(candidates, req, selection::voice_profile(),
                           method::saw, example_delays(), trust::trust_state(tp));
  const auto d = run_dvhd(candidates, req, selection::voice_profile(),
                          method::saw, example_delays());
  REQUIRE(t.ranked.size() == candidates.size());
  for (std::size_t k = 1; k < t.ranked.size(); ++k) {
    const auto score_of = [&](const std::string& id) {
      for (const auto& s : d.per_network_scores) {
        if (s.id == id) return s.nqv;
      }
      return -1.0;
    };
    CHECK(score_of(t.ranked[k - 1]) >= score_of(t.ranked[k]));
  }
}

TEST_CASE("tdvhd matches dvhd on random candidate sets when trust passes") {
  std::mt19937_64 rng(24680);
  trust::trust_params tp;
  const trust::trust_state all_pass(tp);
  for (int round = 0; round < 100; ++round) {
    std::vector<candidate_network> candidates;
    const std::size_t n = 1 + round % 7;
    for (std::size_t i = 0; i < n; ++i) {
      candidates.push_back({"n" + std::to_string(i), technology::wifi,
                            random_qos(rng)});
    }
    const qos_vector needed = random_qos(rng);
    const method m = round % 2 ? method::saw : method::wpm;
    const auto d = run_dvhd(candidates, needed, selection::voice_profile(), m,
                            example_delays());
    const auto t = run_tdvhd(candidates, needed, selection::voice_profile(), m,
                             example_delays(), all_pass);
    REQUIRE_FALSE(t.outcome.blocked());
    CHECK(*t.outcome.selected == *d.selected);
  }
}

TEST_CASE("runners are deterministic") {
  const auto candidates = make_candidates(4);
  for (int i = 0; i < 3; ++i) {
    const auto a = run_cvhd(candidates, req, selection::voice_profile(),
                            method::wpm, example_delays());
    const auto b = run_cvhd(candidates, req, selection::voice_profile(),
                            method::wpm, example_delays());
    CHECK(a.selected == b.selected);
    CHECK(a.processing_delay_ms == b.processing_delay_ms);
    for (std::size_t k = 0; k < a.per_network_scores.size(); ++k) {
      CHECK(a.per_network_scores[k].nqv == b.per_network_scores[k].nqv);
    }
  }
}

TEST_CASE("empty candidate sets are rejected by all runners") {
  trust::trust_params tp;
  CHECK_THROWS_AS(run_cvhd({}, req, selection::voice_profile(), method::saw,
                           example_delays()),
                  error);
  CHECK_THROWS_AS(run_dvhd({}, req, selection::voice_profile(), method::saw,
                           example_delays()),
                  error);
  CHECK_THROWS_AS(run_tdvhd({}, req, selection::voice_profile(), method::saw,
                            example_delays(), trust::trust_state(tp)),
                  error);
}

TEST_CASE("negative delay constants are rejected") {
  delay_params d = example_delays();
  d.t_uplink_ms = -1.0;
  CHECK_THROWS_AS(run_dvhd(make_candidates(2), req, selection::voice_profile(),
                           method::saw, d),
                  error);
}
