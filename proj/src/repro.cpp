#include "bigmap/repro.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <sstream>

#include "bigmap/endspace.hpp"
#include "bigmap/gf2.hpp"
#include "bigmap/shark.hpp"
#include "bigmap/word_search.hpp"

namespace bigmap::repro {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

template <typename Body>
CheckResult timed(int id, const std::string& name, double budget, Body body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.passed;
  r.detail = o.detail;
  if (r.passed && r.seconds >= budget) {
    r.passed = false;
    std::ostringstream s;
    s << "over budget (" << r.seconds << " s >= " << budget << " s); " << r.detail;
    r.detail = s.str();
  }
  return r;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::string describe_seq(const BinarySeq& a) { return "{" + to_string(a) + "}"; }

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return fallback;
}

EndPerm random_end_perm(std::mt19937_64& rng, int max_letters) {
  const auto n = uniform(rng, 0, max_letters);
  EndPerm out;
  for (std::int64_t k = 0; k < n; ++k) {
    EndPerm letter;
    if (uniform(rng, 0, 2) == 0) {
      letter = shift_power(uniform(rng, 0, 1) ? 1 : -1);
    } else {
      // Side-preserving: a cycle on each side, either possibly trivial.
      const auto len_a = uniform(rng, 1, 5);
      const auto s_a = uniform(rng, -6, 1 - len_a);
      const auto len_b = uniform(rng, 1, 5);
      const auto s_b = uniform(rng, 1, 8 - len_b);
      letter = compose(frac_twist(s_a, s_a + len_a - 1), frac_twist(s_b, s_b + len_b - 1));
      if (uniform(rng, 0, 1)) letter = inverse(letter);
    }
    out = compose(out, letter);
  }
  return out;
}

BinarySeq random_binary_seq(std::mt19937_64& rng, std::int64_t max_pos) {
  std::vector<BigIndex> ones;
  const auto density = uniform(rng, 0, 4);  // vary sparsity across samples
  for (std::int64_t i = 1; i <= max_pos; ++i) {
    if (uniform(rng, 0, 4) < density) ones.emplace_back(i);
  }
  return BinarySeq(std::move(ones));
}

GradedAut random_graded_aut(std::mt19937_64& rng, std::size_t block_dim) {
  const auto offset = uniform(rng, -3, 3);
  if (uniform(rng, 0, 9) == 0) return GradedAut::translation(offset, block_dim);
  const auto lo = uniform(rng, -4, 4);
  const auto hi = uniform(rng, lo, std::min<std::int64_t>(4, lo + 3));
  const BlockRange w{lo, hi};
  const std::size_t n = w.size() * block_dim;
  for (;;) {
    std::vector<gf2::Vector> rows;
    for (std::size_t r = 0; r < n; ++r) {
      gf2::Vector v(n);
      for (std::size_t c = 0; c < n; ++c) {
        if (uniform(rng, 0, 1)) v.set(c);
      }
      rows.push_back(std::move(v));
    }
    if (gf2::rank(rows) == n) return GradedAut(offset, block_dim, w, std::move(rows));
  }
}

CheckResult check_zn_isometry(std::uint64_t seed) {
  return timed(1, "Z^n embeds isometrically into Q^inf", 5.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x1);
    std::size_t trials = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int k = 0; k < 1000; ++k) {
        std::vector<std::int64_t> a(n), b(n);
        std::size_t expect = 0;
        for (std::size_t i = 0; i < n; ++i) {
          a[i] = uniform(rng, -20, 20);
          b[i] = uniform(rng, -20, 20);
          expect += static_cast<std::size_t>(std::abs(a[i] - b[i]));
        }
        const auto got = l1_distance(zn_embed(a), zn_embed(b));
        ++trials;
        if (got != expect) {
          std::ostringstream s;
          s << "n=" << n << ": distance " << got << ", expected " << expect;
          return {false, s.str()};
        }
      }
    }
    return {true, std::to_string(trials) + " pairs exact"};
  });
}

CheckResult check_crossing_length_function(std::uint64_t seed) {
  return timed(2, "crossing norm is a length function", 10.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x2);
    auto dist = [](const EndPerm& p, const EndPerm& q) {
      return crossing_norm(compose(inverse(q), p));
    };
    for (int k = 0; k < 10000; ++k) {
      const auto p = random_end_perm(rng, 8);
      const auto q = random_end_perm(rng, 8);
      const auto r = random_end_perm(rng, 8);
      if (dist(p, q) != dist(q, p)) return {false, "asymmetric pair at trial " + std::to_string(k)};
      if (crossing_norm(inverse(p)) != crossing_norm(p)) {
        return {false, "norm of inverse differs at trial " + std::to_string(k)};
      }
      if (dist(p, r) > dist(p, q) + dist(q, r)) {
        return {false, "triangle inequality fails at trial " + std::to_string(k)};
      }
      if (crossing_norm(compose(p, q)) > crossing_norm(p) + crossing_norm(q)) {
        return {false, "subadditivity fails at trial " + std::to_string(k)};
      }
    }
    return {true, "10000 triples"};
  });
}

CheckResult check_phi_distance(std::uint64_t seed) {
  return timed(3, "crossing distance of Phi equals l1 distance", 10.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x3);
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_binary_seq(rng, 32);
      const auto b = random_binary_seq(rng, 32);
      const auto got = crossing_norm(compose(inverse(phi(b)), phi(a)));
      const auto expect = l1_distance(a, b);
      if (got != expect) {
        return {false, "a=" + describe_seq(a) + " b=" + describe_seq(b) + ": " +
                           std::to_string(got) + " vs " + std::to_string(expect)};
      }
    }
    return {true, "1000 pairs exact"};
  });
}

CheckResult check_witness_sandwich(std::uint64_t seed) {
  // Same pairs as the distance check.
  return timed(4, "witness word replays and costs at most |a-b|+3", 10.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x3);
    std::size_t worst_slack = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_binary_seq(rng, 32);
      const auto b = random_binary_seq(rng, 32);
      const auto element = compose(inverse(phi(b)), phi(a));
      const auto word = witness_factorization(element);
      const auto d = l1_distance(a, b);
      if (!(replay(word) == element)) {
        return {false, "replay mismatch for a=" + describe_seq(a) + " b=" + describe_seq(b)};
      }
      if (word.cost() > d + 3) {
        return {false, "cost " + std::to_string(word.cost()) + " > " + std::to_string(d + 3)};
      }
      if (word.cost() < d) {
        return {false, "cost " + std::to_string(word.cost()) + " below the lower bound " +
                           std::to_string(d)};
      }
      worst_slack = std::max(worst_slack, word.cost() - d);
    }
    return {true, "1000 pairs, max cost - |a-b| = " + std::to_string(worst_slack)};
  });
}

CheckResult check_oracle_lower_bound(std::uint64_t) {
  return timed(5, "crossing norm bounds BFS word length", 60.0, [&]() -> Outcome {
    WordSearchOptions opts;
    opts.support_bound = 2;
    opts.depth_bound = 4;
    const auto ball = word_ball(opts);
    for (const auto& [g, len] : ball) {
      if (crossing_norm(g) > len) {
        return {false, "element with crossing norm " + std::to_string(crossing_norm(g)) +
                           " reached in " + std::to_string(len)};
      }
    }
    const auto h = word_length_oracle(shift_power(1), opts);
    if (!h || *h != 1) return {false, "BFS length of h is not 1"};
    return {true, std::to_string(ball.size()) + " elements within length 4"};
  });
}

CheckResult check_shift_homology(std::uint64_t) {
  return timed(6, "homology norm of h^n is 2n", 5.0, [&]() -> Outcome {
    for (std::int64_t n = 1; n <= 10; ++n) {
      const auto g = graded_shift(n, 2);
      const auto base = minimal_hull(g);
      for (std::int64_t pad : {0, 2, 5}) {
        const BlockRange hull{base.lo - pad, base.hi + pad};
        const auto v = homology_norm(g, {}, hull);
        if (v != static_cast<std::size_t>(2 * n)) {
          return {false, "n=" + std::to_string(n) + " pad=" + std::to_string(pad) + ": " +
                             std::to_string(v)};
        }
      }
    }
    return {true, "n = 1..10, three hulls each"};
  });
}

CheckResult check_homology_length_function(std::uint64_t seed) {
  return timed(7, "homology norm is a length function", 30.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x7);
    auto norm = [](const GradedAut& g) { return homology_norm(g); };
    for (int k = 0; k < 1000; ++k) {
      const auto p = random_graded_aut(rng);
      const auto q = random_graded_aut(rng);
      const auto np = norm(p);
      const auto nq = norm(q);
      if (norm(inverse(p)) != np) {
        return {false, "norm of inverse differs at trial " + std::to_string(k)};
      }
      const auto npq = norm(compose(p, q));
      if (npq > np + nq) {
        return {false, "triangle inequality fails at trial " + std::to_string(k) + ": " +
                           std::to_string(npq) + " > " + std::to_string(np) + " + " +
                           std::to_string(nq)};
      }
      // d(p, q) = |q^-1 p| is symmetric.
      if (norm(compose(inverse(q), p)) != norm(compose(inverse(p), q))) {
        return {false, "asymmetric distance at trial " + std::to_string(k)};
      }
    }
    return {true, "1000 pairs"};
  });
}

CheckResult check_golden_verdicts(std::uint64_t) {
  return timed(8, "classifier golden verdicts", 1.0, [&]() -> Outcome {
    using namespace ends;
    struct Expect {
      const char* name;
      bool two_sided;
      Mode mode;
    };
    const Expect expects[] = {
        {"shark_tank", true, Mode::Class},       {"jacobs_ladder", true, Mode::Genus},
        {"loch_ness", false, Mode::Genus},       {"cantor_tree", false, Mode::Genus},
        {"blooming_cantor_tree", false, Mode::Genus}, {"spider", false, Mode::Genus},
    };
    for (const auto& e : expects) {
      const auto v = has_essential_shift(compile_builtin(e.name));
      if (v.two_sided != e.two_sided) return {false, std::string(e.name) + ": wrong verdict"};
      if (v.two_sided && (!v.witness || v.witness->mode != e.mode)) {
        return {false, std::string(e.name) + ": wrong witness mode"};
      }
      if (v.two_sided && e.mode == Mode::Class && v.witness->class_id != "punctures") {
        return {false, std::string(e.name) + ": witness class " + v.witness->class_id};
      }
    }

    const auto ladder = compile_builtin("jacobs_ladder");
    const auto handle = classify_shift(
        ladder, {{"A", "genus_end"}, {"B", "genus_end"}, Genus::finite(1), {}});
    if (!handle.essential || handle.reasons.size() != 1 || handle.reasons[0].mode != Mode::Genus) {
      return {false, "handle shift should be essential by genus"};
    }
    const auto tank = compile_builtin("shark_tank");
    const auto puncture = classify_shift(
        tank, {{"A", "limit"}, {"B", "limit"}, Genus::zero(), {{"punctures", Multiplicity::One}}});
    if (!puncture.essential || puncture.reasons.size() != 1 ||
        puncture.reasons[0].mode != Mode::Class) {
      return {false, "puncture shift should be essential by class"};
    }
    const auto tree = compile_builtin("cantor_tree");
    const auto cantor = classify_shift(tree, {{"A", "cantor_end"},
                                              {"B", "cantor_end"},
                                              Genus::zero(),
                                              {{"cantor_end", Multiplicity::Cantor}}});
    if (cantor.essential) return {false, "cantor-block shift should not be essential"};
    return {true, "6 tables, 3 shifts"};
  });
}

CheckResult check_phi_support(std::uint64_t seed) {
  return timed(9, "Phi sends non-positive punctures onto the ones of a", 5.0, [&]() -> Outcome {
    std::mt19937_64 rng(seed ^ 0x9);
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_binary_seq(rng, 48);
      const auto f = phi(a);
      // Below min(lo, -t) the map is i -> i + t <= 0.
      std::int64_t from = -f.offset();
      if (!f.window_empty()) from = std::min(from, f.lo());
      std::vector<BigIndex> hits;
      for (std::int64_t i = from; i <= 0; ++i) {
        if (f(i) > 0) hits.emplace_back(f(i));
      }
      std::sort(hits.begin(), hits.end());
      if (!(BinarySeq(hits) == a)) return {false, "support mismatch for a=" + describe_seq(a)};
    }
    return {true, "1000 sequences"};
  });
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {1, "Z^n embeds isometrically into Q^inf", 5.0, check_zn_isometry},
      {2, "crossing norm is a length function", 10.0, check_crossing_length_function},
      {3, "crossing distance of Phi equals l1 distance", 10.0, check_phi_distance},
      {4, "witness word replays and costs at most |a-b|+3", 10.0, check_witness_sandwich},
      {5, "crossing norm bounds BFS word length", 60.0, check_oracle_lower_bound},
      {6, "homology norm of h^n is 2n", 5.0, check_shift_homology},
      {7, "homology norm is a length function", 30.0, check_homology_length_function},
      {8, "classifier golden verdicts", 1.0, check_golden_verdicts},
      {9, "Phi sends non-positive punctures onto the ones of a", 5.0, check_phi_support},
  };
  return checks;
}

std::vector<CheckResult> run_all(std::uint64_t seed, bool parallel) {
  std::vector<CheckResult> out;
  if (!parallel) {
    for (const auto& c : all_checks()) out.push_back(c.run(seed));
    return out;
  }
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& c : all_checks()) jobs.push_back(std::async(std::launch::async, c.run, seed));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace bigmap::repro
