// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "catmat/decider.hpp"
#include "catmat/oracle.hpp"
#include "catmat/reduction.hpp"
#include "catmat/verifier.hpp"
#include "catmat/witness.hpp"
#include "generators.hpp"
#include "naive_check.hpp"
#include "predicates.hpp"

using namespace catmat;
using namespace catmat::testing;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) {
        first_failure = what();
      }
      ++failures;
    }
  }
};

std::string show(const HomMatrix& m) {
  std::ostringstream out;
  out << m;
  return out.str();
}

bool witness_ok(const HomMatrix& m) {
  const auto c = build_witness(m);
  return verify_category(c, m).passed && naive_is_category(c, m);
}

std::vector<HomMatrix> accepted;  // collected by criteria 1-4 for criterion 5
std::size_t unknowns = 0;         // oracle runs that hit the budget

Tally two_by_two() {
  Tally t;
  for (Count a = 0; a <= 4; ++a)
    for (Count b = 0; b <= 4; ++b)
      for (Count c = 0; c <= 4; ++c)
        for (Count d = 0; d <= 4; ++d) {
          const HomMatrix m{{a, b}, {c, d}};
          const bool e = decide(m).exists;
          if (e) accepted.push_back(m);
          t.check(e == two_by_two_exists(a, b, c, d), [&] { return show(m); });
        }
  return t;
}

Tally oracle_agreement() {
  Tally t;
  std::vector<HomMatrix> ms;
  for (Count a = 0; a <= 2; ++a)
    for (Count b = 0; b <= 2; ++b)
      for (Count c = 0; c <= 2; ++c)
        for (Count d = 0; d <= 2; ++d) ms.push_back(HomMatrix{{a, b}, {c, d}});
  for (const auto& fx : fixtures()) ms.push_back(fx.m);
  for (const auto& m : ms) {
    const auto o = oracle_decide(m);
    if (o.result == OracleResult::Unknown) {
      ++unknowns;
      continue;
    }
    const bool e = decide(m).exists;
    t.check((o.result == OracleResult::Yes) == e,
            [&] { return show(m) + " oracle " + std::string(result_name(o.result)); });
    if (o.category) {
      t.check(verify_category(*o.category, m).passed, [&] { return show(m) + " oracle table"; });
    }
  }
  return t;
}

Tally block_sweep() {
  Tally t;
  for (Count b = 1; b <= 2; ++b)
    for (Count e = 1; e <= 2; ++e)
      for (Count x = 1; x <= 2; ++x)
        for (Count q = 1; q <= 2; ++q)
          for (Count c = 1; c <= 2; ++c)
            for (Count k = 1; k <= 5; ++k)
              for (Count d = 1; d <= 5; ++d)
                for (Count l = 1; l <= 5; ++l) {
                  const auto m = block_family(b, e, x, q, c, k, d, l);
                  const bool ex = decide(m).exists;
                  if (ex && accepted.size() < 4000) accepted.push_back(m);
                  t.check(ex == block_family_exists(c, k, d, l), [&] { return show(m); });
                }
  return t;
}

Tally positive_unit(Rng& rng) {
  Tally t;
  for (int s = 0; s < 500; ++s) {
    const auto n = static_cast<std::size_t>(uniform(rng, 3, 5));
    std::vector<std::vector<Count>> rows(n, std::vector<Count>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = uniform(rng, 1, 5);
    rows[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        if (s % 2 == 0) {
          // near threshold: product plus {-1, 0, +1}, plus 1 on the diagonal
          const auto base = rows[i][0] * rows[0][j] + (i == j ? 1 : 0);
          const auto shift = uniform(rng, 0, 2);
          rows[i][j] = std::clamp<Count>(base + shift - 1, 1, 5);
        }
      }
      rows[i][i] = std::clamp<Count>(rows[i][i], 2, 5);
    }
    const auto m = from_vectors(rows);
    const bool e = decide(m).exists;
    if (e) accepted.push_back(m);
    t.check(e == positive_unit_exists(m), [&] { return show(m); });
  }
  return t;
}

Tally witness_validity(Rng& rng) {
  Tally t;
  for (int s = 0; s < 1000; ++s) {
    const auto m = mixed_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 5);
    if (decide(m).exists) accepted.push_back(m);
  }
  for (const auto& m : accepted) {
    t.check(witness_ok(m), [&] { return show(m); });
  }
  return t;
}

Tally reduction_invariance(Rng& rng) {
  Tally t;
  for (int s = 0; s < 500; ++s) {
    const auto base = reduce(mixed_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 4));
    const auto big =
        duplicate_objects(rng, base.reduced, static_cast<std::size_t>(uniform(rng, 1, 3)));
    const auto r = reduce(big);
    const bool e = decide(big).exists;
    t.check(r.reduced.order() == base.reduced.order() && e == decide(base.reduced).exists,
            [&] { return show(big); });
    if (e) {
      const auto lifted = inflate(build_witness(r.reduced), r.map);
      t.check(verify_category(lifted, big).passed, [&] { return show(big) + " inflated"; });
    }
  }
  return t;
}

Tally submatrices(Rng& rng) {
  Tally t;
  for (int s = 0; s < 500; ++s) {
    const auto m = mixed_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 4);
    t.check(decide_by_submatrices(m).exists == decide(m).exists, [&] { return show(m); });
  }
  return t;
}

Tally symmetries(Rng& rng) {
  Tally t;
  for (int s = 0; s < 500; ++s) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto m = mixed_matrix(rng, n, 4);
    const bool e = decide(m).exists;
    const auto p = permute(m, random_permutation(rng, n));
    t.check(decide(p).exists == e, [&] { return show(m) + " permuted"; });
    t.check(decide(transpose(m)).exists == e, [&] { return show(m) + " transposed"; });
  }
  return t;
}

/// Every single-entry change of a witness table, checked against the naive
/// axiom restatement. An escape is a broken table the verifier passes.
Tally mutations(Rng& rng, std::size_t& escapes) {
  Tally t;
  escapes = 0;
  int built = 0;
  while (built < 50) {
    const auto m = structured_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 3);
    if (!decide(m).exists) continue;
    ++built;
    const auto base = build_witness(m);
    for (MorphId f = 0; f < base.morphism_count(); ++f) {
      for (auto g : base.out_of(base.morphism(f).target)) {
        const auto original = base.compose(g, f);
        const auto src = base.morphism(f).source;
        const auto dst = base.morphism(g).target;
        std::vector<MorphId> alternatives;
        for (auto h : base.hom(src, dst)) {
          if (h != original) alternatives.push_back(h);
        }
        for (MorphId h = 0; h < base.morphism_count(); ++h) {
          const auto& mh = base.morphism(h);
          if (mh.source != src || mh.target != dst) {
            alternatives.push_back(h);
            break;
          }
        }
        for (auto h : alternatives) {
          auto c = base;
          c.set_composite(g, f, h);
          const bool verdict = verify_category(c, m).passed;
          const bool truth = naive_is_category(c, m);
          if (verdict && !truth) ++escapes;
          t.check(verdict == truth, [&] { return show(m) + " mutated"; });
        }
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  Rng rng(20240601);
  std::size_t escapes = 0;
  struct Criterion {
    int id;
    const char* name;
    std::function<Tally()> run;
    long long limit_ms = 0;  // 0: no time limit
  };
  const std::vector<Criterion> criteria = {
      {1, "2x2 matrices with entries 0..4 match the closed form", two_by_two, 1000},
      {2, "oracle agrees on small matrices and fixtures", oracle_agreement, 300'000},
      {3, "block family sweep matches the closed form", block_sweep},
      {4, "positive unit matrices match the product bounds", [&] { return positive_unit(rng); }},
      {5, "every accepted matrix has a verified witness", [&] { return witness_validity(rng); }, 120'000},
      {6, "duplicated objects: same answer, inflated witness verifies",
       [&] { return reduction_invariance(rng); }},
      {7, "deciding through submatrices of size <= 4 agrees", [&] { return submatrices(rng); }},
      {8, "answers invariant under relabelling and transposition",
       [&] { return symmetries(rng); }},
      {9, "verifier catches every single-entry table mutation",
       [&] { return mutations(rng, escapes); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool ok = error.empty() && t.failures == 0 && t.cases > 0 && in_time;
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%zu cases, %zu failures", ok ? "PASS" : "FAIL", c.id,
                c.name, t.cases, t.failures);
    if (c.id == 2) std::printf(", %zu unknown", unknowns);
    if (c.id == 9) std::printf(", %zu escapes", escapes);
    std::printf(", %lld ms)\n", static_cast<long long>(ms));
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!in_time) std::printf("    over the %lld ms limit\n", c.limit_ms);
    if (t.failures) std::printf("    first failure: %s\n", t.first_failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}
