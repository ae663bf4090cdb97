#include "catmat/verifier.hpp"

#include <algorithm>
#include <string>

#include "catmat/errors.hpp"

namespace catmat {

namespace {

template <class T>
void record(std::vector<T>& list, T item, VerificationReport& report, std::size_t cap) {
  ++report.failure_count;
  if (list.size() < cap) {
    list.push_back(std::move(item));
  }
}

}  // namespace

std::uint64_t count_triples(const FiniteCategory& c) {
  const auto n = c.object_count();
  // pairs[x * n + z] = number of composable pairs x -> y -> z
  std::vector<std::uint64_t> pairs(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        pairs[x * n + z] =
            checked::add(pairs[x * n + z], checked::mul(c.hom(x, y).size(), c.hom(y, z).size()));
      }
    }
  }
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t w = 0; w < n; ++w) {
        total = checked::add(total, checked::mul(pairs[x * n + z], c.hom(z, w).size()));
      }
    }
  }
  return total;
}

VerificationReport verify_category(const FiniteCategory& c, const HomMatrix& m,
                                   const VerifyOptions& options) {
  const auto triples = count_triples(c);
  if (triples > options.triple_budget) {
    throw BudgetError(std::to_string(triples) + " composable triples exceed the budget of " +
                      std::to_string(options.triple_budget));
  }
  VerificationReport report;
  const auto cap = options.failure_cap;
  const auto n = c.object_count();

  const auto side = std::max(n, m.order());
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const Count expected = i < m.order() && j < m.order() ? m(i, j) : 0;
      const Count actual = i < n && j < n ? c.hom(i, j).size() : 0;
      if (expected != actual) {
        record(report.cardinality_mismatches, {i, j, expected, actual}, report, cap);
      }
    }
  }

  auto closed = [&](MorphId g, MorphId f, MorphId h) {
    return h != kNoMorphism && h < c.morphism_count() &&
           c.morphism(h).source == c.morphism(f).source &&
           c.morphism(h).target == c.morphism(g).target;
  };

  for (MorphId f = 0; f < c.morphism_count(); ++f) {
    const auto& mf = c.morphism(f);
    if (c.compose(c.identity(mf.target), f) != f) {
      record(report.identity_failures, {mf.target, f, true}, report, cap);
    }
    if (c.compose(f, c.identity(mf.source)) != f) {
      record(report.identity_failures, {mf.source, f, false}, report, cap);
    }
    for (auto g : c.out_of(mf.target)) {
      const auto h = c.compose(g, f);
      if (!closed(g, f, h)) {
        record(report.closure_failures, {g, f, h}, report, cap);
      }
    }
  }

  for (MorphId f = 0; f < c.morphism_count(); ++f) {
    for (auto g : c.out_of(c.morphism(f).target)) {
      const auto gf = c.compose(g, f);
      for (auto h : c.out_of(c.morphism(g).target)) {
        ++report.triples_checked;
        const auto hg = c.compose(h, g);
        if (!closed(g, f, gf) || !closed(h, g, hg)) {
          continue;  // already reported as a closure failure
        }
        const auto left = c.compose(h, gf);
        const auto right = c.compose(hg, f);
        if (left != right) {
          record(report.associativity_failures, {h, g, f, left, right}, report, cap);
        }
      }
    }
  }

  report.passed = report.failure_count == 0;
  return report;
}

}  // namespace catmat
