#include "catmat/partition.hpp"

#include <algorithm>
#include <string>

#include "catmat/errors.hpp"

namespace catmat {

char kind_letter(ClassKind kind) { return kind == ClassKind::U ? 'U' : 'V'; }

bool reaches(const HomMatrix& m, ObjectId i, ObjectId j) { return m.at(i, j) >= 1; }

std::optional<AcceptabilityFailure> check_acceptable(const HomMatrix& m) {
  const auto n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) == 0) {
      return AcceptabilityFailure{AcceptabilityFailure::Kind::Reflexivity, i, i, i};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 0) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (m(j, k) >= 1 && m(i, k) == 0) {
          return AcceptabilityFailure{AcceptabilityFailure::Kind::Transitivity, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

bool Partition::above(std::size_t lam, std::size_t mu) const {
  return std::binary_search(order.begin(), order.end(), std::make_pair(lam, mu));
}

std::size_t Partition::object(std::size_t cls, std::size_t local) const {
  return classes.at(cls).at(local - first_local(cls));
}

std::vector<std::pair<std::size_t, std::size_t>> Partition::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [lam, mu] : order) {
    bool covered = true;
    for (std::size_t nu = 0; nu < class_count() && covered; ++nu) {
      if (above(lam, nu) && above(nu, mu)) {
        covered = false;
      }
    }
    if (covered) {
      out.emplace_back(lam, mu);
    }
  }
  return out;
}

Partition build_partition(const HomMatrix& m) {
  if (auto bad = check_acceptable(m)) {
    throw NotAcceptableError(bad->kind == AcceptabilityFailure::Kind::Reflexivity
                                 ? "zero diagonal at " + std::to_string(bad->i)
                                 : "reachability not transitive at (" + std::to_string(bad->i) +
                                       "," + std::to_string(bad->j) + "," +
                                       std::to_string(bad->k) + ")");
  }
  const auto n = m.order();
  Partition p;
  p.coords.resize(n);
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != n) {
      continue;
    }
    const auto c = p.classes.size();
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < n; ++j) {
      if (m(i, j) >= 1 && m(j, i) >= 1) {
        class_of[j] = c;
        members.push_back(j);
      }
    }
    std::vector<std::size_t> units;
    std::copy_if(members.begin(), members.end(), std::back_inserter(units),
                 [&](std::size_t x) { return m(x, x) == 1; });
    if (units.empty()) {
      p.kinds.push_back(ClassKind::V);
      p.basepoints.push_back(std::nullopt);
    } else {
      p.kinds.push_back(ClassKind::U);
      p.basepoints.push_back(units.front());
      std::stable_partition(members.begin(), members.end(),
                            [&](std::size_t x) { return x == units.front(); });
      if (units.size() > 1) {
        p.unit_conflicts.push_back({c, units});
      }
    }
    p.classes.push_back(std::move(members));
  }
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    for (std::size_t a = 0; a < p.classes[c].size(); ++a) {
      p.coords[p.classes[c][a]] = {c, a + p.first_local(c)};
    }
  }
  for (std::size_t lam = 0; lam < p.classes.size(); ++lam) {
    for (std::size_t mu = 0; mu < p.classes.size(); ++mu) {
      if (lam != mu && m(p.classes[lam][0], p.classes[mu][0]) >= 1) {
        p.order.emplace_back(lam, mu);
      }
    }
  }
  return p;
}

}  // namespace catmat
