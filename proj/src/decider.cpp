#include "catmat/decider.hpp"

#include <array>
#include <sstream>

#include "catmat/errors.hpp"

namespace catmat {

namespace {

constexpr std::array<std::string_view, 8> kReasonNames = {
    "zero-diagonal", "not-acceptable", "multiple-units", "u-diagonal",
    "u-offdiagonal", "cross-row",      "cross-col",      "cross-quadrant"};

std::string index_list(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    out += (a ? "," : "") + std::to_string(xs[a]);
  }
  return out;
}

struct Check {
  std::string id;
  bool ok = true;
  Reason reason;
};

/// Feeds every condition on the reduced matrix to `sink` in the order decide
/// reports them; stops early when sink returns false.
template <class Sink>
void run_conditions(const HomMatrix& n, const Partition& p, const std::vector<std::size_t>& rep,
                    Sink&& sink) {
  auto mk = [&](ReasonKind kind, std::vector<std::size_t> reduced_objects, std::size_t lam,
                std::size_t mu, std::size_t i, std::size_t j, Count required, Count actual) {
    Reason r;
    r.kind = kind;
    for (auto x : reduced_objects) {
      r.objects.push_back(rep[x]);
    }
    r.lambda = lam;
    r.mu = mu;
    r.local_i = i;
    r.local_j = j;
    r.required = required;
    r.actual = actual;
    return r;
  };

  for (std::size_t c = 0; c < p.class_count(); ++c) {
    Check chk{"units[" + std::to_string(c) + "]", true, {}};
    for (const auto& conflict : p.unit_conflicts) {
      if (conflict.cls == c) {
        chk.ok = false;
        chk.reason = mk(ReasonKind::MultipleUnits, conflict.objects, c, c, 0, 0, 1,
                        conflict.objects.size());
      }
    }
    if (!sink(std::move(chk))) {
      return;
    }
  }

  for (std::size_t lam = 0; lam < p.class_count(); ++lam) {
    if (p.kinds[lam] != ClassKind::U) {
      continue;
    }
    const auto base = p.object(lam, 0);
    for (std::size_t i = 1; i < p.end_local(lam); ++i) {
      const auto xi = p.object(lam, i);
      const Count a = n(xi, base);
      for (std::size_t j = 1; j < p.end_local(lam); ++j) {
        const auto xj = p.object(lam, j);
        const Count b = n(base, xj);
        const std::string loc = std::to_string(lam) + "," + std::to_string(i);
        Check chk;
        if (i == j) {
          const Count required = checked::add(checked::mul(a, b), 1);
          chk.id = "u-diagonal[" + loc + "]";
          chk.ok = n(xi, xi) >= required;
          chk.reason = mk(ReasonKind::UDiagonal, {xi, base}, lam, lam, i, i, required, n(xi, xi));
        } else {
          const Count required = checked::mul(a, b);
          chk.id = "u-offdiagonal[" + loc + "," + std::to_string(j) + "]";
          chk.ok = n(xi, xj) >= required;
          chk.reason =
              mk(ReasonKind::UOffDiagonal, {xi, xj, base}, lam, lam, i, j, required, n(xi, xj));
        }
        if (!sink(std::move(chk))) {
          return;
        }
      }
    }
  }

  for (const auto& [lam, mu] : p.order) {
    const bool lam_u = p.kinds[lam] == ClassKind::U;
    const bool mu_u = p.kinds[mu] == ClassKind::U;
    if (!lam_u && !mu_u) {
      continue;
    }
    for (std::size_t i = p.first_local(lam); i < p.end_local(lam); ++i) {
      for (std::size_t j = p.first_local(mu); j < p.end_local(mu); ++j) {
        const auto xi = p.object(lam, i);
        const auto yj = p.object(mu, j);
        const Count actual = n(xi, yj);
        const std::string loc = std::to_string(lam) + "," + std::to_string(mu) + "," +
                                std::to_string(i) + "," + std::to_string(j) + "]";
        if (mu_u) {
          const auto y0 = p.object(mu, 0);
          Check chk{"cross-row[" + loc, actual >= n(xi, y0),
                    mk(ReasonKind::CrossRow, {xi, yj, y0}, lam, mu, i, j, n(xi, y0), actual)};
          if (!sink(std::move(chk))) {
            return;
          }
        }
        if (lam_u) {
          const auto x0 = p.object(lam, 0);
          Check chk{"cross-col[" + loc, actual >= n(x0, yj),
                    mk(ReasonKind::CrossCol, {xi, yj, x0}, lam, mu, i, j, n(x0, yj), actual)};
          if (!sink(std::move(chk))) {
            return;
          }
        }
        if (lam_u && mu_u) {
          const auto x0 = p.object(lam, 0);
          const auto y0 = p.object(mu, 0);
          const Count sum = checked::add(n(x0, yj), n(xi, y0));
          const Count c = n(x0, y0);
          // sum < c makes the bound negative, which always holds
          const Count required = sum >= c ? sum - c : 0;
          Check chk{"cross-quadrant[" + loc, actual >= required,
                    mk(ReasonKind::CrossQuadrant, {xi, yj, x0, y0}, lam, mu, i, j, required,
                       actual)};
          if (!sink(std::move(chk))) {
            return;
          }
        }
      }
    }
  }
}

Reason acceptability_reason(const AcceptabilityFailure& bad, const std::vector<std::size_t>& rep) {
  Reason r;
  r.acceptability = bad;
  if (bad.kind == AcceptabilityFailure::Kind::Reflexivity) {
    r.kind = ReasonKind::ZeroDiagonal;
    r.objects = {rep[bad.i]};
    r.required = 1;
    r.actual = 0;
  } else {
    r.kind = ReasonKind::NotAcceptable;
    r.objects = {rep[bad.i], rep[bad.j], rep[bad.k]};
    r.required = 1;
    r.actual = 0;
  }
  r.acceptability->i = rep[bad.i];
  r.acceptability->j = rep[bad.j];
  r.acceptability->k = rep[bad.k];
  return r;
}

}  // namespace

std::string_view reason_name(ReasonKind kind) {
  return kReasonNames[static_cast<std::size_t>(kind)];
}

std::string_view status_name(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::Pass:
      return "pass";
    case ConditionStatus::Fail:
      return "FAIL";
    case ConditionStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::string describe(const Reason& r) {
  std::ostringstream out;
  const auto& o = r.objects;
  out << reason_name(r.kind) << ": ";
  switch (r.kind) {
    case ReasonKind::ZeroDiagonal:
      out << "M(" << o[0] << "," << o[0] << ") = 0, object " << o[0] << " has no identity";
      return out.str();
    case ReasonKind::NotAcceptable:
      out << "M(" << o[0] << "," << o[1] << ") >= 1 and M(" << o[1] << "," << o[2]
          << ") >= 1 but M(" << o[0] << "," << o[2] << ") = 0";
      return out.str();
    case ReasonKind::MultipleUnits:
      out << "objects " << index_list(o) << " lie in one class and each has a single endomorphism";
      return out.str();
    case ReasonKind::UDiagonal:
      out << "M(" << o[0] << "," << o[0] << ") >= M(" << o[0] << "," << o[1] << ")*M(" << o[1]
          << "," << o[0] << ") + 1";
      break;
    case ReasonKind::UOffDiagonal:
      out << "M(" << o[0] << "," << o[1] << ") >= M(" << o[0] << "," << o[2] << ")*M(" << o[2]
          << "," << o[1] << ")";
      break;
    case ReasonKind::CrossRow:
      out << "M(" << o[0] << "," << o[1] << ") >= M(" << o[0] << "," << o[2] << ")";
      break;
    case ReasonKind::CrossCol:
      out << "M(" << o[0] << "," << o[1] << ") >= M(" << o[2] << "," << o[1] << ")";
      break;
    case ReasonKind::CrossQuadrant:
      out << "M(" << o[0] << "," << o[1] << ") >= M(" << o[2] << "," << o[1] << ") + M(" << o[0]
          << "," << o[3] << ") - M(" << o[2] << "," << o[3] << ")";
      break;
  }
  out << " fails: " << r.required << " <= " << r.actual << " is false";
  return out.str();
}

Verdict decide(const HomMatrix& m) {
  Verdict v;
  v.reduction = reduce(m);
  if (m.order() == 0) {
    v.exists = true;
    return v;
  }
  const auto& n = v.reduction.reduced;
  const auto& rep = v.reduction.map.representative;
  if (auto bad = check_acceptable(n)) {
    v.reason = acceptability_reason(*bad, rep);
    return v;
  }
  v.partition = build_partition(n);
  run_conditions(n, *v.partition, rep, [&](Check&& chk) {
    if (!chk.ok) {
      v.reason = std::move(chk.reason);
      return false;
    }
    return true;
  });
  v.exists = !v.reason.has_value();
  return v;
}

std::vector<ConditionResult> condition_report(const HomMatrix& m) {
  std::vector<ConditionResult> out;
  const auto red = reduce(m);
  const auto& n = red.reduced;
  const auto& rep = red.map.representative;
  bool reflexive = true;
  for (std::size_t i = 0; i < n.order(); ++i) {
    ConditionResult r{"reflexivity[" + std::to_string(rep[i]) + "]", ConditionStatus::Pass,
                      "M(" + std::to_string(rep[i]) + "," + std::to_string(rep[i]) +
                          ") = " + std::to_string(n(i, i)),
                      std::nullopt};
    if (n(i, i) == 0) {
      reflexive = false;
      r.status = ConditionStatus::Fail;
      r.reason = acceptability_reason({AcceptabilityFailure::Kind::Reflexivity, i, i, i}, rep);
    }
    out.push_back(std::move(r));
  }
  ConditionResult trans{"transitivity", ConditionStatus::Pass, "", std::nullopt};
  const auto bad = check_acceptable(n);
  if (!reflexive) {
    trans.status = ConditionStatus::Skipped;
    trans.details = "needs reflexivity";
  } else if (bad) {
    trans.status = ConditionStatus::Fail;
    trans.reason = acceptability_reason(*bad, rep);
    trans.details = describe(*trans.reason);
  }
  out.push_back(trans);
  if (bad) {
    out.push_back({"partition", ConditionStatus::Skipped, "matrix is not acceptable", std::nullopt});
    return out;
  }
  const auto p = build_partition(n);
  run_conditions(n, p, rep, [&](Check&& chk) {
    ConditionResult r{std::move(chk.id), chk.ok ? ConditionStatus::Pass : ConditionStatus::Fail,
                      "", std::nullopt};
    if (chk.reason.kind == ReasonKind::MultipleUnits) {
      r.details = chk.ok ? "at most one object with a single endomorphism" : describe(chk.reason);
    } else {
      r.details = std::to_string(chk.reason.actual) + " >= " + std::to_string(chk.reason.required);
    }
    if (!chk.ok) {
      r.details = describe(chk.reason);
      r.reason = std::move(chk.reason);
    }
    out.push_back(std::move(r));
    return true;
  });
  return out;
}

Verdict decide_by_submatrices(const HomMatrix& m) {
  const auto n = m.order();
  Verdict v;
  v.reduction = reduce(m);
  v.exists = true;
  std::vector<std::size_t> subset;
  // Subsets of each size k in lexicographic order.
  for (std::size_t k = 1; k <= std::min<std::size_t>(4, n) && v.exists; ++k) {
    subset.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      subset[a] = a;
    }
    while (true) {
      auto inner = decide(principal_submatrix(m, subset));
      if (!inner.exists) {
        v.exists = false;
        v.reason = std::move(inner.reason);
        for (auto& x : v.reason->objects) {
          x = subset[x];
        }
        if (v.reason->acceptability) {
          auto& acc = *v.reason->acceptability;
          acc.i = subset[acc.i];
          acc.j = subset[acc.j];
          acc.k = subset[acc.k];
        }
        v.subset = subset;
        break;
      }
      std::size_t a = k;
      while (a > 0 && subset[a - 1] == n - k + a - 1) {
        --a;
      }
      if (a == 0) {
        break;
      }
      ++subset[a - 1];
      for (std::size_t b = a; b < k; ++b) {
        subset[b] = subset[b - 1] + 1;
      }
    }
  }
  if (v.exists && n > 0) {
    auto full = decide(m);
    v.partition = std::move(full.partition);
  }
  return v;
}

}  // namespace catmat
