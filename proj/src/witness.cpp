#include "catmat/witness.hpp"

#include <utility>

#include "catmat/decider.hpp"
#include "catmat/errors.hpp"
#include "catmat/reduction.hpp"

// Construction summary.
//
// Inside a U class lam with basepoint lam^0, Hom(lam^i, lam^j) holds
// Pair(u, v) for u <= a(i), v <= b(j): a morphism into the basepoint
// followed by one out of it. Pair(0,0,1,1) is the basepoint identity and is
// named Identity(lam,0). Composition forgets the middle:
//   Pair(j,k,u,v) o Pair(i,j,u',v') = Pair(i,k,u',v).
// Surplus morphisms are Pads. A Pad composes like Pair(1,1) on the left and
// like Pair(a(i),b(j)) on the right, except that each Pad is idempotent.
//
// A V class is filled with one Collapsed morphism per pair plus Pads, and
// every composite of non-identities is Collapsed (Pads again idempotent).
//
// For lam > mu, Hom(lam^i, mu^j) splits into tagged parts. With both classes
// U the parts line up with intervals of Hom(lam^i, mu^j) as
//   Base  <-> |lam^0, mu^0|        (size M(lam^0,mu^0))
//   Row   <-> |lam^i, mu^0| minus the base
//   Col   <-> |lam^0, mu^j| minus the base
//   Extra <-> the rest of |lam^i, mu^j|.
// If lam is V only the mu^0 side exists: Base takes the place of Row.
// If mu is V, Base takes the place of Col. Both V: everything is Base.
// Precomposing with a lam-morphism ending at lam^0 keeps the label, ending
// elsewhere keeps Base/Col and sends Row/Extra to Base 1. Postcomposing
// with a mu-morphism starting at mu^0 keeps the label, starting elsewhere
// keeps Base/Row. A V side sends everything to Base 1, as does a composite
// through three classes.

namespace catmat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using label::CrossPart;

Count minus(Count a, Count b, const char* what) {
  if (b > a) {
    throw CountError(std::string("negative part size for ") + what);
  }
  return a - b;
}

std::pair<ObjectCoord, ObjectCoord> ends(const MorphismLabel& l) {
  return std::visit(
      overloaded{
          [](const label::Identity& x) {
            return std::pair{ObjectCoord{x.cls, x.i}, ObjectCoord{x.cls, x.i}};
          },
          [](const label::Pair& x) {
            return std::pair{ObjectCoord{x.cls, x.i}, ObjectCoord{x.cls, x.j}};
          },
          [](const label::Collapsed& x) {
            return std::pair{ObjectCoord{x.cls, x.i}, ObjectCoord{x.cls, x.j}};
          },
          [](const label::Pad& x) {
            return std::pair{ObjectCoord{x.cls, x.i}, ObjectCoord{x.cls, x.j}};
          },
          [](const label::Cross& x) {
            return std::pair{ObjectCoord{x.lam, x.i}, ObjectCoord{x.mu, x.j}};
          },
          [](const auto&) -> std::pair<ObjectCoord, ObjectCoord> {
            throw NotComposableError("label was not produced by the witness builder");
          },
      },
      l);
}

MorphismLabel omega(ObjectCoord x, ObjectCoord y) {
  return label::Cross{CrossPart::Base, x.cls, x.local, y.cls, y.local, 1};
}

MorphismLabel within(const MorphismLabel& g, const MorphismLabel& f, ObjectCoord x,
                     ObjectCoord z, const WitnessContext& ctx) {
  const auto* pg = std::get_if<label::Pad>(&g);
  const auto* pf = std::get_if<label::Pad>(&f);
  if (pg && pf && *pg == *pf) {
    return f;
  }
  const auto cls = x.cls;
  if (ctx.partition.kinds[cls] == ClassKind::V) {
    return label::Collapsed{cls, x.local, z.local};
  }
  const Count u = pf ? a_of(ctx.partition, ctx.matrix, cls, x.local)
                     : std::get<label::Pair>(f).u;
  const Count v = pg ? 1 : std::get<label::Pair>(g).v;
  if (x.local == 0 && z.local == 0) {
    return label::Identity{cls, 0};
  }
  return label::Pair{cls, x.local, z.local, u, v};
}

}  // namespace

Count a_of(const Partition& p, const HomMatrix& m, std::size_t cls, std::size_t local) {
  if (p.kinds.at(cls) == ClassKind::V || local == 0) {
    return 1;
  }
  return m(p.object(cls, local), p.object(cls, 0));
}

Count b_of(const Partition& p, const HomMatrix& m, std::size_t cls, std::size_t local) {
  if (p.kinds.at(cls) == ClassKind::V || local == 0) {
    return 1;
  }
  return m(p.object(cls, 0), p.object(cls, local));
}

std::vector<std::vector<MorphismLabel>> build_hom_labels(const HomMatrix& m, const Partition& p) {
  const auto n = m.order();
  std::vector<std::vector<MorphismLabel>> homs(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& out = homs[x * n + y];
      const auto [lam, i] = p.coords[x];
      const auto [mu, j] = p.coords[y];
      if (x == y) {
        out.push_back(label::Identity{lam, i});
      }
      if (lam == mu) {
        Count baseline = 1;
        if (p.kinds[lam] == ClassKind::U) {
          const Count a = a_of(p, m, lam, i);
          const Count b = b_of(p, m, lam, j);
          baseline = checked::mul(a, b);
          for (Count u = 1; u <= a; ++u) {
            for (Count v = 1; v <= b; ++v) {
              if (i != 0 || j != 0) {
                out.push_back(label::Pair{lam, i, j, u, v});
              }
            }
          }
          if (i == 0 && j == 0) {
            baseline = 0;  // the identity is the only pair here
          }
        } else {
          out.push_back(label::Collapsed{lam, i, j});
        }
        const Count pads = minus(m(x, y), checked::add(baseline, x == y ? 1 : 0), "padding");
        for (Count k = 1; k <= pads; ++k) {
          out.push_back(label::Pad{lam, i, j, k});
        }
        continue;
      }
      if (m(x, y) == 0) {
        continue;
      }
      const bool lam_u = p.kinds[lam] == ClassKind::U;
      const bool mu_u = p.kinds[mu] == ClassKind::U;
      Count base = 0, row = 0, col = 0, extra = 0;
      if (lam_u && mu_u) {
        const auto x0 = p.object(lam, 0);
        const auto y0 = p.object(mu, 0);
        base = m(x0, y0);
        row = minus(m(x, y0), base, "row part");
        col = minus(m(x0, y), base, "column part");
        extra = minus(m(x, y), checked::add(base, checked::add(row, col)), "extra part");
      } else if (mu_u) {
        base = m(x, p.object(mu, 0));
        extra = minus(m(x, y), base, "extra part");
      } else if (lam_u) {
        base = m(p.object(lam, 0), y);
        extra = minus(m(x, y), base, "extra part");
      } else {
        base = m(x, y);
      }
      const std::pair<CrossPart, Count> parts[] = {
          {CrossPart::Base, base}, {CrossPart::Row, row}, {CrossPart::Col, col},
          {CrossPart::Extra, extra}};
      for (const auto& [part, size] : parts) {
        for (Count k = 1; k <= size; ++k) {
          out.push_back(label::Cross{part, lam, i, mu, j, k});
        }
      }
    }
  }
  return homs;
}

MorphismLabel compose(const MorphismLabel& g, const MorphismLabel& f, const WitnessContext& ctx) {
  const auto [x, y] = ends(f);
  const auto [y2, z] = ends(g);
  if (y != y2) {
    throw NotComposableError(to_string(g) + " after " + to_string(f));
  }
  if (std::holds_alternative<label::Identity>(g)) {
    return f;
  }
  if (std::holds_alternative<label::Identity>(f)) {
    return g;
  }
  const auto& kinds = ctx.partition.kinds;
  if (x.cls == y.cls && y.cls == z.cls) {
    return within(g, f, x, z, ctx);
  }
  if (x.cls == y.cls) {
    // cross after a morphism of x's class
    const auto& h = std::get<label::Cross>(g);
    if (kinds[x.cls] == ClassKind::V) {
      return omega(x, z);
    }
    if (y.local != 0 && (h.part == CrossPart::Row || h.part == CrossPart::Extra)) {
      return omega(x, z);
    }
    return label::Cross{h.part, x.cls, x.local, z.cls, z.local, h.k};
  }
  if (y.cls == z.cls) {
    // morphism of z's class after a cross
    const auto& h = std::get<label::Cross>(f);
    if (kinds[z.cls] == ClassKind::V) {
      return omega(x, z);
    }
    if (y.local != 0 && (h.part == CrossPart::Col || h.part == CrossPart::Extra)) {
      return omega(x, z);
    }
    return label::Cross{h.part, x.cls, x.local, z.cls, z.local, h.k};
  }
  return omega(x, z);
}

FiniteCategory build_reduced_witness(const HomMatrix& reduced, const Partition& p) {
  const auto n = reduced.order();
  auto homs = build_hom_labels(reduced, p);
  std::vector<Morphism> morphisms;
  std::vector<MorphId> identities(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (auto& l : homs[x * n + y]) {
        if (x == y && std::holds_alternative<label::Identity>(l)) {
          identities[x] = morphisms.size();
        }
        morphisms.push_back({x, y, std::move(l)});
      }
    }
  }
  FiniteCategory cat(n, std::move(morphisms), std::move(identities), p.coords);
  const WitnessContext ctx{reduced, p};
  for (MorphId f = 0; f < cat.morphism_count(); ++f) {
    for (auto g : cat.out_of(cat.morphism(f).target)) {
      const auto h = compose(cat.morphism(g).label, cat.morphism(f).label, ctx);
      auto id = cat.find(h);
      if (!id) {
        throw Error("composite " + to_string(h) + " of " + cat.label_of(g) + " after " +
                    cat.label_of(f) + " is not a morphism");
      }
      cat.set_composite(g, f, *id);
    }
  }
  return cat;
}

FiniteCategory build_witness(const HomMatrix& m) {
  auto verdict = decide(m);
  if (!verdict.exists) {
    throw RejectedError(describe(*verdict.reason));
  }
  if (m.order() == 0) {
    return FiniteCategory(0, {}, {});
  }
  const auto base = build_reduced_witness(verdict.reduction.reduced, *verdict.partition);
  return inflate(base, verdict.reduction.map);
}

}  // namespace catmat
