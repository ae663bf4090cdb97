#include "catmat/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

namespace catmat {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Search {
 public:
  Search(const HomMatrix& m, std::uint64_t budget) : m_(m), n_(m.order()), budget_(budget) {}

  OracleOutcome run();

 private:
  bool setup();
  MorphId comp(MorphId g, MorphId f) const;
  bool consistent(std::size_t cell) const;
  bool try_value(std::size_t cell, MorphId v);
  void assign(std::size_t cell, MorphId v);
  void unassign(std::size_t cell);
  FiniteCategory materialise() const;

  const HomMatrix& m_;
  std::size_t n_;
  std::uint64_t budget_;

  struct Mor {
    std::size_t src, tgt;
    bool identity;
    std::size_t out_pos, offset;
  };
  std::vector<Mor> mor_;
  std::vector<std::vector<MorphId>> hom_;     // x * n + y
  std::vector<std::vector<MorphId>> out_;     // all morphisms out of x
  std::vector<std::vector<MorphId>> in_nid_;  // non-identities into x
  std::vector<std::vector<MorphId>> out_nid_;

  // Search cells: pairs (g, f) of composable non-identities.
  std::vector<std::size_t> cell_of_;  // by table slot, kNone for identity pairs
  std::vector<MorphId> cell_g_, cell_f_;
  std::vector<MorphId> value_;  // by cell
  std::vector<std::vector<std::size_t>> by_value_;
};

MorphId Search::comp(MorphId g, MorphId f) const {
  if (mor_[g].identity) {
    return f;
  }
  if (mor_[f].identity) {
    return g;
  }
  return value_[cell_of_[mor_[f].offset + mor_[g].out_pos]];
}

bool Search::setup() {
  hom_.resize(n_ * n_);
  out_.resize(n_);
  in_nid_.resize(n_);
  out_nid_.resize(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      for (Count k = 0; k < m_(x, y); ++k) {
        const MorphId id = mor_.size();
        const bool identity = x == y && k == 0;
        mor_.push_back({x, y, identity, out_[x].size(), 0});
        hom_[x * n_ + y].push_back(id);
        out_[x].push_back(id);
        if (!identity) {
          in_nid_[y].push_back(id);
          out_nid_[x].push_back(id);
        }
      }
    }
  }
  std::uint64_t slots = 0, cells = 0;
  for (auto& f : mor_) {
    f.offset = slots;
    slots += out_[f.tgt].size();
    if (!f.identity) {
      cells += out_nid_[f.tgt].size();
    }
  }
  if (cells > budget_) {
    return false;
  }
  cell_of_.assign(slots, kNone);
  for (MorphId f = 0; f < mor_.size(); ++f) {
    if (mor_[f].identity) {
      continue;
    }
    for (auto g : out_nid_[mor_[f].tgt]) {
      cell_of_[mor_[f].offset + mor_[g].out_pos] = cell_g_.size();
      cell_g_.push_back(g);
      cell_f_.push_back(f);
    }
  }
  value_.assign(cell_g_.size(), kNone);
  by_value_.resize(mor_.size());
  return true;
}

// Associativity of every triple that involves `cell` and whose four cells
// are now known. value_[cell] is already set.
bool Search::consistent(std::size_t cell) const {
  const auto p = cell_g_[cell];
  const auto q = cell_f_[cell];
  const auto v = value_[cell];
  // cell = g o f, triples (h, p, q)
  for (auto h : out_nid_[mor_[p].tgt]) {
    const auto b = comp(h, p);
    if (b == kNone) {
      continue;
    }
    const auto c = comp(h, v);
    const auto d = comp(b, q);
    if (c != kNone && d != kNone && c != d) {
      return false;
    }
  }
  // cell = h o g, triples (p, q, f)
  for (auto f : in_nid_[mor_[q].src]) {
    const auto a = comp(q, f);
    if (a == kNone) {
      continue;
    }
    const auto c = comp(p, a);
    const auto d = comp(v, f);
    if (c != kNone && d != kNone && c != d) {
      return false;
    }
  }
  // cell = h o (g o f) with g o f = q, triples (p, g, f)
  for (auto other : by_value_[q]) {
    const auto b = comp(p, cell_g_[other]);
    if (b == kNone) {
      continue;
    }
    const auto d = comp(b, cell_f_[other]);
    if (d != kNone && d != v) {
      return false;
    }
  }
  // cell = (h o g) o f with h o g = p, triples (h, g, q)
  for (auto other : by_value_[p]) {
    const auto a = comp(cell_f_[other], q);
    if (a == kNone) {
      continue;
    }
    const auto c = comp(cell_g_[other], a);
    if (c != kNone && c != v) {
      return false;
    }
  }
  return true;
}

bool Search::try_value(std::size_t cell, MorphId v) {
  value_[cell] = v;
  const bool ok = consistent(cell);
  value_[cell] = kNone;
  return ok;
}

void Search::assign(std::size_t cell, MorphId v) {
  value_[cell] = v;
  by_value_[v].push_back(cell);
}

void Search::unassign(std::size_t cell) {
  by_value_[value_[cell]].pop_back();
  value_[cell] = kNone;
}

FiniteCategory Search::materialise() const {
  std::vector<Morphism> morphisms;
  std::vector<MorphId> identities(n_);
  std::vector<std::size_t> index_in_hom(mor_.size());
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      const auto& h = hom_[x * n_ + y];
      for (std::size_t k = 0; k < h.size(); ++k) {
        index_in_hom[h[k]] = k;
      }
    }
  }
  for (MorphId f = 0; f < mor_.size(); ++f) {
    const auto& mf = mor_[f];
    if (mf.identity) {
      identities[mf.src] = f;
    }
    morphisms.push_back({mf.src, mf.tgt,
                         label::Opaque{"m" + std::to_string(mf.src) + "." + std::to_string(mf.tgt) +
                                       "." + std::to_string(index_in_hom[f])}});
  }
  FiniteCategory cat(n_, std::move(morphisms), std::move(identities));
  for (MorphId f = 0; f < mor_.size(); ++f) {
    for (auto g : out_[mor_[f].tgt]) {
      cat.set_composite(g, f, comp(g, f));
    }
  }
  return cat;
}

OracleOutcome Search::run() {
  OracleOutcome out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (m_(x, x) == 0) {
      out.result = OracleResult::No;
      return out;
    }
  }
  if (!setup()) {
    out.result = OracleResult::Unknown;
    return out;
  }
  for (std::size_t c = 0; c < cell_g_.size(); ++c) {
    if (hom_[mor_[cell_f_[c]].src * n_ + mor_[cell_g_[c]].tgt].empty()) {
      out.result = OracleResult::No;
      return out;
    }
  }

  struct Frame {
    std::size_t cell;
    std::vector<MorphId> candidates;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  bool descend = true;
  while (true) {
    if (descend) {
      // Most constrained unassigned cell.
      std::size_t best = kNone;
      std::vector<MorphId> best_values;
      std::vector<MorphId> values;
      for (std::size_t c = 0; c < cell_g_.size(); ++c) {
        if (value_[c] != kNone) {
          continue;
        }
        values.clear();
        for (auto v : hom_[mor_[cell_f_[c]].src * n_ + mor_[cell_g_[c]].tgt]) {
          if (try_value(c, v)) {
            values.push_back(v);
          }
        }
        if (best == kNone || values.size() < best_values.size()) {
          best = c;
          best_values = values;
          if (values.size() <= 1) {
            break;
          }
        }
      }
      if (best == kNone) {
        out.result = OracleResult::Yes;
        out.category = materialise();
        return out;
      }
      stack.push_back({best, std::move(best_values), 0});
    }
    auto& top = stack.back();
    if (top.next < top.candidates.size()) {
      if (out.assignments >= budget_) {
        out.result = OracleResult::Unknown;
        return out;
      }
      assign(top.cell, top.candidates[top.next++]);
      ++out.assignments;
      descend = true;
      continue;
    }
    stack.pop_back();
    if (stack.empty()) {
      out.result = OracleResult::No;
      return out;
    }
    unassign(stack.back().cell);
    descend = false;
  }
}

}  // namespace

std::string_view result_name(OracleResult result) {
  switch (result) {
    case OracleResult::Yes:
      return "yes";
    case OracleResult::No:
      return "no";
    case OracleResult::Unknown:
      return "unknown";
  }
  return "?";
}

OracleOutcome oracle_decide(const HomMatrix& m, SearchBudget budget) {
  return Search(m, budget.max_assignments).run();
}

}  // namespace catmat
