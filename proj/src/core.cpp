#include "xcnf/core.hpp"

#include <algorithm>
#include <sstream>

namespace xcnf {

namespace {

void sort_unique(std::vector<Lit>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

// After sort_unique, a clash is a pair of adjacent literals on the same variable.
bool has_clash(const std::vector<Lit>& lits) {
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].var() == lits[i - 1].var()) return true;
  return false;
}

}  // namespace

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  sort_unique(lits_);
  if (has_clash(lits_)) throw Error("clashing literals in clause");
}

Clause::Clause(std::initializer_list<int> lits) {
  lits_.reserve(lits.size());
  for (int x : lits) lits_.push_back(Lit(x));
  sort_unique(lits_);
  if (has_clash(lits_)) throw Error("clashing literals in clause");
}

std::optional<Clause> Clause::try_make(std::vector<Lit> lits) {
  sort_unique(lits);
  if (has_clash(lits)) return std::nullopt;
  Clause c;
  c.lits_ = std::move(lits);
  return c;
}

bool Clause::contains(Lit x) const {
  return std::binary_search(lits_.begin(), lits_.end(), x);
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::vector<Var> Clause::vars() const {
  std::vector<Var> vs;
  vs.reserve(lits_.size());
  for (Lit x : lits_) vs.push_back(x.var());
  return vs;  // already sorted: literal order is variable-major
}

bool Clause::is_horn() const {
  int pos = 0;
  for (Lit x : lits_)
    if (x.positive() && ++pos > 1) return false;
  return true;
}

bool operator<(const Clause& a, const Clause& b) {
  return std::lexicographical_compare(a.lits_.begin(), a.lits_.end(), b.lits_.begin(),
                                      b.lits_.end());
}

std::string Clause::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) os << ',';
    os << lits_[i].value();
  }
  os << '}';
  return os.str();
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses)
    : ClauseSet(std::vector<Clause>(clauses)) {}

bool ClauseSet::has_empty_clause() const {
  return !clauses_.empty() && clauses_.front().empty();
}

bool ClauseSet::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::size_t ClauseSet::n() const { return vars().size(); }

std::size_t ClauseSet::ell() const {
  std::size_t total = 0;
  for (const Clause& c : clauses_) total += c.size();
  return total;
}

std::vector<Var> ClauseSet::vars() const {
  std::vector<Var> vs;
  for (const Clause& c : clauses_)
    for (Lit x : c.lits()) vs.push_back(x.var());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<Lit> ClauseSet::occurring_lits() const {
  std::vector<Lit> ls;
  for (const Clause& c : clauses_)
    for (Lit x : c.lits()) ls.push_back(x);
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls;
}

bool ClauseSet::is_horn() const {
  for (const Clause& c : clauses_)
    if (!c.is_horn()) return false;
  return true;
}

std::string ClauseSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) os << ',';
    os << clauses_[i].str();
  }
  os << '}';
  return os.str();
}

PartialAssignment::PartialAssignment(std::vector<std::pair<Var, bool>> entries)
    : map_(std::move(entries)) {
  std::sort(map_.begin(), map_.end());
  for (std::size_t i = 1; i < map_.size(); ++i)
    if (map_[i].first == map_[i - 1].first)
      throw Error("duplicate variable in partial assignment");
  for (auto& [v, b] : map_)
    if (v <= 0) throw Error("assignment variable must be positive");
}

PartialAssignment PartialAssignment::falsifying(const Clause& c) {
  std::vector<std::pair<Var, bool>> m;
  m.reserve(c.size());
  for (Lit x : c.lits()) m.emplace_back(x.var(), !x.positive());
  return PartialAssignment(std::move(m));
}

bool PartialAssignment::defines(Var v) const { return value(v).has_value(); }

std::optional<bool> PartialAssignment::value(Var v) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), std::make_pair(v, false));
  if (it != map_.end() && it->first == v) return it->second;
  return std::nullopt;
}

std::optional<bool> PartialAssignment::value(Lit x) const {
  auto b = value(x.var());
  if (!b) return std::nullopt;
  return x.positive() ? *b : !*b;
}

std::vector<Var> PartialAssignment::vars() const {
  std::vector<Var> vs;
  vs.reserve(map_.size());
  for (auto& [v, b] : map_) vs.push_back(v);
  return vs;
}

PartialAssignment PartialAssignment::with(Lit x, bool val) const {
  std::vector<std::pair<Var, bool>> m = map_;
  bool want = x.positive() ? val : !val;
  auto it = std::lower_bound(m.begin(), m.end(), std::make_pair(x.var(), false));
  if (it != m.end() && it->first == x.var())
    it->second = want;
  else
    m.insert(it, {x.var(), want});
  PartialAssignment out;
  out.map_ = std::move(m);
  return out;
}

std::string PartialAssignment::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) os << ',';
    os << map_[i].first << "->" << (map_[i].second ? 1 : 0);
  }
  os << '>';
  return os.str();
}

ClauseSet apply(const PartialAssignment& phi, const ClauseSet& f) {
  std::vector<Clause> out;
  out.reserve(f.c());
  for (const Clause& c : f.clauses()) {
    bool satisfied = false;
    std::vector<Lit> rest;
    rest.reserve(c.size());
    for (Lit x : c.lits()) {
      auto b = phi.value(x);
      if (!b) {
        rest.push_back(x);
      } else if (*b) {
        satisfied = true;
        break;
      }
      // literal set to 0: dropped
    }
    if (satisfied) continue;
    out.push_back(*Clause::try_make(std::move(rest)));  // cannot clash: subset of c
  }
  return ClauseSet(std::move(out));
}

Clause pure_clause(const ClauseSet& f) {
  std::vector<Lit> occurring = f.occurring_lits();
  std::vector<Lit> pure;
  for (Lit x : occurring) {
    if (!std::binary_search(occurring.begin(), occurring.end(), x.complement()))
      pure.push_back(x);
  }
  return Clause(std::move(pure));
}

ClauseSet subsumption_eliminate(const ClauseSet& f) {
  std::vector<Clause> keep;
  const auto& cs = f.clauses();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      if (cs[j].size() < cs[i].size() && cs[j].subset_of(cs[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(cs[i]);
  }
  return ClauseSet(std::move(keep));
}

PartialAssignment compose(const PartialAssignment& phi, const PartialAssignment& psi) {
  std::vector<std::pair<Var, bool>> m = phi.entries();
  for (auto& [v, b] : psi.entries())
    if (!phi.defines(v)) m.emplace_back(v, b);
  return PartialAssignment(std::move(m));
}

}  // namespace xcnf
