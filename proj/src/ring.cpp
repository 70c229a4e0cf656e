#include "homaloidal/ring.hpp"

#include <algorithm>
#include <set>

namespace homaloidal {

int cmp_degrevlex(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::degrevlex(int nvars) {
  std::vector<int> all(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) all[std::size_t(i)] = i;
  MonomialOrder o;
  o.blocks_ = {std::move(all)};
  return o;
}

MonomialOrder MonomialOrder::elim(std::vector<int> front, int nvars) {
  std::vector<int> rest;
  for (int i = 0; i < nvars; ++i)
    if (std::find(front.begin(), front.end(), i) == front.end())
      rest.push_back(i);
  MonomialOrder o;
  o.blocks_ = {std::move(front), std::move(rest)};
  return o;
}

MonomialOrder MonomialOrder::with_blocks(std::vector<std::vector<int>> blocks) {
  MonomialOrder o;
  o.blocks_ = std::move(blocks);
  return o;
}

MonomialOrder MonomialOrder::var_last(int nvars, int var) {
  std::vector<int> seq;
  for (int i = 0; i < nvars; ++i)
    if (i != var) seq.push_back(i);
  seq.push_back(var);
  MonomialOrder o;
  o.blocks_ = {std::move(seq)};
  return o;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    int da = 0, db = 0;
    for (int v : blk) {
      da += a.e[v];
      db += b.e[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = blk.size(); k-- > 0;) {
      int v = blk[k];
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
  }
  return 0;
}

RingPtr Ring::make(FieldPtr field, std::vector<std::string> vars,
                   std::vector<std::vector<int>> grading_blocks) {
  if (!field) throw MathError("ring needs a coefficient field");
  if (vars.empty() || int(vars.size()) > kMaxVars)
    throw MathError("ring needs between 1 and " + std::to_string(kMaxVars) +
                    " variables");
  std::set<std::string> names(vars.begin(), vars.end());
  if (names.size() != vars.size())
    throw MathError("duplicate variable name in ring");
  if (grading_blocks.empty()) {
    std::vector<int> all(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) all[i] = int(i);
    grading_blocks = {std::move(all)};
  }
  std::set<int> seen;
  for (const auto& blk : grading_blocks)
    for (int v : blk) {
      if (v < 0 || v >= int(vars.size()))
        throw MathError("grading block index out of range");
      if (!seen.insert(v).second)
        throw MathError("variable appears in two grading blocks");
    }
  std::shared_ptr<Ring> r(new Ring());
  r->field_ = std::move(field);
  r->vars_ = std::move(vars);
  r->grading_ = std::move(grading_blocks);
  return r;
}

int Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return int(i);
  return -1;
}

bool Ring::same(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  return Field::same(*a.field_, *b.field_) && a.vars_ == b.vars_ &&
         a.grading_ == b.grading_;
}

}  // namespace homaloidal
