/* Copyright 2026 The stnf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <algorithm>
#include <optional>
#include <set>

#include "stnf/error.hpp"
#include "stnf/lab.hpp"
#include "type_info.hpp"

namespace stnf {

namespace {

std::vector<std::vector<Value>> product(const std::vector<std::vector<Value>>& lists,
                                        uint64_t cap) {
  std::vector<std::vector<Value>> out{{}};
  for (const auto& l : lists) {
    std::vector<std::vector<Value>> next;
    for (const auto& prefix : out)
      for (Value v : l) {
        if (next.size() >= cap)
          fail(ErrorCode::kBudgetExceeded, "witness search space over budget");
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out.swap(next);
  }
  return out;
}

std::vector<Value> standard_values(Universe& u, const Binder& b, bool largest_first) {
  std::vector<Value> vals = u.standard(u.info(b.type));
  if (largest_first && b.type.is_seq()) std::reverse(vals.begin(), vals.end());
  return vals;
}

// Matrix with the existential guards folded in, and the universal guards.
struct Problem {
  Formula psi;
  std::optional<Formula> univ_guard;
  VarMap params;
};

Problem problem(const NormalForm& nf) {
  std::vector<Formula> eg, ug;
  for (const auto& b : nf.exist)
    if (b.guard) eg.push_back(guard_atom(Term::var(b.name, b.type), *b.guard));
  for (const auto& b : nf.univ)
    if (b.guard) ug.push_back(guard_atom(Term::var(b.name, b.type), *b.guard));
  eg.push_back(nf.matrix);
  Problem p{conj_all(eg), std::nullopt, {}};
  if (!ug.empty()) p.univ_guard = conj_all(ug);
  p.params = free_vars(p.psi);
  if (p.univ_guard)
    for (const auto& [n, t] : free_vars(*p.univ_guard)) p.params.emplace(n, t);
  for (const auto& b : nf.univ) p.params.erase(b.name);
  for (const auto& b : nf.exist) p.params.erase(b.name);
  return p;
}

struct Runner {
  Evaluator psi;
  std::optional<Evaluator> guard;
  Runner(Universe& u, const Problem& p) : psi(u, p.psi) {
    if (p.univ_guard) guard.emplace(u, *p.univ_guard);
  }
};

Env row_env(const NormalForm& nf, const std::vector<Value>& x, const std::vector<Value>& y,
            const Env& params) {
  Env env = params;
  for (size_t i = 0; i < nf.univ.size(); ++i) env[nf.univ[i].name] = x[i];
  for (size_t i = 0; i < nf.exist.size() && i < y.size(); ++i) env[nf.exist[i].name] = y[i];
  return env;
}

std::vector<Env> param_envs(Universe& u, const VarMap& params, const Env& fixed) {
  std::vector<std::string> names;
  std::vector<std::vector<Value>> lists;
  for (const auto& [name, type] : params) {
    names.push_back(name);
    auto it = fixed.find(name);
    if (it != fixed.end())
      lists.push_back({it->second});
    else
      lists.push_back(u.all(u.info(type)));
  }
  std::vector<Env> out;
  for (const auto& tuple : product(lists, u.budget())) {
    Env e;
    for (size_t i = 0; i < names.size(); ++i) e[names[i]] = tuple[i];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

WitnessTable extract_witnesses(const NormalForm& nf, Universe& u, const Env& params) {
  Problem p = problem(nf);
  Runner r(u, p);
  WitnessTable t;
  t.univ = nf.univ;
  t.exist = nf.exist;
  t.params = param_envs(u, p.params, params);

  std::vector<std::vector<Value>> ulists, elists;
  for (const auto& b : nf.univ) ulists.push_back(standard_values(u, b, false));
  for (const auto& b : nf.exist) elists.push_back(standard_values(u, b, true));
  auto candidates = product(elists, u.budget());

  for (const auto& x : product(ulists, u.budget())) {
    std::vector<size_t> relevant;
    for (size_t a = 0; a < t.params.size(); ++a)
      if (!r.guard || r.guard->run(row_env(nf, x, {}, t.params[a]))) relevant.push_back(a);
    // sat[j][k]: chosen witness j covers relevant parameter k
    std::vector<std::vector<bool>> sat;
    std::vector<size_t> chosen;
    std::vector<bool> covered(relevant.size(), false);
    for (size_t k = 0; k < relevant.size(); ++k) {
      if (covered[k]) continue;
      size_t found = candidates.size();
      for (size_t c = 0; c < candidates.size() && found == candidates.size(); ++c)
        if (r.psi.run(row_env(nf, x, candidates[c], t.params[relevant[k]]))) found = c;
      if (found == candidates.size())
        fail(ErrorCode::kNotValid, "no standard witness for a standard instance; "
                                   "the normal form is false in this model");
      chosen.push_back(found);
      std::vector<bool> row(relevant.size(), false);
      for (size_t q = 0; q < relevant.size(); ++q) {
        row[q] = r.psi.run(row_env(nf, x, candidates[found], t.params[relevant[q]]));
        if (row[q]) covered[q] = true;
      }
      sat.push_back(std::move(row));
    }
    for (size_t j = 0; j < chosen.size();) {
      bool redundant = true;
      for (size_t q = 0; q < relevant.size() && redundant; ++q) {
        bool other = false;
        for (size_t i = 0; i < chosen.size(); ++i)
          if (i != j && sat[i][q]) other = true;
        if (!other) redundant = false;
      }
      if (redundant) {
        chosen.erase(chosen.begin() + static_cast<long>(j));
        sat.erase(sat.begin() + static_cast<long>(j));
      } else {
        ++j;
      }
    }
    WitnessTable::Row row;
    row.x = x;
    for (size_t c : chosen) row.ys.push_back(candidates[c]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

WitnessCheck verify_witnesses(const NormalForm& nf, const WitnessTable& t, Universe& u) {
  WitnessCheck out;
  Problem p = problem(nf);
  Runner r(u, p);
  std::vector<std::vector<Value>> ulists;
  for (const auto& b : nf.univ) ulists.push_back(standard_values(u, b, false));
  auto xs = product(ulists, u.budget());
  std::set<std::vector<Value>> seen;
  for (const auto& row : t.rows) seen.insert(row.x);
  out.complete = seen.size() == t.rows.size() && seen.size() == xs.size();
  for (const auto& x : xs)
    if (!seen.count(x)) out.complete = false;
  if (!out.complete) out.detail = "table does not list every standard instance exactly once";

  out.herbrand = true;
  out.minimal = true;
  for (const auto& row : t.rows) {
    std::vector<bool> sole(row.ys.size(), false);
    for (const auto& params : t.params) {
      if (r.guard && !r.guard->run(row_env(nf, row.x, {}, params))) continue;
      size_t hits = 0, last = 0;
      for (size_t j = 0; j < row.ys.size(); ++j)
        if (r.psi.run(row_env(nf, row.x, row.ys[j], params))) {
          ++hits;
          last = j;
        }
      if (hits == 0) out.herbrand = false;
      if (hits == 1) sole[last] = true;
    }
    for (bool s : sole)
      if (!s) out.minimal = false;
  }
  if (!out.herbrand) out.detail = "some standard instance has no witness in its list";
  else if (!out.minimal) out.detail = "some witness can be dropped";
  return out;
}

Json WitnessTable::to_json(Universe& u) const {
  Json j;
  j["univ"] = Json::array();
  j["exist"] = Json::array();
  for (const auto& b : univ) j["univ"].push_back(b.name);
  for (const auto& b : exist) j["exist"].push_back(b.name);
  j["rows"] = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["x"] = Json::array();
    for (size_t i = 0; i < row.x.size(); ++i) r["x"].push_back(u.to_json(u.info(univ[i].type), row.x[i]));
    r["ys"] = Json::array();
    for (const auto& y : row.ys) {
      Json tuple = Json::array();
      for (size_t i = 0; i < y.size(); ++i) tuple.push_back(u.to_json(u.info(exist[i].type), y[i]));
      r["ys"].push_back(tuple);
    }
    j["rows"].push_back(r);
  }
  j["parameter_assignments"] = params.size();
  return j;
}

}  // namespace stnf
