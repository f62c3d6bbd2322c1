#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppalg/exchange.hpp"
#include "ppalg/gfan.hpp"
#include "ppalg/mutation.hpp"
#include "ppalg/parallel.hpp"
#include "ppalg/right_ideal.hpp"
#include "ppalg/tau.hpp"
#include "ppalg/weyl.hpp"

namespace ppalg {

struct VerifyOptions {
  bool exhaustive = true;
  uint64_t seed = 0x00c0ffee;
  int jobs = 1;
  int samples = 200;
};

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> results;
  bool all_pass() const {
    for (const auto& [n, ok] : results)
      if (!ok) return false;
    return true;
  }
};

/// A random reduced word for w, produced by peeling left descents in a
/// random order. Any descent sequence yields a reduced word.
inline std::vector<int> random_reduced_word(const WeylGroup& W,
                                            const WeylElement& w,
                                            std::mt19937_64& rng) {
  std::vector<int> word;
  WeylElement g = w;
  while (g.length > 0) {
    auto d = W.left_descents(g);
    int i = d[rng() % d.size()];
    word.push_back(i);
    g = W.s_times(i, g);
  }
  return word;
}

template <class F>
VerifyReport run_verification(const DynkinQuiver& q, const VerifyOptions& opt) {
  WeylGroup W(q);
  auto en = W.enumerate();
  Algebra<F> A(q);
  IdealCalculus<F> calc(A);
  IdealTable<F> table(calc, W, en);
  size_t m = en.elements.size();
  std::vector<ModuleRep<F>> reps(m);
  parallel_for(m, opt.jobs, [&](size_t k) {
    reps[k] = calc.rep_of(table.at(static_cast<int>(k)));
  });
  WeylElement w0 = W.longest_element(en);

  std::mt19937_64 rng(opt.seed);
  std::vector<size_t> picks;
  if (opt.exhaustive) {
    for (size_t k = 0; k < m; ++k) picks.push_back(k);
  } else {
    for (int t = 0; t < opt.samples; ++t) picks.push_back(rng() % m);
  }

  VerifyReport rep;
  auto add = [&](const std::string& name, bool ok) {
    rep.results.push_back({name, ok});
  };

  {  // braid-invariance: ideals agree across independent reduced words
    std::vector<char> ok(picks.size(), 1);
    std::vector<std::vector<int>> words;
    for (size_t k : picks)
      words.push_back(random_reduced_word(W, en.elements[k], rng));
    parallel_for(picks.size(), opt.jobs, [&](size_t t) {
      if (!(calc.ideal_of_word(words[t]) == table.at(static_cast<int>(picks[t]))))
        ok[t] = 0;
    });
    bool all = true;
    for (char c : ok) all = all && c;
    add("braid-invariance", all);
  }

  {  // tau-rigidity and the pair invariants
    std::vector<char> ok(picks.size(), 1);
    parallel_for(picks.size(), opt.jobs, [&](size_t t) {
      size_t k = picks[t];
      const ModuleRep<F>& X = reps[k];
      if (!is_tau_rigid(X)) {
        ok[t] = 0;
        return;
      }
      int summands = 0;
      for (int i = 1; i <= A.n(); ++i) {
        if (calc.slice(i, table.at(static_cast<int>(k))).dim() > 0) {
          ++summands;
          continue;
        }
        ModuleRep<F> P = projective_rep(A, A.nakayama(i));
        if (!hom_basis(P, X).empty()) ok[t] = 0;
      }
      int projectors = A.n() - summands;
      if (summands + projectors != A.n()) ok[t] = 0;
    });
    bool all = true;
    for (char c : ok) all = all && c;
    add("tau-rigidity", all);
  }

  {  // order-isomorphism: u <=_L w iff Fac I_u contains Fac I_w
    std::vector<std::pair<size_t, size_t>> pairs;
    if (opt.exhaustive) {
      for (size_t u = 0; u < m; ++u)
        for (size_t w = 0; w < m; ++w) pairs.push_back({u, w});
    } else {
      for (int t = 0; t < opt.samples; ++t)
        pairs.push_back({rng() % m, rng() % m});
    }
    std::vector<char> ok(pairs.size(), 1);
    parallel_for(pairs.size(), opt.jobs, [&](size_t t) {
      auto [u, w] = pairs[t];
      bool order = W.weak_leq(en.elements[u], en.elements[w]);
      if (order != fac_leq(reps[w], reps[u])) ok[t] = 0;
    });
    bool all = true;
    for (char c : ok) all = all && c;
    add("order-isomorphism", all);
  }

  {  // g-agreement: minimal presentations vs reflection matrices
    std::vector<char> ok(picks.size(), 1);
    parallel_for(picks.size(), opt.jobs, [&](size_t t) {
      size_t k = picks[t];
      if (g_matrix_presentations(calc, table.at(static_cast<int>(k))) !=
          en.elements[k].star)
        ok[t] = 0;
    });
    bool all = true;
    for (char c : ok) all = all && c;
    add("g-agreement", all);
  }

  {  // chamber-disjointness: no wall hits, distinct sign vectors, det parity
    ChamberFan fan = chamber_fan(W, en);
    bool all = true;
    std::set<std::vector<int>> signsets;
    for (const Chamber& c : fan.chambers) {
      for (int s : c.signs)
        if (s == 0) all = false;
      signsets.insert(c.signs);
      int64_t expect = en.elements[c.index].length % 2 == 0 ? 1 : -1;
      if (c.gmat.det() != expect) all = false;
    }
    if (signsets.size() != fan.chambers.size()) all = false;
    add("chamber-disjointness", all);
  }

  {  // annihilator: ann I_w = I_{w^{-1} w0}
    std::vector<char> ok(picks.size(), 1);
    parallel_for(picks.size(), opt.jobs, [&](size_t t) {
      size_t k = picks[t];
      WeylElement u = W.multiply(W.inverse(en.elements[k]), w0);
      if (!(calc.annihilator(reps[k]) == table.at(en.index_of(u)))) ok[t] = 0;
    });
    bool all = true;
    for (char c : ok) all = all && c;
    add("annihilator", all);
  }

  {  // dual-dim: dim I_w + dim I_{w^{-1} w0} = dim Lambda
    bool all = true;
    for (size_t k : picks) {
      WeylElement u = W.multiply(W.inverse(en.elements[k]), w0);
      if (table.at(static_cast<int>(k)).dim() +
              table.at(en.index_of(u)).dim() !=
          A.dim())
        all = false;
    }
    add("dual-dim", all);
  }

  return rep;
}

}  // namespace ppalg
