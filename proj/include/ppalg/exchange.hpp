#pragma once

#include <array>
#include <string>
#include <vector>

#include "ppalg/right_ideal.hpp"
#include "ppalg/weyl.hpp"

namespace ppalg {

/// Exchange quiver of support tau-tilting pairs: one vertex per Weyl
/// element, one arrow per left mutation (w -> s_i w with the length
/// going up and Fac going down). As a labeled digraph it is the
/// opposite of the weak-order Hasse quiver.
struct ExchangeQuiver {
  struct Vertex {
    std::string word;
    std::vector<int> dim_vector;
    std::vector<int> projectors;  // vertices i with e_i I_w = 0
    int length = 0;
  };
  std::vector<Vertex> vertices;          // enumeration order
  std::vector<std::array<int, 3>> edges; // from, to, mutation vertex
};

template <class F>
ExchangeQuiver exchange_quiver(const WeylGroup& W,
                               const WeylGroup::Enumeration& en,
                               const IdealCalculus<F>& calc,
                               const IdealTable<F>& table) {
  ExchangeQuiver x;
  for (size_t k = 0; k < en.elements.size(); ++k) {
    ExchangeQuiver::Vertex v;
    v.word = en.elements[k].word_string();
    v.length = en.elements[k].length;
    ModuleRep<F> m = calc.rep_of(table.at(static_cast<int>(k)));
    v.dim_vector = m.dim_vector();
    for (int i = 1; i <= W.rank(); ++i)
      if (calc.slice(i, table.at(static_cast<int>(k))).dim() == 0)
        v.projectors.push_back(i);
    x.vertices.push_back(std::move(v));
  }
  for (size_t k = 0; k < en.elements.size(); ++k)
    for (int i = 1; i <= W.rank(); ++i) {
      if (W.is_left_descent(en.elements[k], i)) continue;
      WeylElement t = W.s_times(i, en.elements[k]);
      x.edges.push_back({static_cast<int>(k), en.index_of(t), i});
    }
  return x;
}

/// Torsion classes: every torsion class is Fac I_w for a unique w, so
/// the list of generators (one module per Weyl element) represents the
/// full torsion lattice; ordering and meets live in fac_leq.
template <class F>
std::vector<std::pair<int, ModuleRep<F>>> torsion_classes(
    const WeylGroup::Enumeration& en, const IdealCalculus<F>& calc,
    const IdealTable<F>& table) {
  std::vector<std::pair<int, ModuleRep<F>>> out;
  for (size_t k = 0; k < en.elements.size(); ++k)
    out.push_back({static_cast<int>(k), calc.rep_of(table.at(static_cast<int>(k)))});
  return out;
}

}  // namespace ppalg
