#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ppalg/exchange.hpp"
#include "ppalg/gfan.hpp"

namespace ppalg {

inline std::string dot_exchange(const ExchangeQuiver& x) {
  std::ostringstream out;
  out << "digraph exchange {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t k = 0; k < x.vertices.size(); ++k) {
    const auto& v = x.vertices[k];
    out << "  v" << k << " [label=\"w=" << (v.word.empty() ? "e" : v.word)
        << "\\ndim=(";
    for (size_t i = 0; i < v.dim_vector.size(); ++i)
      out << (i ? "," : "") << v.dim_vector[i];
    out << ")";
    if (!v.projectors.empty()) {
      out << "\\nP={";
      for (size_t i = 0; i < v.projectors.size(); ++i)
        out << (i ? "," : "") << v.projectors[i];
      out << "}";
    }
    out << "\"];\n";
  }
  for (const auto& [from, to, i] : x.edges)
    out << "  v" << from << " -> v" << to << " [label=\"" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::json fan_json(const WeylGroup::Enumeration& en,
                               const ChamberFan& fan) {
  nlohmann::json j;
  j["roots"] = fan.positive_roots;
  j["chambers"] = nlohmann::json::array();
  for (const Chamber& c : fan.chambers) {
    nlohmann::json e;
    e["word"] = en.elements[c.index].word_string();
    e["length"] = en.elements[c.index].length;
    nlohmann::json g = nlohmann::json::array();
    for (int r = 0; r < c.gmat.n; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int s = 0; s < c.gmat.n; ++s) row.push_back(c.gmat(r, s));
      g.push_back(row);
    }
    e["g_matrix"] = g;
    e["witness"] = c.witness;
    e["det"] = c.gmat.det();
    j["chambers"].push_back(e);
  }
  return j;
}

inline std::string fan_csv(const WeylGroup::Enumeration& en,
                           const ChamberFan& fan) {
  std::ostringstream out;
  out << "word,length,det\n";
  for (const Chamber& c : fan.chambers) {
    std::string w = en.elements[c.index].word_string();
    for (char& ch : w)
      if (ch == ' ') ch = '.';
    out << (w.empty() ? "e" : w) << "," << en.elements[c.index].length << ","
        << c.gmat.det() << "\n";
  }
  return out.str();
}

template <class F>
nlohmann::json module_json(const ModuleRep<F>& M) {
  nlohmann::json j;
  j["dim_vector"] = M.dims;
  j["actions"] = nlohmann::json::array();
  for (const auto& m : M.act) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    j["actions"].push_back(rows);
  }
  return j;
}

template <class F>
nlohmann::json ideal_json(const RowSpace<F>& I) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < I.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const F& x : I.basis_row(r)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  nlohmann::json j;
  j["dim"] = I.dim();
  j["basis"] = rows;
  return j;
}

}  // namespace ppalg
