#ifndef FIM_JSON_HPP_
#define FIM_JSON_HPP_

// JSON encodings used by fimtool and its reports.
//
//   MunnTree        {"vertices": [reduced words, ShortLex order], "out": word}
//   Interval        {"a": int, "b": int, "t": int}
//   NormalForm      {"type": "I"|"II", "n": int, "k": int, "j": int}
//                   ("j" only for type II)
//   edge list       [{"source": nf, "gen": "x"|"y", "class": kind,
//                     "weight": int}]  ("weight" only for transition edges)
//   HomologyVector  [{"edge": {"source": nf, "gen": ...}, "coeff": int,
//                     "weight": int}]  in support order

#include <vector>  // for vector

#include <nlohmann/json.hpp>

#include "fim/cayley.hpp"
#include "fim/homology.hpp"
#include "fim/monogenic.hpp"
#include "fim/munn_tree.hpp"

namespace fim {

  void to_json(nlohmann::json& j, MunnTree const& t);

  //! Throws Error (or ParseError) if `j` does not describe a valid tree.
  MunnTree munn_tree_from_json(Alphabet const& alphabet, nlohmann::json const& j);

  namespace mono {
    void to_json(nlohmann::json& j, Interval const& m);
    //! Throws Error for an invalid interval.
    void from_json(nlohmann::json const& j, Interval& m);

    void to_json(nlohmann::json& j, NormalForm const& f);
    //! Throws Error for violated normal-form constraints.
    void from_json(nlohmann::json const& j, NormalForm& f);
  }  // namespace mono

  namespace cayley {
    //! {"source": nf, "gen": "x"|"y"}
    void to_json(nlohmann::json& j, EdgeRef const& e);

    nlohmann::json edge_list_json(std::vector<ClassifiedEdge> const& edges);
  }  // namespace cayley

  namespace homology {
    void to_json(nlohmann::json& j, HomologyVector const& v);
  }  // namespace homology

}  // namespace fim

#endif  // FIM_JSON_HPP_
