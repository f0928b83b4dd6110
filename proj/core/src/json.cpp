#include "fim/json.hpp"

#include "fim/error.hpp"

namespace fim {

  void to_json(nlohmann::json& j, MunnTree const& t) {
    auto vertices = nlohmann::json::array();
    for (auto const& v : t.vertices()) {
      vertices.push_back(to_string(t.alphabet(), v));
    }
    j = nlohmann::json{{"vertices", std::move(vertices)},
                       {"out", to_string(t.alphabet(), t.out())}};
  }

  MunnTree munn_tree_from_json(Alphabet const&       alphabet,
                               nlohmann::json const& j) {
    try {
      MunnTree::vertex_set vertices;
      for (auto const& v : j.at("vertices")) {
        vertices.insert(parse_word(alphabet, v.get<std::string>()));
      }
      return MunnTree(alphabet,
                      std::move(vertices),
                      parse_word(alphabet, j.at("out").get<std::string>()));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed Munn tree JSON: ") + e.what());
    }
  }

  namespace mono {
    void to_json(nlohmann::json& j, Interval const& m) {
      j = nlohmann::json{{"a", m.a}, {"b", m.b}, {"t", m.t}};
    }

    void from_json(nlohmann::json const& j, Interval& m) {
      m = Interval::make(
          j.at("a").get<int>(), j.at("b").get<int>(), j.at("t").get<int>());
    }

    void to_json(nlohmann::json& j, NormalForm const& f) {
      j = nlohmann::json{{"type", f.type == NfType::I ? "I" : "II"},
                         {"n", f.n},
                         {"k", f.k}};
      if (f.type == NfType::II) {
        j["j"] = f.j;
      }
    }

    void from_json(nlohmann::json const& j, NormalForm& f) {
      auto type = j.at("type").get<std::string>();
      if (type == "I") {
        f = NormalForm::type_i(j.at("n").get<int>(), j.at("k").get<int>());
      } else if (type == "II") {
        f = NormalForm::type_ii(j.at("n").get<int>(),
                                j.at("k").get<int>(),
                                j.at("j").get<int>());
      } else {
        throw ParseError("normal form type must be \"I\" or \"II\", got \""
                         + type + "\"");
      }
    }
  }  // namespace mono

  namespace cayley {
    void to_json(nlohmann::json& j, EdgeRef const& e) {
      j = nlohmann::json{{"source", mono::nf_string(e.source)},
                         {"gen", std::string(1, mono::symbol(e.gen))}};
    }

    nlohmann::json edge_list_json(std::vector<ClassifiedEdge> const& edges) {
      auto result = nlohmann::json::array();
      for (auto const& [e, cls] : edges) {
        nlohmann::json entry = e;
        entry["class"]       = std::string(to_string(cls.kind));
        if (cls.kind == EdgeKind::transition) {
          entry["weight"] = cls.weight;
        }
        result.push_back(std::move(entry));
      }
      return result;
    }
  }  // namespace cayley

  namespace homology {
    void to_json(nlohmann::json& j, HomologyVector const& v) {
      j = nlohmann::json::array();
      for (auto const& [e, c] : v) {
        j.push_back({{"edge", e}, {"coeff", c}, {"weight", weight(e)}});
      }
    }
  }  // namespace homology

}  // namespace fim
