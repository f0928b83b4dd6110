#include "fim/munn_tree.hpp"

#include <utility>  // for move

#include "fim/error.hpp"

namespace fim {

  MunnTree::MunnTree(Alphabet alphabet)
      : _alphabet(std::move(alphabet)), _vertices{Word{}}, _out() {}

  MunnTree::MunnTree(unchecked_tag,
                     Alphabet   alphabet,
                     vertex_set vertices,
                     Word       out)
      : _alphabet(std::move(alphabet)),
        _vertices(std::move(vertices)),
        _out(std::move(out)) {}

  MunnTree::MunnTree(Alphabet alphabet, vertex_set vertices, Word out)
      : MunnTree(unchecked_tag{},
                 std::move(alphabet),
                 std::move(vertices),
                 std::move(out)) {
    if (!_vertices.contains(Word{})) {
      throw Error("a Munn tree must contain the empty word");
    }
    if (!_vertices.contains(_out)) {
      throw Error("the out-vertex of a Munn tree must be one of its vertices");
    }
    for (auto const& v : _vertices) {
      _alphabet.validate(v);
      if (!is_reduced(v)) {
        throw Error("Munn tree vertex " + to_string(_alphabet, v)
                    + " is not reduced");
      }
      if (!v.empty() && !_vertices.contains(Word(v.begin(), v.end() - 1))) {
        throw Error("Munn tree vertex set is not prefix-closed at "
                    + to_string(_alphabet, v));
      }
    }
  }

  MunnTree munn_tree(Alphabet const& alphabet, Word const& w) {
    alphabet.validate(w);
    MunnTree::vertex_set vertices{Word{}};
    Word                 position;
    for (auto const& l : w) {
      if (!position.empty() && position.back() == inverse(l)) {
        position.pop_back();
      } else {
        position.push_back(l);
        vertices.insert(position);
      }
    }
    return MunnTree(MunnTree::unchecked_tag{},
                    alphabet,
                    std::move(vertices),
                    std::move(position));
  }

  MunnTree munn_tree(Alphabet const& alphabet, std::string_view text) {
    return munn_tree(alphabet, parse_word(alphabet, text));
  }

  MunnTree operator*(MunnTree const& u, MunnTree const& v) {
    if (!(u.alphabet() == v.alphabet())) {
      throw Error("cannot multiply Munn trees over different alphabets \""
                  + u.alphabet().generators() + "\" and \""
                  + v.alphabet().generators() + "\"");
    }
    auto vertices = u.vertices();
    for (auto const& w : v.vertices()) {
      vertices.insert(multiply_reduced(u.out(), w));
    }
    return MunnTree(MunnTree::unchecked_tag{},
                    u.alphabet(),
                    std::move(vertices),
                    multiply_reduced(u.out(), v.out()));
  }

  MunnTree inverse(MunnTree const& u) {
    auto                 shift = formal_inverse(u.out());
    MunnTree::vertex_set vertices;
    for (auto const& w : u.vertices()) {
      vertices.insert(multiply_reduced(shift, w));
    }
    return MunnTree(
        MunnTree::unchecked_tag{}, u.alphabet(), std::move(vertices), shift);
  }

  bool fim_equal(Alphabet const& alphabet, Word const& u, Word const& v) {
    return munn_tree(alphabet, u) == munn_tree(alphabet, v);
  }

}  // namespace fim
