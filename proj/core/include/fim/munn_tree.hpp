#ifndef FIM_MUNN_TREE_HPP_
#define FIM_MUNN_TREE_HPP_

#include <cstddef>      // for size_t
#include <set>          // for set
#include <string_view>  // for string_view

#include "fim/word.hpp"

namespace fim {

  //! A birooted Munn tree embedded in the Cayley tree of the free group FG(X).
  //!
  //! The tree is stored as its vertex set: a finite prefix-closed set of
  //! reduced words containing the empty word (the in-vertex), together with
  //! the out-vertex. Because the tree is embedded, equality of Munn trees as
  //! birooted trees is equality of these sets, and Munn's theorem makes it
  //! equality in FIM(X).
  class MunnTree {
   public:
    using vertex_set = std::set<Word, ShortLex>;

    //! The Munn tree of the empty word.
    explicit MunnTree(Alphabet alphabet);

    //! Throws Error unless the vertices are reduced words over `alphabet`,
    //! contain the empty word, are prefix-closed, and contain `out`.
    MunnTree(Alphabet alphabet, vertex_set vertices, Word out);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    vertex_set const& vertices() const noexcept {
      return _vertices;
    }

    Word const& out() const noexcept {
      return _out;
    }

    std::size_t number_of_edges() const noexcept {
      return _vertices.size() - 1;
    }

    friend bool operator==(MunnTree const&, MunnTree const&) = default;

   private:
    struct unchecked_tag {};
    MunnTree(unchecked_tag, Alphabet alphabet, vertex_set vertices, Word out);

    friend MunnTree munn_tree(Alphabet const&, Word const&);
    friend MunnTree operator*(MunnTree const&, MunnTree const&);
    friend MunnTree inverse(MunnTree const&);

    Alphabet   _alphabet;
    vertex_set _vertices;
    Word       _out;
  };

  //! Traces `w` through the Cayley tree of FG(X).
  MunnTree munn_tree(Alphabet const& alphabet, Word const& w);

  MunnTree munn_tree(Alphabet const& alphabet, std::string_view text);

  //! Product in FIM(X): vertices(u) together with out(u)·vertices(v), and
  //! out-vertex out(u)·out(v). Throws Error if the alphabets differ.
  MunnTree operator*(MunnTree const& u, MunnTree const& v);

  //! Translate by out(u)^-1 and swap the roots.
  MunnTree inverse(MunnTree const& u);

  //! Word problem for FIM(X): u = v iff MT(u) = MT(v).
  bool fim_equal(Alphabet const& alphabet, Word const& u, Word const& v);

  inline bool is_idempotent(MunnTree const& u) noexcept {
    return u.out().empty();
  }

  //! Green's R-relation: equal trees when out-vertices are ignored.
  inline bool r_related(MunnTree const& u, MunnTree const& v) noexcept {
    return u.alphabet() == v.alphabet() && u.vertices() == v.vertices();
  }

}  // namespace fim

#endif  // FIM_MUNN_TREE_HPP_
