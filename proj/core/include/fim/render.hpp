#ifndef FIM_RENDER_HPP_
#define FIM_RENDER_HPP_

#include <string>  // for string

#include "fim/monogenic.hpp"
#include "fim/munn_tree.hpp"

namespace fim {

  //! A horizontal path with integer vertex labels, the out-vertex drawn as
  //! `*` and every other vertex as `o`:
  //!
  //!     0   1   2   3   4   5
  //!     o---o---*---o---o---o
  std::string munn_ascii(mono::Interval const& m);

  //! One line per vertex in depth-first order, indented by depth; the root
  //! is `1` and the out-vertex carries a trailing `*`.
  std::string munn_ascii(MunnTree const& t);

  //! Graphviz: in-vertex drawn with a double circle, out-vertex filled black.
  std::string munn_dot(mono::Interval const& m);
  std::string munn_dot(MunnTree const& t);

  //! Graphviz rendering of the ball of the Cayley digraph: tree edges solid,
  //! strong edges dashed, transition edges bold and labelled with their
  //! weight. Nodes appear in canonical order, labelled by normal form.
  std::string cayley_dot(int max_size);

}  // namespace fim

#endif  // FIM_RENDER_HPP_
