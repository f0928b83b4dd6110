#ifndef FIM_CAYLEY_HPP_
#define FIM_CAYLEY_HPP_

// The right Cayley digraph of M with respect to {x, y}, its spanning tree T
// of normal-form words, and the classification of its arcs.

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "fim/monogenic.hpp"
#include "fim/report.hpp"

namespace fim::cayley {

  using mono::Gen;
  using mono::Interval;

  //! The arc from `source` to source·gen. Arcs are identified by source and
  //! label, never by their endpoints.
  struct EdgeRef {
    Interval source;
    Gen      gen = Gen::x;

    Interval target() const noexcept {
      return mono::right_mult(source, gen);
    }

    friend bool operator==(EdgeRef const&, EdgeRef const&) = default;
    friend std::strong_ordering operator<=>(EdgeRef const&, EdgeRef const&)
        = default;
  };

  //! "<normal form>:<gen>", e.g. "x^1 y^2 x^2:x".
  std::string to_string(EdgeRef const& e);

  //! Inverse of to_string; the part before the last ':' may be any word.
  EdgeRef parse_edge(std::string_view text);

  enum class EdgeKind { tree, strong, transition };

  std::string_view to_string(EdgeKind k) noexcept;

  struct EdgeClass {
    EdgeKind kind   = EdgeKind::tree;
    //! Size of the source for transition edges, 0 otherwise.
    int      weight = 0;

    friend bool operator==(EdgeClass const&, EdgeClass const&) = default;
  };

  //! Classification read off the normal form of the source:
  //!   tree:       x^n --x-->, x^n y^k --y-->, x^n y^k x^j --x--> with j < k
  //!   strong:     x^n y^k --x--> with 0 < k <= n,
  //!               x^n y^k x^j --y--> with 0 < j <= k
  //!   transition: x^n y^k x^k --x--> x^(n+1) y^(k+1) x^(k+1), weight k.
  EdgeClass classify_edge(EdgeRef const& e) noexcept;

  struct SccKey {
    int a = 0;
    int b = 0;

    friend bool operator==(SccKey const&, SccKey const&) = default;
    friend std::strong_ordering operator<=>(SccKey const&, SccKey const&)
        = default;
  };

  //! Two elements lie in the same strongly connected component of the
  //! Cayley digraph iff their Munn trees agree up to the out-vertex.
  constexpr SccKey scc_key(Interval const& m) noexcept {
    return SccKey{m.a, m.b};
  }

  //! True iff the endpoints of `e` lie in different strongly connected
  //! components. Unlike EdgeKind::transition this includes tree edges.
  inline bool is_transition(EdgeRef const& e) noexcept {
    return scc_key(e.source) != scc_key(e.target());
  }

  struct PathStep {
    EdgeRef edge;
    bool    forward = true;

    friend bool operator==(PathStep const&, PathStep const&) = default;
  };

  //! A path in the Cayley digraph that may traverse arcs in either direction.
  class Path {
   public:
    Path() = default;
    explicit Path(Interval start) : _start(start) {}
    Path(Interval start, std::vector<PathStep> steps)
        : _start(start), _steps(std::move(steps)) {}

    Interval start() const noexcept {
      return _start;
    }

    std::vector<PathStep> const& steps() const noexcept {
      return _steps;
    }

    std::size_t length() const noexcept {
      return _steps.size();
    }

    bool empty() const noexcept {
      return _steps.empty();
    }

    //! Every step leaves from the vertex where the previous one ended.
    bool well_formed() const noexcept;

    //! Throws Error if the path is not well formed.
    Interval end() const;

    bool closed() const {
      return end() == _start;
    }

    //! Traverses the path backwards, flipping every direction flag.
    Path reversed() const;

    //! Steps along `e` forwards from end() (or backwards if `forward` is
    //! false). Throws Error if `e` is not incident at end().
    Path& push(EdgeRef const& e, bool forward = true);

    //! Appends `other`; throws Error if it does not start at end().
    Path& append(Path const& other);

    friend bool operator==(Path const&, Path const&) = default;

   private:
    Interval              _start;
    std::vector<PathStep> _steps;
  };

  //! The path [1, v] in T: forward arcs spelling nf_word(normal_form(v)).
  Path tree_path(Interval const& v);

  //! The geodesic [v, w] in T: backwards from v to the vertex spelled by the
  //! longest common prefix of the two normal-form words, then forwards to w.
  Path geodesic(Interval const& v, Interval const& w);

  using ClassifiedEdge = std::pair<EdgeRef, EdgeClass>;

  //! Every arc whose source and target both have size at most `max_size`,
  //! in canonical order.
  std::vector<ClassifiedEdge> ball_edges(int max_size);

  //! Cross-checks classify_edge against definitions that do not use the
  //! normal-form patterns: tree iff the target's normal-form word extends
  //! the source's by one letter, strong iff the endpoints share an scc_key,
  //! transition otherwise with weight equal to the source size.
  VerificationReport verify_classification(int max_size);

}  // namespace fim::cayley

#endif  // FIM_CAYLEY_HPP_
