#ifndef FIM_HOMOLOGY_HPP_
#define FIM_HOMOLOGY_HPP_

// Chains on the Cayley digraph, the augmented complex C_1 -> C_0 -> Z, the
// basis {b_e} of H_1 indexed by arcs outside the spanning tree, and the left
// action of M on H_1 by translating cycles.

#include <cstdint>     // for int64_t
#include <functional>  // for less
#include <map>         // for map
#include <optional>    // for optional

#include "fim/cayley.hpp"
#include "fim/monogenic.hpp"
#include "fim/report.hpp"

namespace fim::homology {

  using cayley::EdgeRef;
  using cayley::Path;
  using mono::Gen;
  using mono::Interval;
  using mono::MonoWord;

  using Coeff = std::int64_t;

  //! Finitely supported integer combination; zero coefficients are never
  //! stored.
  template <typename Key, typename Compare = std::less<Key>>
  class LinearCombination {
   public:
    using map_type       = std::map<Key, Coeff, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    void add(Key const& key, Coeff c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    Coeff coefficient(Key const& key) const {
      auto it = _terms.find(key);
      return it == _terms.end() ? 0 : it->second;
    }

    bool contains(Key const& key) const {
      return _terms.contains(key);
    }

    bool empty() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    const_iterator begin() const noexcept {
      return _terms.begin();
    }

    const_iterator end() const noexcept {
      return _terms.end();
    }

    LinearCombination& operator+=(LinearCombination const& other) {
      for (auto const& [k, c] : other) {
        add(k, c);
      }
      return *this;
    }

    LinearCombination& operator-=(LinearCombination const& other) {
      for (auto const& [k, c] : other) {
        add(k, -c);
      }
      return *this;
    }

    friend LinearCombination operator+(LinearCombination l,
                                       LinearCombination const& r) {
      return l += r;
    }

    friend LinearCombination operator-(LinearCombination l,
                                       LinearCombination const& r) {
      return l -= r;
    }

    friend LinearCombination operator*(Coeff s, LinearCombination const& v) {
      LinearCombination result;
      for (auto const& [k, c] : v) {
        result.add(k, s * c);
      }
      return result;
    }

    friend bool operator==(LinearCombination const& l,
                           LinearCombination const& r) {
      return l._terms == r._terms;
    }

   private:
    map_type _terms;
  };

  //! C_1: integer combinations of arcs.
  using OneChain = LinearCombination<EdgeRef>;

  //! C_0: integer combinations of vertices.
  using ZeroChain = LinearCombination<Interval>;

  //! Throws Error for tree edges, which are not basis elements.
  int weight(EdgeRef const& e);

  //! Orders basis elements by weight, then source, then label.
  struct SupportOrder {
    bool operator()(EdgeRef const& l, EdgeRef const& r) const;
  };

  //! An element of H_1 written in the basis {b_e}; every key is a strong or
  //! transition arc.
  class HomologyVector {
   public:
    using terms_type     = LinearCombination<EdgeRef, SupportOrder>;
    using const_iterator = terms_type::const_iterator;

    HomologyVector() = default;

    //! b_e; throws Error if `e` is a tree edge.
    static HomologyVector unit(EdgeRef const& e);

    //! Throws Error if `e` is a tree edge.
    void add(EdgeRef const& e, Coeff c);

    Coeff coefficient(EdgeRef const& e) const {
      return _terms.coefficient(e);
    }

    bool contains(EdgeRef const& e) const {
      return _terms.contains(e);
    }

    bool empty() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    const_iterator begin() const noexcept {
      return _terms.begin();
    }

    const_iterator end() const noexcept {
      return _terms.end();
    }

    HomologyVector& operator+=(HomologyVector const& other) {
      _terms += other._terms;
      return *this;
    }

    HomologyVector& operator-=(HomologyVector const& other) {
      _terms -= other._terms;
      return *this;
    }

    friend HomologyVector operator+(HomologyVector l, HomologyVector const& r) {
      return l += r;
    }

    friend HomologyVector operator-(HomologyVector l, HomologyVector const& r) {
      return l -= r;
    }

    friend HomologyVector operator*(Coeff s, HomologyVector const& v) {
      HomologyVector result;
      result._terms = s * v._terms;
      return result;
    }

    friend bool operator==(HomologyVector const& l, HomologyVector const& r) {
      return l._terms == r._terms;
    }

   private:
    terms_type _terms;
  };

  //! Coefficient of e is (#forward traversals - #backward traversals).
  //! Throws Error if the path is not well formed.
  OneChain chain_of_path(Path const& p);

  //! d_1: linear extension of e -> target(e) - source(e).
  ZeroChain boundary(OneChain const& c);

  //! The augmentation C_0 -> Z: sum of coefficients.
  Coeff augment(ZeroChain const& c);

  //! [1, source(e)] e [1, target(e)]^-1; throws Error if `e` is a tree edge.
  Path basis_cycle(EdgeRef const& e);

  //! The class of a closed path: its chain restricted to non-tree arcs.
  //! Throws Error if `p` is not closed.
  HomologyVector homology_of_path(Path const& p);

  //! Left translation of a path by a generator.
  Path translate_path(Gen z, Path const& p);

  //! z·v, computed by translating the basis cycle of each term.
  HomologyVector act(Gen z, HomologyVector const& v);

  //! w·v, applying the last letter of `w` first.
  HomologyVector act_word(MonoWord const& w, HomologyVector const& v);

  //! Largest weight in the support, or nullopt for the zero vector. A vector
  //! lies in W_k iff this is at most k.
  std::optional<int> max_weight(HomologyVector const& v);

  //! Source x^n y^k x^k of the weight-k transition arc with parameter n.
  //! Throws Error unless 0 <= n < k.
  EdgeRef transition_edge(int n, int k);

  //! For every strong arc e in the ball and z in {x, y}, z·b_e has weight 0;
  //! also checks that the two-cycle through e represents b_e and that its
  //! translates are closed directed paths of length 2.
  VerificationReport verify_w0(int max_size);

  //! For every transition arc of weight k <= max_weight and z in {x, y},
  //! z·b_e has weight at most k, together with the intermediate facts used
  //! to show it.
  VerificationReport verify_filtration(int max_weight);

  //! For each k <= max_weight there is a basis vector of weight exactly k,
  //! and there are exactly k transition arcs of weight k.
  VerificationReport verify_strictness(int max_weight);

  //! For every transition arc of weight k <= max_weight, the cycle
  //! [x^n, source] e [x^n, target]^-1 has the same chain as the basis cycle,
  //! and both represent b_e.
  VerificationReport verify_transition_basis(int max_weight);

  //! On the subgraph induced by the ball: |E| - |V| + 1 equals the number of
  //! non-tree arcs, and T restricted to the ball has |V| - 1 arcs.
  VerificationReport rank_check(int max_size);

}  // namespace fim::homology

#endif  // FIM_HOMOLOGY_HPP_
