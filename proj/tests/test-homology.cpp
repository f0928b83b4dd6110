#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "fim/error.hpp"
#include "fim/homology.hpp"
#include "oracles.hpp"

namespace fim::homology {

  using cayley::ball_edges;
  using cayley::classify_edge;
  using cayley::EdgeKind;
  using cayley::tree_path;
  using mono::NormalForm;

  namespace {
    std::vector<EdgeRef> non_tree_edges(int n) {
      std::vector<EdgeRef> result;
      for (auto const& [e, cls] : ball_edges(n)) {
        if (cls.kind != EdgeKind::tree) {
          result.push_back(e);
        }
      }
      return result;
    }

    std::vector<EdgeRef> tree_edges(int n) {
      std::vector<EdgeRef> result;
      for (auto const& [e, cls] : ball_edges(n)) {
        if (cls.kind == EdgeKind::tree) {
          result.push_back(e);
        }
      }
      return result;
    }

    HomologyVector random_vector(std::mt19937&               rng,
                                 std::vector<EdgeRef> const& basis) {
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      std::uniform_int_distribution<int>         coeff(-3, 3);
      std::uniform_int_distribution<int>         terms(0, 4);
      HomologyVector                             v;
      for (int i = terms(rng); i > 0; --i) {
        v.add(basis[pick(rng)], coeff(rng));
      }
      return v;
    }

    constexpr EdgeRef strong_e{{0, 1, 0}, Gen::x};
  }  // namespace

  TEST_CASE("chain_of_path: examples", "[homology]") {
    Path back_and_forth(Interval::identity());
    back_and_forth.push({Interval::identity(), Gen::x});
    back_and_forth.push({Interval::identity(), Gen::x}, false);
    REQUIRE(chain_of_path(back_and_forth).empty());

    auto c = chain_of_path(tree_path({0, 2, 2}));
    REQUIRE(c.size() == 2);
    REQUIRE(c.coefficient({{0, 0, 0}, Gen::x}) == 1);
    REQUIRE(c.coefficient({{0, 1, 1}, Gen::x}) == 1);

    // x y -y-> x y^1 ... the two-cycle at n = k = 1.
    Path two(Interval{0, 1, 1});
    two.push({{0, 1, 1}, Gen::y});
    two.push({{0, 1, 0}, Gen::x});
    REQUIRE(two.closed());
    auto d = chain_of_path(two);
    REQUIRE(d.size() == 2);
    REQUIRE(d.coefficient({{0, 1, 1}, Gen::y}) == 1);
    REQUIRE(d.coefficient({{0, 1, 0}, Gen::x}) == 1);

    Path bad(Interval::identity(), {{{Interval{0, 1, 1}, Gen::x}, true}});
    REQUIRE_THROWS_AS(chain_of_path(bad), Error);
  }

  TEST_CASE("boundary and augment: examples", "[homology]") {
    OneChain c;
    c.add({Interval::identity(), Gen::x}, 1);
    auto d = boundary(c);
    REQUIRE(d.size() == 2);
    REQUIRE(d.coefficient({0, 1, 1}) == 1);
    REQUIRE(d.coefficient({0, 0, 0}) == -1);
    REQUIRE(boundary(OneChain{}).empty());

    ZeroChain v;
    v.add(Interval::identity(), 1);
    REQUIRE(augment(v) == 1);
    REQUIRE(augment(ZeroChain{}) == 0);
  }

  TEST_CASE("augment of boundary vanishes", "[homology][property]") {
    auto edges = ball_edges(8);
    for (auto const& [e, cls] : edges) {
      OneChain c;
      c.add(e, 1);
      REQUIRE(augment(boundary(c)) == 0);
    }
    std::mt19937                               rng(oracle::seed);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::uniform_int_distribution<int>         coeff(-5, 5);
    std::uniform_int_distribution<int>         terms(1, 20);
    for (int trial = 0; trial < 1000; ++trial) {
      OneChain c;
      for (int i = terms(rng); i > 0; --i) {
        c.add(edges[pick(rng)].first, coeff(rng));
      }
      REQUIRE(augment(boundary(c)) == 0);
    }
  }

  TEST_CASE("boundary of closed and open paths", "[homology][property]") {
    for (auto const& v : mono::enumerate_ball(6)) {
      auto p = tree_path(v);
      REQUIRE(boundary(chain_of_path(p)).empty() == (v == Interval::identity()));
      auto loop = p;
      loop.append(p.reversed());
      REQUIRE(boundary(chain_of_path(loop)).empty());
    }
    for (auto const& e : non_tree_edges(6)) {
      REQUIRE(boundary(chain_of_path(basis_cycle(e))).empty());
    }
  }

  TEST_CASE("basis_cycle: examples", "[homology]") {
    auto p = basis_cycle(strong_e);
    REQUIRE(p.length() == 4);
    REQUIRE(p.closed());
    REQUIRE(p.start() == Interval::identity());
    REQUIRE(p.steps()[2] == cayley::PathStep{strong_e, true});
    REQUIRE(!p.steps()[3].forward);

    // Normal forms x^1 y^2 x^2 and x^2 y^3 x^3: 5 + 1 + 8 steps.
    EdgeRef t{{-1, 1, 1}, Gen::x};
    auto    q = basis_cycle(t);
    REQUIRE(q.length() == 14);
    REQUIRE(q.closed());
    REQUIRE(q.steps()[5] == cayley::PathStep{t, true});

    REQUIRE_THROWS_AS(basis_cycle({Interval::identity(), Gen::x}), Error);
  }

  TEST_CASE("homology_of_path: basis cycles give unit vectors",
            "[homology][property]") {
    auto basis = non_tree_edges(6);
    REQUIRE(!basis.empty());
    for (auto const& e : basis) {
      REQUIRE(homology_of_path(basis_cycle(e)) == HomologyVector::unit(e));
    }
    REQUIRE(homology_of_path(Path(Interval::identity())).empty());
    REQUIRE_THROWS_AS(homology_of_path(tree_path({0, 1, 1})), Error);
  }

  TEST_CASE("homology_of_path: additive under concatenation",
            "[homology][property]") {
    auto          basis = non_tree_edges(6);
    std::mt19937  rng(oracle::seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto e = basis[pick(rng)];
      auto f = basis[pick(rng)];
      auto p = basis_cycle(e);
      auto q = basis_cycle(f);
      auto pq = p;
      pq.append(q);
      REQUIRE(homology_of_path(pq) == homology_of_path(p) + homology_of_path(q));
      REQUIRE(homology_of_path(q.reversed()) == -1 * homology_of_path(q));
    }
  }

  TEST_CASE("homology_of_path: closed paths inside one component",
            "[homology]") {
    // x^2 y -x-> x^2 -y-> x^2 y, then around x^2 y^2.
    Path p(Interval{0, 2, 1});
    p.push({{0, 2, 1}, Gen::x});
    p.push({{0, 2, 2}, Gen::y});
    p.push({{0, 2, 1}, Gen::y});
    p.push({{0, 2, 0}, Gen::x});
    REQUIRE(p.closed());
    auto v = homology_of_path(p);
    REQUIRE(!v.empty());
    REQUIRE(max_weight(v) == 0);
  }

  TEST_CASE("translate_path: examples", "[homology]") {
    auto p = translate_path(Gen::x, tree_path({0, 1, 1}));
    REQUIRE(p.start() == Interval{0, 1, 1});
    REQUIRE(p.length() == 1);
    REQUIRE(p.steps()[0].edge == EdgeRef{{0, 1, 1}, Gen::x});
    REQUIRE(p.end() == Interval{0, 2, 2});

    Path q(Interval{0, 2, 1}, {{{{0, 2, 1}, Gen::y}, true}});
    auto r = translate_path(Gen::y, q);
    REQUIRE(r.steps()[0].edge == EdgeRef{{-1, 1, 0}, Gen::y});

    for (auto const& e : non_tree_edges(5)) {
      for (auto z : mono::generators) {
        auto t = translate_path(z, basis_cycle(e));
        REQUIRE(t.well_formed());
        REQUIRE(t.closed());
      }
    }
  }

  TEST_CASE("act: examples", "[homology]") {
    REQUIRE(act(Gen::x, HomologyVector::unit(transition_edge(0, 2)))
            == HomologyVector::unit(transition_edge(1, 2)));
    auto v = act(Gen::x, HomologyVector::unit(transition_edge(0, 1)));
    REQUIRE(max_weight(v).value_or(0) == 0);
    for (auto z : mono::generators) {
      REQUIRE(act(z, HomologyVector{}).empty());
    }
  }

  TEST_CASE("act agrees with translated cycles", "[homology][oracle]") {
    // The translated cycle and the chain rebuilt from the coordinates of the
    // action are both cycles; their difference lies on tree edges, hence is
    // zero.
    for (auto const& e : non_tree_edges(6)) {
      for (auto z : mono::generators) {
        auto direct = chain_of_path(translate_path(z, basis_cycle(e)));
        REQUIRE(oracle::chain_from_basis(act(z, HomologyVector::unit(e)))
                == direct);
      }
    }
  }

  TEST_CASE("act: additivity and the left action law", "[homology][property]") {
    auto         basis = non_tree_edges(6);
    std::mt19937 rng(oracle::seed);
    for (int trial = 0; trial < 200; ++trial) {
      auto u = random_vector(rng, basis);
      auto v = random_vector(rng, basis);
      for (auto z : mono::generators) {
        REQUIRE(act(z, u + v) == act(z, u) + act(z, v));
      }
      auto w1 = oracle::random_word(rng, 3);
      auto w2 = oracle::random_word(rng, 3);
      auto w  = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      REQUIRE(act_word(w, v) == act_word(w1, act_word(w2, v)));
      REQUIRE(act_word({}, v) == v);
      REQUIRE(act_word({Gen::x, Gen::y}, v) == act(Gen::x, act(Gen::y, v)));
    }
  }

  TEST_CASE("act_word keeps transition vectors in their filtration level",
            "[homology][property]") {
    for (int k = 1; k <= 6; ++k) {
      for (int n = 0; n < k; ++n) {
        auto b = HomologyVector::unit(transition_edge(n, k));
        for (auto const& w : {mono::parse_word("yy"),
                              mono::parse_word("xy"),
                              mono::parse_word("yxx")}) {
          REQUIRE(max_weight(act_word(w, b)).value_or(0) <= k);
        }
      }
    }
  }

  TEST_CASE("weight and max_weight: examples", "[homology]") {
    REQUIRE(weight({{0, 2, 1}, Gen::x}) == 0);
    REQUIRE(weight({{-1, 1, 1}, Gen::x}) == 2);
    REQUIRE(weight({mono::parse_element("x^0 y^1 x^1"), Gen::x}) == 1);
    REQUIRE_THROWS_AS(weight({Interval::identity(), Gen::x}), Error);

    REQUIRE(!max_weight(HomologyVector{}).has_value());
    for (int k = 1; k <= 8; ++k) {
      REQUIRE(max_weight(HomologyVector::unit(transition_edge(k - 1, k))) == k);
    }
    auto v = HomologyVector::unit(strong_e) + HomologyVector::unit(transition_edge(1, 3));
    REQUIRE(max_weight(v) == 3);
    REQUIRE(v.begin()->first == strong_e);
  }

  TEST_CASE("HomologyVector rejects tree edges", "[homology]") {
    REQUIRE_THROWS_AS(HomologyVector::unit({Interval::identity(), Gen::y}), Error);
    HomologyVector v;
    REQUIRE_THROWS_AS(v.add({{0, 1, 1}, Gen::y}, 1), Error);
    v.add(strong_e, 2);
    v.add(strong_e, -2);
    REQUIRE(v.empty());
  }

  TEST_CASE("transition_edge", "[homology]") {
    REQUIRE(transition_edge(0, 1) == EdgeRef{{-1, 0, 0}, Gen::x});
    REQUIRE(transition_edge(1, 2) == EdgeRef{{-1, 1, 1}, Gen::x});
    for (int k = 1; k <= 6; ++k) {
      for (int n = 0; n < k; ++n) {
        auto e = transition_edge(n, k);
        REQUIRE(classify_edge(e) == cayley::EdgeClass{EdgeKind::transition, k});
        REQUIRE(mono::normal_form(e.source) == NormalForm::type_ii(n, k, k));
      }
    }
    REQUIRE_THROWS_AS(transition_edge(2, 2), Error);
    REQUIRE_THROWS_AS(transition_edge(-1, 2), Error);
  }

  TEST_CASE("tree-only chains have nonzero boundary", "[homology][oracle]") {
    auto tree = tree_edges(6);
    REQUIRE(tree.size() == mono::enumerate_ball(6).size() - 1);
    std::mt19937                               rng(oracle::seed);
    std::uniform_int_distribution<std::size_t> pick(0, tree.size() - 1);
    std::uniform_int_distribution<int>         coeff(-3, 3);
    OneChain                                   all;
    for (auto const& e : tree) {
      all.add(e, 1);
    }
    REQUIRE(oracle::strips_to_zero(all));
    for (int trial = 0; trial < 500; ++trial) {
      OneChain c;
      for (int i = 0; i < 6; ++i) {
        c.add(tree[pick(rng)], coeff(rng));
      }
      if (c.empty()) {
        continue;
      }
      REQUIRE(oracle::strips_to_zero(c));
      REQUIRE(!boundary(c).empty());
    }
    // Sanity check of the oracle itself: a cycle does not strip.
    REQUIRE(!oracle::strips_to_zero(chain_of_path(basis_cycle(strong_e))));
  }

  TEST_CASE("verify_w0", "[homology][verify]") {
    auto r = verify_w0(8);
    REQUIRE(r.pass);
    REQUIRE(r.failures == 0);
    REQUIRE(verify_w0(2).pass);
    REQUIRE_THROWS_AS(verify_w0(1), Error);
  }

  TEST_CASE("verify_filtration", "[homology][verify]") {
    auto r = verify_filtration(12);
    REQUIRE(r.pass);
    REQUIRE(r.checked == 78);
    REQUIRE(r.stats["actions"] == 156);
    auto one = verify_filtration(1);
    REQUIRE(one.pass);
    REQUIRE(one.checked == 1);
    REQUIRE_THROWS_AS(verify_filtration(0), Error);

    // k = 1, n = 0, z = y: ye is a tree edge and the weight stays <= 1.
    auto e = transition_edge(0, 1);
    REQUIRE(classify_edge({mono::left_mult(Gen::y, e.source), Gen::x}).kind
            == EdgeKind::tree);
    REQUIRE(max_weight(act(Gen::y, HomologyVector::unit(e))).value_or(0) <= 1);
    // k = 3, n = 1, z = x: exactly the transition edge at (2, 3).
    REQUIRE(act(Gen::x, HomologyVector::unit(transition_edge(1, 3)))
            == HomologyVector::unit(transition_edge(2, 3)));
  }

  TEST_CASE("verify_strictness", "[homology][verify]") {
    auto r = verify_strictness(12);
    REQUIRE(r.pass);
    REQUIRE(r.stats["witnesses"].size() == 12);
    REQUIRE(r.stats["witnesses"][0] == "y^1 x^1:x");
    REQUIRE(verify_strictness(1).pass);
    REQUIRE_THROWS_AS(verify_strictness(0), Error);
  }

  TEST_CASE("verify_transition_basis", "[homology][verify]") {
    auto r = verify_transition_basis(10);
    REQUIRE(r.pass);
    REQUIRE(r.checked == 55);
    REQUIRE(verify_transition_basis(1).pass);
  }

  TEST_CASE("rank_check", "[homology][verify]") {
    for (int n = 0; n <= 8; ++n) {
      auto r = rank_check(n);
      REQUIRE(r.pass);
      REQUIRE(r.stats["vertices"] == mono::ball_count(n));
    }
    REQUIRE(rank_check(0).stats["edges"] == 0);
    auto r1 = rank_check(1);
    REQUIRE(r1.stats["vertices"] == 5);
    REQUIRE(r1.stats["edges"] == 6);
    REQUIRE(r1.stats["non_tree_edges"] == 2);
    auto r8 = rank_check(8);
    REQUIRE(r8.stats["vertices"] == 285);
    REQUIRE(r8.stats["edges"] == 552);
    REQUIRE(r8.stats["non_tree_edges"] == 268);
    REQUIRE_THROWS_AS(rank_check(-1), Error);
  }

}  // namespace fim::homology
