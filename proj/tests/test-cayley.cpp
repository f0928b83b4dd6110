#include <algorithm>

#include "catch_amalgamated.hpp"

#include "fim/cayley.hpp"
#include "fim/error.hpp"
#include "oracles.hpp"

namespace fim::cayley {

  using mono::NormalForm;
  using mono::to_interval;

  namespace {
    Interval el(std::string_view s) {
      return mono::parse_element(s);
    }

    std::string spelled(Path const& p) {
      std::string result;
      for (auto const& s : p.steps()) {
        result.push_back(s.forward ? mono::symbol(s.edge.gen)
                                   : static_cast<char>(
                                       mono::symbol(s.edge.gen) - 'a' + 'A'));
      }
      return result;
    }

    bool contains(std::vector<ClassifiedEdge> const& edges,
                  EdgeRef const&                     e,
                  EdgeClass const&                   cls) {
      return std::find(edges.begin(), edges.end(), ClassifiedEdge{e, cls})
             != edges.end();
    }
  }  // namespace

  TEST_CASE("classify_edge: examples", "[cayley]") {
    REQUIRE(classify_edge({{0, 2, 1}, Gen::x}) == EdgeClass{EdgeKind::strong, 0});
    REQUIRE(classify_edge({{0, 0, 0}, Gen::x}) == EdgeClass{EdgeKind::tree, 0});
    REQUIRE(to_interval(NormalForm::type_ii(1, 2, 2)) == Interval{-1, 1, 1});
    REQUIRE(classify_edge({{-1, 1, 1}, Gen::x})
            == EdgeClass{EdgeKind::transition, 2});
  }

  TEST_CASE("classify_edge: the listed tree, strong and transition patterns",
            "[cayley]") {
    for (int n = 0; n <= 6; ++n) {
      // x^n -x-> x^(n+1)
      REQUIRE(classify_edge({el("x^" + std::to_string(n)), Gen::x}).kind
              == EdgeKind::tree);
      for (int k = 0; k <= 6; ++k) {
        // x^n y^k -y-> x^n y^(k+1)
        auto xnyk = el("x^" + std::to_string(n) + "y^" + std::to_string(k));
        REQUIRE(classify_edge({xnyk, Gen::y}).kind == EdgeKind::tree);
        if (0 < k && k <= n) {
          REQUIRE(classify_edge({xnyk, Gen::x}).kind == EdgeKind::strong);
        }
        if (n < k) {
          for (int j = 0; j <= k; ++j) {
            auto m = to_interval(NormalForm::type_ii(n, k, j));
            auto x = classify_edge({m, Gen::x});
            if (j < k) {
              REQUIRE(x.kind == EdgeKind::tree);
            } else {
              REQUIRE(x == EdgeClass{EdgeKind::transition, k});
              REQUIRE(EdgeRef{m, Gen::x}.target()
                      == to_interval(NormalForm::type_ii(n + 1, k + 1, k + 1)));
            }
            if (j > 0) {
              REQUIRE(classify_edge({m, Gen::y}).kind == EdgeKind::strong);
            }
          }
        }
      }
    }
  }

  TEST_CASE("scc_key: examples and Tarjan oracle", "[cayley][oracle]") {
    REQUIRE(scc_key({0, 2, 1}) == scc_key({0, 2, 2}));
    REQUIRE(scc_key({0, 2, 1}) == SccKey{0, 2});
    REQUIRE(scc_key({0, 1, 1}) != scc_key({-1, 1, 1}));
    REQUIRE(scc_key(Interval::identity()) == SccKey{0, 0});

    auto comp = oracle::scc_ids(7);
    auto ball = mono::enumerate_ball(7);
    for (auto const& u : ball) {
      for (auto const& v : ball) {
        REQUIRE((comp.at(u) == comp.at(v)) == (scc_key(u) == scc_key(v)));
      }
    }
  }

  TEST_CASE("scc_key agrees with R-classes of Munn trees", "[cayley][oracle]") {
    Alphabet a("a");
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& u : mono::all_words(len)) {
        for (auto const& v : mono::all_words(6 - len)) {
          bool r = r_related(munn_tree(a, oracle::as_general(u)),
                             munn_tree(a, oracle::as_general(v)));
          REQUIRE(r
                  == (scc_key(mono::eval_word(u)) == scc_key(mono::eval_word(v))));
        }
      }
    }
  }

  TEST_CASE("is_transition", "[cayley]") {
    REQUIRE(is_transition({{0, 0, 0}, Gen::x}));
    REQUIRE(is_transition({{-1, 1, 1}, Gen::x}));
    REQUIRE(!is_transition({{0, 2, 1}, Gen::x}));
    for (auto const& [e, cls] : ball_edges(8)) {
      if (cls.kind == EdgeKind::strong) {
        REQUIRE(!is_transition(e));
      }
      if (cls.kind == EdgeKind::transition) {
        REQUIRE(is_transition(e));
      }
    }
  }

  TEST_CASE("tree_path: examples", "[cayley]") {
    auto p = tree_path({0, 5, 2});
    REQUIRE(spelled(p) == "xxxxxyyy");
    REQUIRE(p.start() == Interval::identity());
    REQUIRE(p.end() == Interval{0, 5, 2});

    REQUIRE(tree_path(Interval::identity()).empty());

    auto q = tree_path({-2, 4, 1});
    REQUIRE(spelled(q) == "xxxxyyyyyyxxx");
    for (auto const& s : q.steps()) {
      REQUIRE(s.forward);
      REQUIRE(classify_edge(s.edge).kind == EdgeKind::tree);
    }
  }

  TEST_CASE("geodesic: examples", "[cayley]") {
    Interval one = Interval::identity();
    Interval x2{0, 2, 2};
    auto     up = geodesic(one, x2);
    REQUIRE(spelled(up) == "xx");
    auto down = geodesic(x2, one);
    REQUIRE(spelled(down) == "XX");
    REQUIRE(down == up.reversed());
    REQUIRE(geodesic(x2, x2).empty());

    // normal forms "x" and "xxyyyxxx" share the prefix "x".
    REQUIRE(to_interval(NormalForm::type_ii(2, 3, 3)) == Interval{-1, 2, 2});
    auto g = geodesic({0, 1, 1}, {-1, 2, 2});
    REQUIRE(spelled(g) == "xyyyxxx");
    REQUIRE(g.start() == Interval{0, 1, 1});
    REQUIRE(g.end() == Interval{-1, 2, 2});

    // Down one branch and up another: x^2 y^1 to y^1 x^1.
    auto h = geodesic(el("x^2 y"), el("y x"));
    REQUIRE(spelled(h) == "YXXyx");
  }

  TEST_CASE("geodesic: reversal and minimality", "[cayley][property]") {
    auto ball = mono::enumerate_ball(4);
    for (auto const& u : ball) {
      for (auto const& w : ball) {
        auto g = geodesic(u, w);
        REQUIRE(g.well_formed());
        REQUIRE(g.start() == u);
        REQUIRE(g.end() == w);
        REQUIRE(g.reversed() == geodesic(w, u));
        for (auto const& s : g.steps()) {
          REQUIRE(classify_edge(s.edge).kind == EdgeKind::tree);
        }
        // A minimal tree path never immediately backtracks.
        for (std::size_t i = 1; i < g.length(); ++i) {
          REQUIRE(g.steps()[i].edge != g.steps()[i - 1].edge);
        }
      }
    }
  }

  TEST_CASE("Path: well-formedness errors", "[cayley]") {
    Path p(Interval::identity());
    p.push({Interval::identity(), Gen::x});
    REQUIRE(p.end() == Interval{0, 1, 1});
    REQUIRE_THROWS_AS(p.push({Interval::identity(), Gen::y}), Error);
    REQUIRE_THROWS_AS(p.append(tree_path({0, 2, 2})), Error);
    Path bad(Interval::identity(), {PathStep{{Interval{0, 1, 1}, Gen::x}, true}});
    REQUIRE(!bad.well_formed());
    REQUIRE_THROWS_AS(bad.end(), Error);
    p.push({Interval::identity(), Gen::x}, false);
    REQUIRE(p.closed());
  }

  TEST_CASE("ball_edges: examples", "[cayley]") {
    auto b1 = ball_edges(1);
    REQUIRE(contains(b1, {{0, 0, 0}, Gen::x}, {EdgeKind::tree, 0}));
    REQUIRE(contains(b1, {{0, 0, 0}, Gen::y}, {EdgeKind::tree, 0}));
    REQUIRE(contains(b1, {{0, 1, 0}, Gen::x}, {EdgeKind::strong, 0}));
    REQUIRE(contains(b1, {{0, 1, 1}, Gen::y}, {EdgeKind::tree, 0}));
    REQUIRE(b1.size() == 6);
    REQUIRE(std::is_sorted(b1.begin(), b1.end(), [](auto const& l, auto const& r) {
      return l.first < r.first;
    }));

    for (int n = 1; n <= 8; ++n) {
      for (auto const& [e, cls] : ball_edges(n)) {
        REQUIRE(e.target().size() <= n);
        if (cls.kind == EdgeKind::transition) {
          REQUIRE(e.source.size() <= n - 1);
        }
      }
    }

    // There are exactly k transition edges of weight k.
    auto edges = ball_edges(9);
    for (int k = 1; k <= 8; ++k) {
      auto count = std::count_if(edges.begin(), edges.end(), [k](auto const& p) {
        return p.second == EdgeClass{EdgeKind::transition, k};
      });
      REQUIRE(count == k);
    }
  }

  TEST_CASE("ball invariants", "[cayley][property]") {
    auto ball = mono::enumerate_ball(8);
    for (auto const& v : ball) {
      auto p = tree_path(v);
      REQUIRE(p.end() == v);
      if (!p.empty()) {
        REQUIRE(p.steps().back().edge.source.size() <= 8);
        REQUIRE(std::binary_search(
            ball.begin(), ball.end(), p.steps().back().edge.source));
      }
    }
    for (auto const& [e, cls] : ball_edges(8)) {
      REQUIRE(e.target() != e.source);
      auto ks = scc_key(e.source);
      auto kt = scc_key(e.target());
      switch (cls.kind) {
        case EdgeKind::transition:
          REQUIRE(e.target().size() == e.source.size() + 1);
          break;
        case EdgeKind::strong:
          REQUIRE(ks == kt);
          break;
        case EdgeKind::tree:
          REQUIRE((ks == kt || e.target().size() == e.source.size() + 1));
          break;
      }
      // Left translation maps arcs to arcs.
      for (auto z : mono::generators) {
        EdgeRef moved{mono::left_mult(z, e.source), e.gen};
        REQUIRE(moved.target() == mono::left_mult(z, e.target()));
        REQUIRE(moved.target() != moved.source);
      }
    }
  }

  TEST_CASE("verify_classification", "[cayley][verify]") {
    for (int n = 2; n <= 8; ++n) {
      auto r = verify_classification(n);
      REQUIRE(r.pass);
      REQUIRE(r.checked == ball_edges(n).size());
      REQUIRE(r.stats["tree_edges"].get<long long>()
                  + r.stats["strong_edges"].get<long long>()
                  + r.stats["transition_edges"].get<long long>()
              == static_cast<long long>(r.checked));
    }
    REQUIRE_THROWS_AS(verify_classification(1), Error);
  }

  TEST_CASE("parse_edge and to_string", "[cayley]") {
    EdgeRef e{{-1, 1, 1}, Gen::x};
    REQUIRE(to_string(e) == "x^1 y^2 x^2:x");
    REQUIRE(parse_edge("x^1 y^2 x^2:x") == e);
    REQUIRE(parse_edge("xyyxx : x") == EdgeRef{{-1, 1, 1}, Gen::x});
    REQUIRE(parse_edge("x^0 y^1 x^1:x") == EdgeRef{{-1, 0, 0}, Gen::x});
    REQUIRE(parse_edge(":y") == EdgeRef{Interval::identity(), Gen::y});
    REQUIRE_THROWS_AS(parse_edge("xy"), ParseError);
    REQUIRE_THROWS_AS(parse_edge("xy:z"), ParseError);
    REQUIRE_THROWS_AS(parse_edge("xa:x"), ParseError);
    for (auto const& [edge, cls] : ball_edges(5)) {
      REQUIRE(parse_edge(to_string(edge)) == edge);
    }
  }

}  // namespace fim::cayley
