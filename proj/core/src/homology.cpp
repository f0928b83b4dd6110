#include "fim/homology.hpp"

#include <algorithm>  // for equal
#include <tuple>      // for tuple

#include "fim/error.hpp"

namespace fim::homology {

  using cayley::classify_edge;
  using cayley::EdgeClass;
  using cayley::EdgeKind;
  using cayley::PathStep;

  namespace {
    bool is_tree(EdgeRef const& e) noexcept {
      return classify_edge(e).kind == EdgeKind::tree;
    }

    HomologyVector restrict_to_basis(OneChain const& c) {
      HomologyVector result;
      for (auto const& [e, coeff] : c) {
        if (!is_tree(e)) {
          result.add(e, coeff);
        }
      }
      return result;
    }

    std::string describe(HomologyVector const& v) {
      if (v.empty()) {
        return "0";
      }
      std::string result;
      for (auto const& [e, c] : v) {
        if (!result.empty()) {
          result += " + ";
        }
        result += std::to_string(c) + "*b[" + cayley::to_string(e) + "]";
      }
      return result;
    }

    std::string describe(std::optional<int> w) {
      return w ? std::to_string(*w) : "none";
    }

    std::string label(int n, int k) {
      return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    }
  }  // namespace

  int weight(EdgeRef const& e) {
    auto cls = classify_edge(e);
    if (cls.kind == EdgeKind::tree) {
      throw Error("tree edge " + cayley::to_string(e)
                  + " is not a basis edge and has no weight");
    }
    return cls.weight;
  }

  bool SupportOrder::operator()(EdgeRef const& l, EdgeRef const& r) const {
    return std::tuple(classify_edge(l).weight, l)
           < std::tuple(classify_edge(r).weight, r);
  }

  HomologyVector HomologyVector::unit(EdgeRef const& e) {
    HomologyVector result;
    result.add(e, 1);
    return result;
  }

  void HomologyVector::add(EdgeRef const& e, Coeff c) {
    if (is_tree(e)) {
      throw Error("tree edge " + cayley::to_string(e)
                  + " is not a basis edge");
    }
    _terms.add(e, c);
  }

  OneChain chain_of_path(Path const& p) {
    if (!p.well_formed()) {
      p.end();  // throws with a description of the offending step
    }
    OneChain result;
    for (auto const& s : p.steps()) {
      result.add(s.edge, s.forward ? 1 : -1);
    }
    return result;
  }

  ZeroChain boundary(OneChain const& c) {
    ZeroChain result;
    for (auto const& [e, coeff] : c) {
      result.add(e.target(), coeff);
      result.add(e.source, -coeff);
    }
    return result;
  }

  Coeff augment(ZeroChain const& c) {
    Coeff total = 0;
    for (auto const& [v, coeff] : c) {
      total += coeff;
    }
    return total;
  }

  Path basis_cycle(EdgeRef const& e) {
    if (is_tree(e)) {
      throw Error("tree edge " + cayley::to_string(e)
                  + " is not a basis edge");
    }
    auto p = cayley::tree_path(e.source);
    p.push(e);
    p.append(cayley::tree_path(e.target()).reversed());
    return p;
  }

  HomologyVector homology_of_path(Path const& p) {
    if (!p.closed()) {
      throw Error("homology_of_path needs a closed path");
    }
    return restrict_to_basis(chain_of_path(p));
  }

  Path translate_path(Gen z, Path const& p) {
    std::vector<PathStep> steps;
    steps.reserve(p.length());
    for (auto const& s : p.steps()) {
      steps.push_back(
          PathStep{EdgeRef{mono::left_mult(z, s.edge.source), s.edge.gen},
                   s.forward});
    }
    return Path(mono::left_mult(z, p.start()), std::move(steps));
  }

  HomologyVector act(Gen z, HomologyVector const& v) {
    HomologyVector result;
    for (auto const& [e, c] : v) {
      result += c * homology_of_path(translate_path(z, basis_cycle(e)));
    }
    return result;
  }

  HomologyVector act_word(MonoWord const& w, HomologyVector const& v) {
    HomologyVector result = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result = act(*it, result);
    }
    return result;
  }

  std::optional<int> max_weight(HomologyVector const& v) {
    std::optional<int> result;
    for (auto const& [e, c] : v) {
      int w = weight(e);
      if (!result || w > *result) {
        result = w;
      }
    }
    return result;
  }

  EdgeRef transition_edge(int n, int k) {
    return EdgeRef{mono::to_interval(mono::NormalForm::type_ii(n, k, k)),
                   Gen::x};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verifiers
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_w0(int max_size) {
    if (max_size < 2) {
      throw Error("verify_w0 needs size >= 2");
    }
    VerificationReport report("w0", {{"size", max_size}});
    Stopwatch          clock;
    std::size_t        strong_edges = 0;

    for (auto const& [e, cls] : cayley::ball_edges(max_size)) {
      if (cls.kind != EdgeKind::strong) {
        continue;
      }
      ++strong_edges;
      auto name = cayley::to_string(e);

      // The two-cycle: x^n y^(k-1) -y-> x^n y^k -x-> x^n y^(k-1) for a type I
      // source, x^n y^k x^(j-1) -x-> x^n y^k x^j -y-> x^n y^k x^(j-1) for a
      // type II source.
      auto     f     = mono::normal_form(e.source);
      Interval start = f.type == mono::NfType::I
                           ? mono::to_interval(mono::NormalForm::type_i(f.n, f.k - 1))
                           : mono::to_interval(
                               mono::NormalForm::type_ii(f.n, f.k, f.j - 1));
      EdgeRef  first{start, mono::inverse(e.gen)};
      report.require(
          start == e.target() && first.target() == e.source
              && classify_edge(first).kind == EdgeKind::tree,
          [&] { return name + ": two-cycle does not close through a tree edge"; });
      Path cycle(start, {PathStep{first, true}, PathStep{e, true}});
      if (cycle.well_formed() && cycle.closed()) {
        report.require(homology_of_path(cycle) == HomologyVector::unit(e),
                       [&] { return name + ": two-cycle does not represent b_e"; });
      }

      for (auto z : mono::generators) {
        auto moved = translate_path(z, cycle);
        bool directed = true;
        for (auto const& s : moved.steps()) {
          directed = directed && s.forward;
        }
        report.require(moved.length() == 2 && directed && moved.well_formed()
                           && moved.closed(),
                       [&] {
                         return name + ": translate by " + mono::symbol(z)
                                + " of the two-cycle is not a closed directed "
                                  "path of length 2";
                       });
        auto v  = act(z, HomologyVector::unit(e));
        auto mw = max_weight(v);
        report.expect(!mw || *mw == 0, [&] {
          return std::string(1, mono::symbol(z)) + "*b[" + name
                 + "] = " + describe(v) + " has weight " + describe(mw);
        });
      }
    }
    report.stats["strong_edges"] = strong_edges;
    report.elapsed_ms            = clock.elapsed_ms();
    return report;
  }

  VerificationReport verify_filtration(int max_weight_) {
    if (max_weight_ < 1) {
      throw Error("verify_filtration needs max_weight >= 1");
    }
    VerificationReport report("filtration", {{"max_weight", max_weight_}});
    Stopwatch          clock;
    std::size_t        landmarks = 0;

    for (int k = 1; k <= max_weight_; ++k) {
      for (int n = 0; n < k; ++n) {
        ++report.checked;
        auto e    = transition_edge(n, k);
        auto name = cayley::to_string(e) + " (" + label(n, k) + ")";
        report.require(classify_edge(e) == EdgeClass{EdgeKind::transition, k},
                       [&] { return name + ": not a weight-k transition edge"; });
        auto b = HomologyVector::unit(e);

        // z = y
        auto yb = act(Gen::y, b);
        auto mw = max_weight(yb);
        report.require(mw && *mw <= k, [&] {
          return "y*b[" + name + "] = " + describe(yb) + " has weight "
                 + describe(mw);
        });
        EdgeRef ye{mono::left_mult(Gen::y, e.source), Gen::x};
        report.require(ye.target() == mono::left_mult(Gen::y, e.target()),
                       [&] { return name + ": translate ye has wrong target"; });
        ++landmarks;
        if (n == 0) {
          report.require(classify_edge(ye).kind == EdgeKind::tree
                             && !yb.contains(ye),
                         [&] {
                           return name + ": ye = " + cayley::to_string(ye)
                                  + " should be a tree edge";
                         });
        } else {
          report.require(
              ye == transition_edge(n - 1, k) && yb.contains(ye),
              [&] {
                return name + ": ye = " + cayley::to_string(ye)
                       + " should be the weight-k transition edge in the "
                         "support of "
                       + describe(yb);
              });
          auto lower = transition_edge(n - 1, n);
          ++landmarks;
          report.require(yb.contains(lower), [&] {
            return name + ": support of y*b_e = " + describe(yb)
                   + " misses the weight-n edge " + cayley::to_string(lower);
          });
        }

        // z = x
        auto xb = act(Gen::x, b);
        mw      = max_weight(xb);
        report.require(!mw || *mw <= k, [&] {
          return "x*b[" + name + "] = " + describe(xb) + " has weight "
                 + describe(mw);
        });
        ++landmarks;
        if (k > n + 1) {
          auto expected = HomologyVector::unit(transition_edge(n + 1, k));
          report.require(xb == expected, [&] {
            return "x*b[" + name + "] = " + describe(xb) + ", expected "
                   + describe(expected);
          });
        } else {
          EdgeRef xe{mono::left_mult(Gen::x, e.source), Gen::x};
          report.require(xe.source == Interval{0, n + 1, n + 1}
                             && classify_edge(xe).kind == EdgeKind::tree
                             && (!mw || *mw == 0),
                         [&] {
                           return "x*b[" + name + "] = " + describe(xb)
                                  + " should have weight 0 with xe a tree edge";
                         });
        }
      }
    }
    report.stats["transition_edges"] = report.checked;
    report.stats["actions"]          = 2 * report.checked;
    report.stats["landmarks"]        = landmarks;
    report.elapsed_ms                = clock.elapsed_ms();
    return report;
  }

  VerificationReport verify_strictness(int max_weight_) {
    if (max_weight_ < 1) {
      throw Error("verify_strictness needs max_weight >= 1");
    }
    VerificationReport report("strictness", {{"max_weight", max_weight_}});
    Stopwatch          clock;

    std::map<int, int> per_weight;
    for (auto const& [e, cls] : cayley::ball_edges(max_weight_ + 1)) {
      if (cls.kind == EdgeKind::transition) {
        ++per_weight[cls.weight];
      }
    }
    nlohmann::json witnesses = nlohmann::json::array();
    for (int k = 1; k <= max_weight_; ++k) {
      auto e  = transition_edge(0, k);
      auto mw = max_weight(HomologyVector::unit(e));
      report.expect(mw && *mw == k && *mw > k - 1 && per_weight[k] == k, [&] {
        return "level " + std::to_string(k) + ": witness "
               + cayley::to_string(e) + " has weight " + describe(mw) + ", "
               + std::to_string(per_weight[k]) + " transition edges of weight "
               + std::to_string(k);
      });
      witnesses.push_back(cayley::to_string(e));
    }
    report.stats["witnesses"] = witnesses;
    report.elapsed_ms         = clock.elapsed_ms();
    return report;
  }

  VerificationReport verify_transition_basis(int max_weight_) {
    if (max_weight_ < 1) {
      throw Error("verify_transition_basis needs max_weight >= 1");
    }
    VerificationReport report("transition-basis", {{"max_weight", max_weight_}});
    Stopwatch          clock;

    for (int k = 1; k <= max_weight_; ++k) {
      for (int n = 0; n < k; ++n) {
        auto     e    = transition_edge(n, k);
        auto     name = cayley::to_string(e) + " (" + label(n, k) + ")";
        Interval xn{0, n, n};

        auto to_xn     = cayley::tree_path(xn).steps();
        auto to_source = cayley::tree_path(e.source).steps();
        auto to_target = cayley::tree_path(e.target()).steps();
        auto is_prefix = [&to_xn](std::vector<PathStep> const& s) {
          return to_xn.size() <= s.size()
                 && std::equal(to_xn.begin(), to_xn.end(), s.begin());
        };
        report.require(is_prefix(to_source) && is_prefix(to_target), [&] {
          return name + ": [1,x^n] is not a common initial segment";
        });

        auto formula = chain_of_path(cayley::geodesic(xn, e.source));
        formula.add(e, 1);
        formula -= chain_of_path(cayley::geodesic(xn, e.target()));
        auto cycle      = chain_of_path(basis_cycle(e));
        auto difference = formula - cycle;

        bool tree_only = true;
        for (auto const& [d, c] : difference) {
          tree_only = tree_only && is_tree(d);
        }
        auto unit = HomologyVector::unit(e);
        report.expect(tree_only && difference.empty()
                          && boundary(formula).empty()
                          && restrict_to_basis(formula) == unit
                          && homology_of_path(basis_cycle(e)) == unit,
                      [&] {
                        return name
                               + ": geodesic formula does not reproduce b_e";
                      });
      }
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }

  VerificationReport rank_check(int max_size) {
    if (max_size < 0) {
      throw Error("rank_check needs size >= 0");
    }
    VerificationReport report("rank", {{"size", max_size}});
    Stopwatch          clock;

    auto const vertices = static_cast<long long>(mono::ball_count(max_size));
    auto const edges    = cayley::ball_edges(max_size);
    long long  tree = 0, non_tree = 0;
    for (auto const& [e, cls] : edges) {
      (cls.kind == EdgeKind::tree ? tree : non_tree) += 1;
    }
    auto const arcs = static_cast<long long>(edges.size());
    report.expect(arcs - vertices + 1 == non_tree && tree == vertices - 1,
                  [&] {
                    return "|E| - |V| + 1 = " + std::to_string(arcs - vertices + 1)
                           + " but " + std::to_string(non_tree)
                           + " non-tree edges and " + std::to_string(tree)
                           + " tree edges";
                  });
    report.stats["vertices"]       = vertices;
    report.stats["edges"]          = arcs;
    report.stats["tree_edges"]     = tree;
    report.stats["non_tree_edges"] = non_tree;
    report.elapsed_ms              = clock.elapsed_ms();
    return report;
  }

}  // namespace fim::homology
