#include "fim/cayley.hpp"

#include "fim/error.hpp"

namespace fim::cayley {

  using mono::MonoWord;

  namespace {
    // Vertices visited by the tree path spelling `w`, starting at 1.
    std::vector<Interval> prefix_vertices(MonoWord const& w) {
      std::vector<Interval> result{Interval::identity()};
      for (auto g : w) {
        result.push_back(mono::right_mult(result.back(), g));
      }
      return result;
    }

    MonoWord nf_word_of(Interval const& m) {
      return mono::nf_word(mono::normal_form(m));
    }

    Interval step_end(PathStep const& s) {
      return s.forward ? s.edge.target() : s.edge.source;
    }

    Interval step_start(PathStep const& s) {
      return s.forward ? s.edge.source : s.edge.target();
    }
  }  // namespace

  std::string to_string(EdgeRef const& e) {
    return mono::nf_string(e.source) + ":" + mono::symbol(e.gen);
  }

  EdgeRef parse_edge(std::string_view text) {
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos) {
      throw ParseError("edge \"" + std::string(text)
                       + "\" must have the form <word>:<x|y>");
    }
    auto label = text.substr(colon + 1);
    while (!label.empty() && label.front() == ' ') {
      label.remove_prefix(1);
    }
    while (!label.empty() && label.back() == ' ') {
      label.remove_suffix(1);
    }
    if (label != "x" && label != "y") {
      throw ParseError("edge label must be x or y, got \"" + std::string(label)
                       + "\"");
    }
    return EdgeRef{mono::parse_element(text.substr(0, colon)),
                   label == "x" ? Gen::x : Gen::y};
  }

  std::string_view to_string(EdgeKind k) noexcept {
    switch (k) {
      case EdgeKind::tree:
        return "tree";
      case EdgeKind::strong:
        return "strong";
      case EdgeKind::transition:
        return "transition";
    }
    return "?";
  }

  EdgeClass classify_edge(EdgeRef const& e) noexcept {
    auto f = mono::normal_form(e.source);
    if (f.type == mono::NfType::I) {
      if (e.gen == Gen::y || f.k == 0) {
        return {EdgeKind::tree, 0};
      }
      return {EdgeKind::strong, 0};
    }
    if (e.gen == Gen::y) {
      return f.j == 0 ? EdgeClass{EdgeKind::tree, 0}
                      : EdgeClass{EdgeKind::strong, 0};
    }
    if (f.j < f.k) {
      return {EdgeKind::tree, 0};
    }
    return {EdgeKind::transition, f.k};
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  bool Path::well_formed() const noexcept {
    Interval at = _start;
    for (auto const& s : _steps) {
      if (step_start(s) != at) {
        return false;
      }
      at = step_end(s);
    }
    return true;
  }

  Interval Path::end() const {
    Interval at = _start;
    for (std::size_t i = 0; i < _steps.size(); ++i) {
      if (step_start(_steps[i]) != at) {
        throw Error("malformed path: step " + std::to_string(i) + " along "
                    + to_string(_steps[i].edge) + " does not start at "
                    + mono::nf_string(at));
      }
      at = step_end(_steps[i]);
    }
    return at;
  }

  Path Path::reversed() const {
    Path result(end());
    result._steps.reserve(_steps.size());
    for (auto it = _steps.rbegin(); it != _steps.rend(); ++it) {
      result._steps.push_back(PathStep{it->edge, !it->forward});
    }
    return result;
  }

  Path& Path::push(EdgeRef const& e, bool forward) {
    PathStep s{e, forward};
    if (step_start(s) != end()) {
      throw Error("edge " + to_string(e) + " is not incident at "
                  + mono::nf_string(end()));
    }
    _steps.push_back(s);
    return *this;
  }

  Path& Path::append(Path const& other) {
    if (other._start != end()) {
      throw Error("cannot append a path starting at "
                  + mono::nf_string(other._start) + " to one ending at "
                  + mono::nf_string(end()));
    }
    _steps.insert(_steps.end(), other._steps.begin(), other._steps.end());
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tree paths
  ////////////////////////////////////////////////////////////////////////

  Path tree_path(Interval const& v) {
    auto w = nf_word_of(v);
    auto vertices = prefix_vertices(w);
    std::vector<PathStep> steps;
    steps.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      steps.push_back(PathStep{EdgeRef{vertices[i], w[i]}, true});
    }
    return Path(Interval::identity(), std::move(steps));
  }

  Path geodesic(Interval const& v, Interval const& w) {
    auto from = nf_word_of(v);
    auto to   = nf_word_of(w);

    std::size_t common = 0;
    while (common < from.size() && common < to.size()
           && from[common] == to[common]) {
      ++common;
    }
    auto from_vertices = prefix_vertices(from);
    auto to_vertices   = prefix_vertices(to);

    std::vector<PathStep> steps;
    steps.reserve(from.size() + to.size() - 2 * common);
    for (std::size_t i = from.size(); i > common; --i) {
      steps.push_back(PathStep{EdgeRef{from_vertices[i - 1], from[i - 1]}, false});
    }
    for (std::size_t i = common; i < to.size(); ++i) {
      steps.push_back(PathStep{EdgeRef{to_vertices[i], to[i]}, true});
    }
    return Path(v, std::move(steps));
  }

  ////////////////////////////////////////////////////////////////////////
  // Balls
  ////////////////////////////////////////////////////////////////////////

  std::vector<ClassifiedEdge> ball_edges(int max_size) {
    std::vector<ClassifiedEdge> result;
    for (auto const& m : mono::enumerate_ball(max_size)) {
      for (auto g : mono::generators) {
        EdgeRef e{m, g};
        if (e.target().size() <= max_size) {
          result.emplace_back(e, classify_edge(e));
        }
      }
    }
    return result;
  }

  VerificationReport verify_classification(int max_size) {
    if (max_size < 2) {
      throw Error("verify_classification needs size >= 2");
    }
    VerificationReport report("classification", {{"size", max_size}});
    Stopwatch          clock;
    std::size_t        counts[3] = {0, 0, 0};

    for (auto const& [e, cls] : ball_edges(max_size)) {
      auto source_word = nf_word_of(e.source);
      auto target_word = nf_word_of(e.target());
      source_word.push_back(e.gen);

      EdgeClass expected;
      if (target_word == source_word) {
        expected = {EdgeKind::tree, 0};
      } else if (scc_key(e.source) == scc_key(e.target())) {
        expected = {EdgeKind::strong, 0};
      } else {
        expected = {EdgeKind::transition, e.source.size()};
      }
      report.expect(cls == expected && e.target() != e.source, [&] {
        return to_string(e) + " classified as " + std::string(to_string(cls.kind))
               + " (weight " + std::to_string(cls.weight) + "), expected "
               + std::string(to_string(expected.kind)) + " (weight "
               + std::to_string(expected.weight) + ")";
      });
      ++counts[static_cast<int>(cls.kind)];
    }
    report.stats["tree_edges"]       = counts[0];
    report.stats["strong_edges"]     = counts[1];
    report.stats["transition_edges"] = counts[2];
    report.elapsed_ms                = clock.elapsed_ms();
    return report;
  }

}  // namespace fim::cayley
