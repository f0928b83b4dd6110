#include "fim/render.hpp"

#include <algorithm>  // for max
#include <map>        // for map
#include <sstream>    // for ostringstream

#include "fim/cayley.hpp"

namespace fim {

  namespace {
    std::string pad_left(std::string s, std::size_t width) {
      if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
      }
      return s;
    }

    std::string vertex_label(Alphabet const& alphabet, Word const& w) {
      return w.empty() ? "1" : to_string(alphabet, w);
    }

    std::string quoted(std::string const& s) {
      return "\"" + s + "\"";
    }
  }  // namespace

  std::string munn_ascii(mono::Interval const& m) {
    std::size_t width = 1;
    for (int v = m.a; v <= m.b; ++v) {
      width = std::max(width, std::to_string(v).size());
    }
    std::string labels, path;
    for (int v = m.a; v <= m.b; ++v) {
      if (v != m.a) {
        labels += "   ";
        path += std::string(3 + width - 1, '-');
      } else {
        path += std::string(width - 1, ' ');
      }
      labels += pad_left(std::to_string(v), width);
      path += v == m.t ? '*' : 'o';
    }
    return labels + "\n" + path + "\n";
  }

  std::string munn_ascii(MunnTree const& t) {
    // ShortLex order lists a parent before its children, but depth-first
    // output needs the children grouped under each parent.
    std::map<Word, std::vector<Word const*>> children;
    for (auto const& v : t.vertices()) {
      if (!v.empty()) {
        children[Word(v.begin(), v.end() - 1)].push_back(&v);
      }
    }
    std::ostringstream out;
    auto visit = [&](auto&& self, Word const& v) -> void {
      out << std::string(2 * v.size(), ' ')
          << vertex_label(t.alphabet(), v);
      if (v == t.out()) {
        out << " *";
      }
      out << '\n';
      if (auto it = children.find(v); it != children.end()) {
        for (auto const* child : it->second) {
          self(self, *child);
        }
      }
    };
    visit(visit, Word{});
    return out.str();
  }

  std::string munn_dot(mono::Interval const& m) {
    std::ostringstream out;
    out << "digraph munn {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int v = m.a; v <= m.b; ++v) {
      out << "  v" << (v < 0 ? "m" : "") << (v < 0 ? -v : v) << " [label="
          << quoted(std::to_string(v));
      if (v == 0) {
        out << ", peripheries=2";
      }
      if (v == m.t) {
        out << ", style=filled, fillcolor=black, fontcolor=white";
      }
      out << "];\n";
    }
    auto id = [](int v) {
      return std::string("v") + (v < 0 ? "m" : "") + std::to_string(v < 0 ? -v : v);
    };
    for (int v = m.a; v < m.b; ++v) {
      out << "  " << id(v) << " -> " << id(v + 1) << " [label=\"x\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string munn_dot(MunnTree const& t) {
    auto const&                          alphabet = t.alphabet();
    std::map<Word, std::size_t, ShortLex> ids;
    for (auto const& v : t.vertices()) {
      ids.emplace(v, ids.size());
    }
    std::ostringstream out;
    out << "digraph munn {\n  node [shape=circle];\n";
    for (auto const& [v, id] : ids) {
      out << "  n" << id << " [label=" << quoted(vertex_label(alphabet, v));
      if (v.empty()) {
        out << ", peripheries=2";
      }
      if (v == t.out()) {
        out << ", style=filled, fillcolor=black, fontcolor=white";
      }
      out << "];\n";
    }
    for (auto const& [v, id] : ids) {
      if (v.empty()) {
        continue;
      }
      auto        parent = ids.at(Word(v.begin(), v.end() - 1));
      Letter      last   = v.back();
      std::string gen(1, alphabet.symbol(Letter{last.gen, false}));
      // Arcs of the free-group Cayley graph are g -> g·a for a in X.
      if (last.inverse) {
        out << "  n" << id << " -> n" << parent;
      } else {
        out << "  n" << parent << " -> n" << id;
      }
      out << " [label=" << quoted(gen) << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string cayley_dot(int max_size) {
    using cayley::EdgeKind;
    auto                                   ball = mono::enumerate_ball(max_size);
    std::map<mono::Interval, std::size_t> ids;
    std::ostringstream                     out;
    out << "digraph cayley {\n  node [shape=box];\n";
    for (auto const& m : ball) {
      auto id = ids.size();
      ids.emplace(m, id);
      out << "  v" << id << " [label=" << quoted(mono::nf_string(m)) << "];\n";
    }
    for (auto const& [e, cls] : cayley::ball_edges(max_size)) {
      out << "  v" << ids.at(e.source) << " -> v" << ids.at(e.target())
          << " [label=\"" << mono::symbol(e.gen);
      switch (cls.kind) {
        case EdgeKind::tree:
          out << "\", style=solid";
          break;
        case EdgeKind::strong:
          out << "\", style=dashed";
          break;
        case EdgeKind::transition:
          out << " (" << cls.weight << ")\", style=bold";
          break;
      }
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace fim
