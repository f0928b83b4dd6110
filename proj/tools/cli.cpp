#include "cli.hpp"

#include <algorithm>   // for find, max, min
#include <atomic>      // for atomic
#include <cstdlib>     // for abs
#include <fstream>     // for ofstream
#include <functional>  // for function
#include <iomanip>     // for setw
#include <optional>    // for optional
#include <ostream>     // for ostream
#include <thread>      // for thread
#include <utility>     // for pair

#include "CLI11.hpp"

#include "fim/cayley.hpp"
#include "fim/error.hpp"
#include "fim/homology.hpp"
#include "fim/json.hpp"
#include "fim/monogenic.hpp"
#include "fim/munn_tree.hpp"
#include "fim/render.hpp"
#include "fim/report.hpp"

namespace fim::cli {

  namespace {
    constexpr int report_schema = 1;

    struct NfArgs {
      std::string word;
      bool        json = false;
    };

    struct EqArgs {
      std::string first, second;
      std::string alphabet;
      bool        exit_status = false;
    };

    struct VerifyArgs {
      std::string              suite       = "all";
      int                      size        = 8;
      int                      max_weight  = 12;
      int                      word_length = -1;
      std::vector<std::string> only;
      std::string              report;
      unsigned                 jobs    = 1;
      bool                     timings = false;
    };

    struct MunnArgs {
      std::string word;
      std::string alphabet;
      std::string format = "ascii";
    };

    struct CayleyArgs {
      int         size   = 2;
      std::string format = "dot";
    };

    struct ActArgs {
      std::string edge;
      std::string by;
      std::string format = "text";
    };

    CLI::App* add_munn(CLI::App& parent, MunnArgs& a) {
      auto* sub = parent.add_subcommand(
          "munn", "Render the Munn tree of a word as ASCII, DOT or JSON");
      sub->add_option("word", a.word, "Word; exponent syntax allowed")
          ->required();
      sub->add_option("--alphabet",
                      a.alphabet,
                      "Generators of a general-rank alphabet, e.g. ab");
      sub->add_option("--format", a.format, "Output format")
          ->check(CLI::IsMember({"ascii", "dot", "json"}))
          ->capture_default_str();
      return sub;
    }

    CLI::App* add_cayley(CLI::App& parent, CayleyArgs& a) {
      auto* sub = parent.add_subcommand(
          "cayley", "Render a ball of the Cayley digraph with classified edges");
      sub->add_option("--size", a.size, "Largest Munn-tree size in the ball")
          ->check(CLI::Range(0, 64))
          ->capture_default_str();
      sub->add_option("--format", a.format, "Output format")
          ->check(CLI::IsMember({"ascii", "dot", "json"}))
          ->capture_default_str();
      return sub;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_nf(NfArgs const& a, std::ostream& out) {
      auto m = mono::parse_element(a.word);
      auto f = mono::normal_form(m);
      if (a.json) {
        nlohmann::json j{{"normal_form", f},
                         {"string", mono::to_string(f)},
                         {"interval", m}};
        out << j.dump(2) << '\n';
      } else {
        out << mono::to_string(f) << '\n'
            << "interval " << mono::to_string(m) << '\n';
      }
      return success;
    }

    int cmd_eq(EqArgs const& a, std::ostream& out) {
      bool equal;
      if (a.alphabet.empty()) {
        equal = mono::parse_element(a.first) == mono::parse_element(a.second);
      } else {
        Alphabet alphabet(a.alphabet);
        equal = fim_equal(alphabet,
                          parse_word(alphabet, a.first),
                          parse_word(alphabet, a.second));
      }
      out << (equal ? "equal" : "distinct") << '\n';
      return equal || !a.exit_status ? success : failure;
    }

    using Task = std::function<VerificationReport()>;

    std::vector<std::pair<std::string, Task>> verify_tasks(VerifyArgs const& a) {
      int const size   = a.size;
      int const weight = a.max_weight;
      int const length = a.word_length < 0 ? a.size + 2 : a.word_length;
      return {
          {"identities", [=] { return mono::verify_identities(weight); }},
          {"normal-forms",
           [=] { return mono::verify_normal_forms(size, length); }},
          {"classification",
           [=] { return cayley::verify_classification(size); }},
          {"w0", [=] { return homology::verify_w0(size); }},
          {"filtration", [=] { return homology::verify_filtration(weight); }},
          {"strictness", [=] { return homology::verify_strictness(weight); }},
          {"transition-basis",
           [=] { return homology::verify_transition_basis(weight); }},
          {"rank", [=] { return homology::rank_check(size); }},
      };
    }

    // Runs the tasks on up to `jobs` threads; results keep task order.
    std::vector<VerificationReport> run_tasks(std::vector<Task> const& tasks,
                                              unsigned                 jobs) {
      std::vector<std::optional<VerificationReport>> slots(tasks.size());
      std::vector<std::exception_ptr>                errors(tasks.size());
      std::atomic<std::size_t>                       next{0};
      auto                                           worker = [&] {
        for (auto i = next++; i < tasks.size(); i = next++) {
          try {
            slots[i].emplace(tasks[i]());
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < std::min<std::size_t>(jobs, tasks.size()); ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& t : pool) {
        t.join();
      }
      std::vector<VerificationReport> result;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) {
          std::rethrow_exception(errors[i]);
        }
        result.push_back(std::move(*slots[i]));
      }
      return result;
    }

    int cmd_verify(VerifyArgs const& a, std::ostream& out, std::ostream& err) {
      std::vector<std::string> selected = a.only;
      if (selected.empty() && a.suite != "all") {
        selected.push_back(a.suite);
      }
      std::vector<Task> tasks;
      for (auto& [name, task] : verify_tasks(a)) {
        if (selected.empty()
            || std::find(selected.begin(), selected.end(), name)
                   != selected.end()) {
          tasks.push_back(std::move(task));
        }
      }

      auto reports = run_tasks(tasks, std::max(1u, a.jobs));
      bool all_pass = true;
      for (auto& r : reports) {
        if (!a.timings) {
          r.elapsed_ms = 0;
        }
        all_pass = all_pass && r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(18)
            << r.check << std::right << " checked " << r.checked;
        if (!r.pass) {
          out << ", " << r.failures << " failures";
        }
        if (a.timings) {
          out << " (" << r.elapsed_ms << " ms)";
        }
        out << '\n';
        for (auto const& c : r.counterexamples) {
          out << "    " << c << '\n';
        }
      }
      out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';

      if (!a.report.empty()) {
        nlohmann::json doc{{"schema", report_schema}, {"reports", reports}};
        std::ofstream  file(a.report, std::ios::binary | std::ios::trunc);
        file << doc.dump(2) << '\n';
        file.close();
        if (!file) {
          err << "error: cannot write report to " << a.report << '\n';
          return usage_error;
        }
      }
      return all_pass ? success : failure;
    }

    int cmd_munn(MunnArgs const& a, std::ostream& out) {
      if (a.alphabet.empty()) {
        auto m = mono::parse_element(a.word);
        if (a.format == "ascii") {
          out << munn_ascii(m);
        } else if (a.format == "dot") {
          out << munn_dot(m);
        } else {
          // Same encoding as the general case: reduced words over {x, y}.
          auto vertices = nlohmann::json::array();
          for (int len = 0; len <= std::max(m.b, -m.a); ++len) {
            if (len <= m.b) {
              vertices.push_back(std::string(len, 'x'));
            }
            if (len > 0 && len <= -m.a) {
              vertices.push_back(std::string(len, 'y'));
            }
          }
          nlohmann::json j{
              {"vertices", vertices},
              {"out", std::string(std::abs(m.t), m.t >= 0 ? 'x' : 'y')}};
          j["interval"]    = m;
          j["normal_form"] = mono::nf_string(m);
          out << j.dump(2) << '\n';
        }
        return success;
      }
      Alphabet alphabet(a.alphabet);
      auto     t = munn_tree(alphabet, a.word);
      if (a.format == "ascii") {
        out << munn_ascii(t);
      } else if (a.format == "dot") {
        out << munn_dot(t);
      } else {
        out << nlohmann::json(t).dump(2) << '\n';
      }
      return success;
    }

    int cmd_cayley(CayleyArgs const& a, std::ostream& out) {
      if (a.format == "dot") {
        out << cayley_dot(a.size);
      } else if (a.format == "json") {
        nlohmann::json j{
            {"size", a.size},
            {"vertices", mono::ball_count(a.size)},
            {"edges", cayley::edge_list_json(cayley::ball_edges(a.size))}};
        out << j.dump(2) << '\n';
      } else {
        for (auto const& [e, cls] : cayley::ball_edges(a.size)) {
          out << mono::nf_string(e.source) << " --" << mono::symbol(e.gen)
              << "--> " << mono::nf_string(e.target()) << "  "
              << cayley::to_string(cls.kind);
          if (cls.kind == cayley::EdgeKind::transition) {
            out << " (weight " << cls.weight << ")";
          }
          out << '\n';
        }
      }
      return success;
    }

    int cmd_act(ActArgs const& a, std::ostream& out) {
      auto e = cayley::parse_edge(a.edge);
      auto w = mono::parse_word(a.by);
      auto b = homology::HomologyVector::unit(e);
      auto v = homology::act_word(w, b);
      auto mw = homology::max_weight(v);
      if (a.format == "json") {
        nlohmann::json j{{"edge", e},
                         {"edge_weight", homology::weight(e)},
                         {"by", mono::to_exponent_string(w)},
                         {"result", v},
                         {"max_weight", mw ? nlohmann::json(*mw) : nlohmann::json()}};
        out << j.dump(2) << '\n';
        return success;
      }
      out << mono::to_exponent_string(w) << " * b[" << cayley::to_string(e)
          << "] =\n";
      if (v.empty()) {
        out << "  0\n";
      }
      for (auto const& [edge, c] : v) {
        out << "  " << std::showpos << c << std::noshowpos << " * b["
            << cayley::to_string(edge) << "]  (weight "
            << homology::weight(edge) << ")\n";
      }
      out << "max weight: " << (mw ? std::to_string(*mw) : "none") << '\n';
      return success;
    }
  }  // namespace

  std::vector<std::string> const& check_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> result;
      for (auto const& [name, task] : verify_tasks(VerifyArgs{})) {
        result.push_back(name);
      }
      return result;
    }();
    return names;
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Free monogenic inverse monoid: normal forms, Munn trees, "
                 "Cayley digraph homology and its weight filtration",
                 "fimtool"};
    app.set_version_flag("--version", "fimtool 0.1.0");
    app.require_subcommand(1);

    NfArgs nf;
    auto*  nf_cmd = app.add_subcommand("nf", "Print the normal form of a word");
    nf_cmd->add_option("word", nf.word, "Word over {x,y}")->required();
    nf_cmd->add_flag("--json", nf.json, "JSON output");

    EqArgs eq;
    auto*  eq_cmd = app.add_subcommand("eq", "Decide equality of two words");
    eq_cmd->add_option("first", eq.first)->required();
    eq_cmd->add_option("second", eq.second)->required();
    eq_cmd->add_option("--alphabet",
                       eq.alphabet,
                       "Generators of a general-rank alphabet, e.g. ab");
    eq_cmd->add_flag("--exit-status",
                     eq.exit_status,
                     "Exit 0 if equal and 1 if distinct");

    VerifyArgs verify;
    auto*      verify_cmd
        = app.add_subcommand("verify", "Run the bounded-scale verification suite");
    std::vector<std::string> suites{"all"};
    suites.insert(suites.end(), check_names().begin(), check_names().end());
    verify_cmd->add_option("suite", verify.suite, "all or a single check")
        ->check(CLI::IsMember(suites))
        ->capture_default_str();
    verify_cmd->add_option("--size", verify.size, "Ball size N")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    verify_cmd
        ->add_option("--max-weight", verify.max_weight, "Largest weight K")
        ->check(CLI::Range(1, 200))
        ->capture_default_str();
    verify_cmd
        ->add_option("--word-length",
                     verify.word_length,
                     "Longest word for normal-form checks (default size + 2)")
        ->check(CLI::Range(0, 22));
    verify_cmd->add_option("--only", verify.only, "Run only these checks")
        ->check(CLI::IsMember(check_names()))
        ->delimiter(',');
    verify_cmd->add_option("--report", verify.report, "Write a JSON report");
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    verify_cmd->add_flag(
        "--timings", verify.timings, "Record elapsed times (non-deterministic)");

    MunnArgs   munn;
    CayleyArgs cayley_args;
    auto*      munn_cmd   = add_munn(app, munn);
    auto*      cayley_cmd = add_cayley(app, cayley_args);

    auto* render_cmd = app.add_subcommand("render", "Render a Munn tree or a ball");
    render_cmd->require_subcommand(1);
    auto* render_munn   = add_munn(*render_cmd, munn);
    auto* render_cayley = add_cayley(*render_cmd, cayley_args);

    ActArgs act;
    auto*   act_cmd = app.add_subcommand(
        "act", "Decompose w·b_e in the basis of H_1 with weights");
    act_cmd->add_option("edge", act.edge, "Non-tree edge as <normal form>:<x|y>")
        ->required();
    act_cmd->add_option("--by", act.by, "Word acting on the left");
    act_cmd->add_option("--format", act.format)
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? success : usage_error;
    }

    try {
      if (nf_cmd->parsed()) {
        return cmd_nf(nf, out);
      }
      if (eq_cmd->parsed()) {
        return cmd_eq(eq, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(verify, out, err);
      }
      if (munn_cmd->parsed() || render_munn->parsed()) {
        return cmd_munn(munn, out);
      }
      if (cayley_cmd->parsed() || render_cayley->parsed()) {
        return cmd_cayley(cayley_args, out);
      }
      if (act_cmd->parsed()) {
        return cmd_act(act, out);
      }
    } catch (fim::Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace fim::cli
