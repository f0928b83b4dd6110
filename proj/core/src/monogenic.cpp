#include "fim/monogenic.hpp"

#include <algorithm>  // for min, max
#include <ostream>    // for ostream
#include <initializer_list>  // for initializer_list
#include <set>        // for set

#include "fim/error.hpp"
#include "fim/syntax.hpp"

namespace fim::mono {

  namespace {
    MonoWord power(Gen g, int e) {
      return MonoWord(static_cast<std::size_t>(e), g);
    }

    MonoWord concat(std::initializer_list<MonoWord> parts) {
      MonoWord result;
      for (auto const& p : parts) {
        result.insert(result.end(), p.begin(), p.end());
      }
      return result;
    }

    std::string describe(MonoWord const& w) {
      return "\"" + to_exponent_string(w) + "\"";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  MonoWord parse_word(std::string_view text) {
    MonoWord result;
    for (char c : expand_word_syntax(text)) {
      switch (c) {
        case 'x':
          result.push_back(Gen::x);
          break;
        case 'y':
          result.push_back(Gen::y);
          break;
        default:
          throw ParseError("invalid letter '" + std::string(1, c)
                           + "', expected x or y");
      }
    }
    return result;
  }

  std::string to_letters(MonoWord const& w) {
    std::string result;
    result.reserve(w.size());
    for (auto g : w) {
      result.push_back(symbol(g));
    }
    return result;
  }

  std::string to_exponent_string(MonoWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string result;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t run = i;
      while (run < w.size() && w[run] == w[i]) {
        ++run;
      }
      if (!result.empty()) {
        result.push_back(' ');
      }
      result.push_back(symbol(w[i]));
      result += "^" + std::to_string(run - i);
      i = run;
    }
    return result;
  }

  std::vector<MonoWord> all_words(std::size_t length) {
    std::vector<MonoWord> result{MonoWord{}};
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<MonoWord> next;
      next.reserve(result.size() * 2);
      for (auto const& w : result) {
        for (auto g : generators) {
          next.push_back(w);
          next.back().push_back(g);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Interval and NormalForm
  ////////////////////////////////////////////////////////////////////////

  Interval Interval::make(int a, int b, int t) {
    Interval m{a, b, t};
    if (!m.valid()) {
      throw Error("invalid interval " + to_string(m)
                  + ": need a <= 0 <= b and a <= t <= b");
    }
    return m;
  }

  std::string to_string(Interval const& m) {
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ","
           + std::to_string(m.t) + ")";
  }

  std::ostream& operator<<(std::ostream& os, Interval const& m) {
    return os << to_string(m);
  }

  NormalForm NormalForm::type_i(int n, int k) {
    if (!(0 <= k && k <= n)) {
      throw Error("type I normal form x^" + std::to_string(n) + " y^"
                  + std::to_string(k) + " needs 0 <= k <= n");
    }
    return NormalForm{NfType::I, n, k, 0};
  }

  NormalForm NormalForm::type_ii(int n, int k, int j) {
    if (!(0 <= n && n < k && 0 <= j && j <= k)) {
      throw Error("type II normal form x^" + std::to_string(n) + " y^"
                  + std::to_string(k) + " x^" + std::to_string(j)
                  + " needs 0 <= n < k and 0 <= j <= k");
    }
    return NormalForm{NfType::II, n, k, j};
  }

  std::string to_string(NormalForm const& f) {
    std::string result;
    auto        factor = [&result](char c, int e) {
      if (e == 0) {
        return;
      }
      if (!result.empty()) {
        result.push_back(' ');
      }
      result.push_back(c);
      result += "^" + std::to_string(e);
    };
    factor('x', f.n);
    factor('y', f.k);
    if (f.type == NfType::II) {
      factor('x', f.j);
    }
    return result.empty() ? "1" : result;
  }

  std::ostream& operator<<(std::ostream& os, NormalForm const& f) {
    return os << to_string(f);
  }

  Interval eval_word(MonoWord const& w) {
    Interval m;
    for (auto g : w) {
      m.t += g == Gen::x ? 1 : -1;
      m.a = std::min(m.a, m.t);
      m.b = std::max(m.b, m.t);
    }
    return m;
  }

  NormalForm normal_form(Interval const& m) {
    if (m.a == 0) {
      return NormalForm{NfType::I, m.b, m.b - m.t, 0};
    }
    return NormalForm{NfType::II, m.b, m.b - m.a, m.t - m.a};
  }

  MonoWord nf_word(NormalForm const& f) {
    if (f.type == NfType::I) {
      return concat({power(Gen::x, f.n), power(Gen::y, f.k)});
    }
    return concat(
        {power(Gen::x, f.n), power(Gen::y, f.k), power(Gen::x, f.j)});
  }

  Interval to_interval(NormalForm const& f) {
    if (f.type == NfType::I) {
      return Interval{0, f.n, f.n - f.k};
    }
    return Interval{f.n - f.k, f.n, f.n - f.k + f.j};
  }

  std::string nf_string(Interval const& m) {
    return to_string(normal_form(m));
  }

  Interval parse_element(std::string_view text) {
    return eval_word(parse_word(text));
  }

  NormalForm nf_parent(NormalForm const& f) {
    auto w = nf_word(f);
    if (w.empty()) {
      throw Error("the identity has no parent in the normal-form tree");
    }
    w.pop_back();
    return normal_form(eval_word(w));
  }

  std::vector<Interval> enumerate_ball(int max_size) {
    std::vector<Interval> result;
    for (int s = 0; s <= max_size; ++s) {
      for (int a = -s; a <= 0; ++a) {
        for (int t = a; t <= a + s; ++t) {
          result.push_back(Interval{a, a + s, t});
        }
      }
    }
    return result;
  }

  long long ball_count(int max_size) noexcept {
    long long total = 0;
    for (long long s = 0; s <= max_size; ++s) {
      total += (s + 1) * (s + 1);
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verifiers
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_identities(int n_max) {
    if (n_max < 1) {
      throw Error("verify_identities needs n_max >= 1");
    }
    VerificationReport report("identities", {{"n_max", n_max}});
    Stopwatch          clock;
    auto               x = [](int e) { return power(Gen::x, e); };
    auto               y = [](int e) { return power(Gen::y, e); };

    auto check = [&report](int item, MonoWord const& lhs, MonoWord const& rhs) {
      auto l = eval_word(lhs);
      auto r = eval_word(rhs);
      report.expect(l == r, [&] {
        return "(" + std::to_string(item) + ") " + describe(lhs) + " = "
               + to_string(l) + " but " + describe(rhs) + " = "
               + to_string(r);
      });
    };

    for (int n = 0; n <= n_max; ++n) {
      for (int k = n + 1; k <= n_max; ++k) {
        check(1,
              concat({x(n), y(k), x(k + 1)}),
              concat({x(n + 1), y(k + 1), x(k + 1)}));
      }
    }
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        check(2,
              concat({y(1), x(n), y(k)}),
              concat({x(n - 1), y(n), x(n - k)}));
      }
    }
    for (int n = 1; n <= n_max; ++n) {
      for (int k = n + 1; k <= n_max; ++k) {
        check(3, concat({y(1), x(n), y(k)}), concat({x(n - 1), y(k)}));
      }
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }

  VerificationReport verify_normal_forms(int max_size, int max_length) {
    if (max_size < 0 || max_length < max_size) {
      throw Error("verify_normal_forms needs 0 <= max_size <= max_length");
    }
    VerificationReport report(
        "normal-forms", {{"size", max_size}, {"word_length", max_length}});
    Stopwatch clock;

    // (i) bijection between the ball and the normal-form parameters.
    auto                ball = enumerate_ball(max_size);
    std::set<MonoWord>  nf_words;
    for (auto const& m : ball) {
      auto f = normal_form(m);
      auto w = nf_word(f);
      report.expect(eval_word(w) == m && to_interval(f) == m, [&] {
        return "normal form " + to_string(f) + " does not evaluate to "
               + to_string(m);
      });
      nf_words.insert(std::move(w));
    }
    report.expect(nf_words.size() == ball.size(), [&] {
      return "normal-form words are not distinct: "
             + std::to_string(nf_words.size()) + " words for "
             + std::to_string(ball.size()) + " elements";
    });

    std::size_t parameter_count = 0;
    auto        hit             = [&](NormalForm const& f) {
      ++parameter_count;
      auto m = eval_word(nf_word(f));
      report.expect(m.size() <= max_size && normal_form(m) == f, [&] {
        return "normal form " + to_string(f) + " evaluates to " + to_string(m)
               + " whose normal form is " + to_string(normal_form(m));
      });
    };
    for (int n = 0; n <= max_size; ++n) {
      for (int k = 0; k <= n; ++k) {
        hit(NormalForm::type_i(n, k));
      }
    }
    for (int k = 1; k <= max_size; ++k) {
      for (int n = 0; n < k; ++n) {
        for (int j = 0; j <= k; ++j) {
          hit(NormalForm::type_ii(n, k, j));
        }
      }
    }
    report.expect(parameter_count == ball.size(), [&] {
      return std::to_string(parameter_count) + " normal forms but "
             + std::to_string(ball.size()) + " elements";
    });

    // (ii) prefix closure.
    for (auto const& w : nf_words) {
      for (std::size_t len = 0; len <= w.size(); ++len) {
        MonoWord prefix(w.begin(), w.begin() + static_cast<long>(len));
        report.expect(nf_word(normal_form(eval_word(prefix))) == prefix, [&] {
          return "prefix " + describe(prefix) + " of " + describe(w)
                 + " is not a normal-form word";
        });
      }
    }

    // (iii) every word agrees with the normal form of its value.
    for (int len = 0; len <= max_length; ++len) {
      for (auto const& w : all_words(static_cast<std::size_t>(len))) {
        auto m = eval_word(w);
        report.expect(eval_word(nf_word(normal_form(m))) == m, [&] {
          return "word " + describe(w) + " disagrees with its normal form "
                 + to_string(normal_form(m));
        });
      }
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }

}  // namespace fim::mono
