#ifndef FIM_REPORT_HPP_
#define FIM_REPORT_HPP_

#include <chrono>   // for steady_clock
#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t, int64_t
#include <string>   // for string
#include <vector>   // for vector

#include <nlohmann/json.hpp>

namespace fim {

  //! Outcome of one exhaustive bounded-scale check.
  struct VerificationReport {
    //! At most this many counterexamples are stored; `failures` keeps the
    //! full count.
    static constexpr std::size_t max_counterexamples = 50;

    VerificationReport(std::string check_name, nlohmann::json parameters);

    std::string              check;
    nlohmann::json           params;
    bool                     pass     = true;
    std::uint64_t            checked  = 0;
    std::uint64_t            failures = 0;
    std::vector<std::string> counterexamples;
    //! Check-specific counts, e.g. edges per class.
    nlohmann::json           stats = nlohmann::json::object();
    std::int64_t             elapsed_ms = 0;

    //! Records a failed instance.
    void fail(std::string counterexample);

    //! Counts one checked instance and records `what()` if `ok` is false.
    template <typename F>
    bool expect(bool ok, F&& what) {
      ++checked;
      return require(ok, what);
    }

    //! As expect, but does not count an instance.
    template <typename F>
    bool require(bool ok, F&& what) {
      if (!ok) {
        fail(what());
      }
      return ok;
    }
  };

  class Stopwatch {
   public:
    Stopwatch() : _start(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_ms() const {
      return std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - _start)
          .count();
    }

   private:
    std::chrono::steady_clock::time_point _start;
  };

  void to_json(nlohmann::json& j, VerificationReport const& r);

}  // namespace fim

#endif  // FIM_REPORT_HPP_
