#include "fim/report.hpp"

#include <utility>  // for move

namespace fim {

  VerificationReport::VerificationReport(std::string    check_name,
                                         nlohmann::json parameters)
      : check(std::move(check_name)), params(std::move(parameters)) {}

  void VerificationReport::fail(std::string counterexample) {
    pass = false;
    ++failures;
    if (counterexamples.size() < max_counterexamples) {
      counterexamples.push_back(std::move(counterexample));
    }
  }

  void to_json(nlohmann::json& j, VerificationReport const& r) {
    j = nlohmann::json{{"check", r.check},
                       {"params", r.params},
                       {"pass", r.pass},
                       {"checked", r.checked},
                       {"failures", r.failures},
                       {"counterexamples", r.counterexamples},
                       {"stats", r.stats},
                       {"elapsed_ms", r.elapsed_ms}};
  }

}  // namespace fim
