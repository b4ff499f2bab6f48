// Copyright 2026 The transposynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <json.hpp>

#include "transposynth/simulator.hpp"

namespace transposynth {

/** {kind, checked, failed, sampled, records: [{state, expected, actual, pass}]} */
inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rep.records) {
    records.push_back({{"state", r.state.to_string()},
                       {"expected", r.expected.to_string()},
                       {"actual", r.actual.to_string()},
                       {"pass", r.pass}});
  }
  return {{"kind", rep.kind},
          {"checked", rep.checked},
          {"failed", rep.failed},
          {"sampled", rep.sampled},
          {"records", records}};
}

}  // namespace transposynth
