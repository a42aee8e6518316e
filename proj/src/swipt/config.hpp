// Copyright 2026 The swipt-link Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWIPT_CONFIG_HPP_
#define SWIPT_CONFIG_HPP_

#include <string>
#include <string_view>

#include "swipt/params.hpp"

namespace swipt {

// YAML link-budget file. Leaf keys are SystemParams field names, or
// "<field>_dbm" for p_ave, p_peak, noise_power and eh_sensitivity. Mappings
// may nest leaves under free-form section names:
//
//   transmitter:
//     p_ave_dbm: 10
//     p_peak: 0.03
//   receiver:
//     eh_sensitivity_dbm: -20
//
// Fields not mentioned keep their ReferenceParams() value. Errors carry
// "<source>:<line>:" context. The result is not validated.
SystemParams ParseConfig(std::string_view text,
                         std::string_view source_name = "<config>");
SystemParams LoadConfigFile(const std::string& path);

}  // namespace swipt

#endif  // SWIPT_CONFIG_HPP_
