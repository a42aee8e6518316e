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

#include "swipt/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

std::string Where(std::string_view source, const YAML::Mark& mark) {
  std::ostringstream os;
  os << source << ":" << (mark.line + 1) << ": ";
  return os.str();
}

std::string BaseField(const std::string& key) {
  constexpr std::string_view kSuffix = "_dbm";
  return key.ends_with(kSuffix) ? key.substr(0, key.size() - kSuffix.size())
                                : key;
}

bool IsField(const std::string& key) {
  for (const auto& name : FieldNames()) {
    if (key == name) return true;
  }
  return false;
}

class Loader {
 public:
  explicit Loader(std::string_view source) : source_(source) {}

  void Walk(const YAML::Node& node, const std::string& section) {
    if (!node.IsMap()) {
      throw Error(ErrorCode::kConfig,
                  Where(source_, node.Mark()) + "expected a mapping" +
                      (section.empty() ? "" : " under '" + section + "'"));
    }
    for (const auto& kv : node) {
      const std::string key = kv.first.as<std::string>();
      const YAML::Node& value = kv.second;
      if (value.IsMap()) {
        Walk(value, section.empty() ? key : section + "." + key);
        continue;
      }
      Assign(key, value);
    }
  }

  SystemParams result() const { return params_; }

 private:
  void Assign(const std::string& key, const YAML::Node& value) {
    const std::string where = Where(source_, value.Mark());
    const std::string base = BaseField(key);
    if (!IsField(base)) {
      throw Error(ErrorCode::kConfig, where + "unknown key '" + key + "'");
    }
    if (!value.IsScalar()) {
      throw Error(ErrorCode::kConfig,
                  where + "'" + key + "' must be a numeric scalar");
    }
    if (auto it = seen_.find(base); it != seen_.end()) {
      throw Error(ErrorCode::kConfig, where + "'" + key +
                                          "' duplicates the definition on line " +
                                          std::to_string(it->second));
    }
    const std::string& text = value.Scalar();
    double number = 0.0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), number);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::kConfig,
                  where + "'" + key + "' is not a number: '" + text + "'");
    }
    try {
      SetField(params_, key, number);
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfig, where + e.what());
    }
    seen_[base] = value.Mark().line + 1;
  }

  std::string source_;
  SystemParams params_ = ReferenceParams();
  std::map<std::string, int> seen_;
};

}  // namespace

SystemParams ParseConfig(std::string_view text, std::string_view source_name) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorCode::kConfig,
                Where(source_name, e.mark) + e.msg);
  }
  Loader loader(source_name);
  if (root.IsNull()) return loader.result();
  loader.Walk(root, "");
  return loader.result();
}

SystemParams LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str(), path);
}

}  // namespace swipt
