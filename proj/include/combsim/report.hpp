#pragma once

// Command reports. Two renderings of the same record:
//
//   plain   -- line-oriented "key: value" text; keys keep insertion order and
//              a key may repeat (list entries). Grammar in the README.
//   machine -- one self-delimiting JSON object per report, one line.
//
// Identical inputs must produce byte-identical reports in either form.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace combsim {

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string status = "ok";
  std::string message;  // only for status == "error"
  // When set, the plain rendering IS this text (e.g. `example` emits a matrix
  // file that can be fed straight back into `validate`).
  std::string payload;
  int exit_code = 0;

  void add(const std::string& key, nlohmann::ordered_json value) {
    results[key] = std::move(value);
  }

  std::string render_plain() const {
    if (!payload.empty()) return payload;
    std::string out;
    out += "command: " + command + "\n";
    for (const auto& [key, value] : inputs) {
      out += key + ": " + value + "\n";
    }
    out += "status: " + status + "\n";
    if (!message.empty()) {
      out += "message: " + message + "\n";
    }
    for (const auto& [key, value] : results.items()) {
      if (value.is_array()) {
        for (const auto& item : value) {
          out += key + ": " + plain_value(item) + "\n";
        }
      } else {
        out += key + ": " + plain_value(value) + "\n";
      }
    }
    return out;
  }

  std::string render_machine() const {
    nlohmann::ordered_json record;
    record["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [key, value] : inputs) in[key] = value;
    record["inputs"] = std::move(in);
    record["status"] = status;
    if (!message.empty()) record["message"] = message;
    record["results"] = results;
    if (!payload.empty()) record["payload"] = payload;
    return record.dump() + "\n";
  }

 private:
  static std::string plain_value(const nlohmann::ordered_json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
  }
};

}  // namespace combsim
