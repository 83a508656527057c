// Command-line front end: one subcommand per job type, flags mirror the JSON config keys.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "smallgen/cli/job.hpp"

namespace {

using smallgen::cli::json;
using smallgen::cli::KeySpec;
using smallgen::cli::KeyType;

std::string flag_name(const std::string& key) {
  std::string s = key;
  for (char& c : s)
    if (c == '_') c = '-';
  return "--" + s;
}

/// "1,0,-1" or a JSON array.
json parse_list(const std::string& text) {
  if (!text.empty() && text.front() == '[') return json::parse(text);
  json out = json::array();
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json flag_value(const KeySpec& spec, const std::string& text) {
  switch (spec.type) {
    case KeyType::boolean:
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      throw smallgen::cli::ConfigError(flag_name(spec.name) + " expects true or false");
    case KeyType::polynomial:
    case KeyType::places: return parse_list(text);
    default: return text;
  }
}

struct Command {
  CLI::App* app = nullptr;
  std::string name;
  std::map<std::string, std::optional<std::string>> values;  // config key -> flag text
  std::map<std::string, std::optional<std::string>> algebra;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit small-generator bounds and unit-group experiments for arithmetic Fuchsian groups"};
  app.require_subcommand(1);
  std::string config_path, out_path, csv_path;
  unsigned workers = 1;
  bool timings = false;

  std::vector<Command> commands;
  commands.reserve(smallgen::cli::commands().size());
  for (const auto& name : smallgen::cli::commands()) {
    Command cmd;
    cmd.name = name;
    cmd.app = app.add_subcommand(name);
    cmd.app->add_option("--config", config_path, "JSON config file; flags override its keys");
    cmd.app->add_option("--out", out_path, "report path (default: stdout)");
    cmd.app->add_option("--csv", csv_path, "CSV path for tabular commands");
    cmd.app->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
    cmd.app->add_flag("--timings", timings, "include wall-clock timings in the report");
    commands.push_back(std::move(cmd));
  }
  for (auto& cmd : commands) {
    for (const auto& spec : smallgen::cli::schema(cmd.name)) {
      if (spec.type == KeyType::algebra) {
        for (const char* k : {"a", "b", "field_minpoly", "place_index", "order_basis"})
          cmd.app->add_option(flag_name(k), cmd.algebra[k], std::string("algebra ") + k);
        continue;
      }
      std::string help = spec.help;
      if (!spec.choices.empty()) {
        help += help.empty() ? "one of:" : " (one of:";
        for (const auto& c : spec.choices) help += " " + c;
        if (!spec.help.empty()) help += ")";
      }
      cmd.app->add_option(flag_name(spec.name), cmd.values[spec.name], help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : smallgen::cli::kBadInput;
  }

  try {
    const Command* chosen = nullptr;
    for (const auto& cmd : commands)
      if (cmd.app->parsed()) chosen = &cmd;

    json config = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw smallgen::cli::ConfigError("cannot read config " + config_path);
      config = json::parse(in);
      if (config.contains("command") && config["command"] != chosen->name)
        throw smallgen::cli::ConfigError("config file is for command '" + config["command"].get<std::string>() + "'");
    }
    config["command"] = chosen->name;
    for (const auto& spec : smallgen::cli::schema(chosen->name)) {
      auto it = chosen->values.find(spec.name);
      if (it != chosen->values.end() && it->second) config[spec.name] = flag_value(spec, *it->second);
    }
    for (const auto& [k, v] : chosen->algebra) {
      if (!v) continue;
      if (!config.contains("algebra")) config["algebra"] = json::object();
      if (k == "field_minpoly") config["algebra"][k] = parse_list(*v);
      else if (k == "order_basis") config["algebra"][k] = json::parse(*v);
      else if (k == "place_index") config["algebra"][k] = *v;
      else config["algebra"][k] = *v;
    }

    const auto outcome = smallgen::cli::run_job(config, {workers, timings});
    const std::string text = smallgen::cli::report_text(outcome.report);
    if (out_path.empty()) std::cout << text;
    else smallgen::cli::atomic_write(out_path, text);
    if (!csv_path.empty()) {
      if (outcome.csv.empty()) throw smallgen::cli::ConfigError("command '" + chosen->name + "' has no tabular output");
      smallgen::cli::atomic_write(csv_path, outcome.csv);
    }
    return outcome.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return smallgen::cli::kBadInput;
  } catch (const smallgen::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return smallgen::cli::kBadInput;
  } catch (const smallgen::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
