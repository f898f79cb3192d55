#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/strategy.hpp"

namespace wordle {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json node_to_json(const StrategyNode& node, int length) {
  ordered_json children = ordered_json::object();
  for (const auto& [code, child] : node.children) {
    children[pattern_string(code, length)] = node_to_json(child, length);
  }
  ordered_json j = ordered_json::object();
  j["guess"] = node.guess.str();
  j["children"] = std::move(children);
  return j;
}

StrategyNode node_from_json(const ordered_json& j, int& length, int depth) {
  if (depth > 64) throw TreeFormatError("tree is nested too deeply");
  if (!j.is_object()) throw TreeFormatError("tree node must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "guess" && key != "children") throw TreeFormatError("unknown node field '" + key + "'");
  }
  const auto guess = j.find("guess");
  if (guess == j.end() || !guess->is_string()) throw TreeFormatError("node is missing a string 'guess'");
  StrategyNode node;
  try {
    node.guess = Word(guess->get<std::string>());
  } catch (const LexiconError& e) {
    throw TreeFormatError(e.what());
  }
  if (length == 0) length = node.guess.length();
  if (node.guess.length() != length) {
    throw TreeFormatError("guess '" + node.guess.str() + "' has the wrong length");
  }

  const auto children = j.find("children");
  if (children == j.end()) return node;
  if (!children->is_object()) throw TreeFormatError("'children' must be an object");
  for (const auto& [key, value] : children->items()) {
    Pattern p;
    try {
      p = parse_pattern(key, length);
    } catch (const PatternError& e) {
      throw TreeFormatError("bad child key: " + std::string(e.what()));
    }
    if (p.all_green()) throw TreeFormatError("all-green child '" + key + "' is not allowed");
    node.children.emplace_back(p.code(), node_from_json(value, length, depth + 1));
  }
  std::sort(node.children.begin(), node.children.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return node;
}

}  // namespace

std::string serialize_tree(const StrategyTree& tree) {
  return node_to_json(tree.root, tree.word_length()).dump();
}

StrategyTree load_tree(std::string_view document) {
  // The parser keeps only the last of repeated keys, so catch them here.
  std::vector<std::set<std::string>> open_objects;
  const auto reject_duplicates = [&](int, ordered_json::parse_event_t event, ordered_json& parsed) {
    using event_t = ordered_json::parse_event_t;
    if (event == event_t::object_start) {
      open_objects.emplace_back();
    } else if (event == event_t::object_end) {
      open_objects.pop_back();
    } else if (event == event_t::key && !open_objects.back().insert(parsed.get<std::string>()).second) {
      throw TreeFormatError("duplicate key '" + parsed.get<std::string>() + "'");
    }
    return true;
  };
  ordered_json j;
  try {
    j = ordered_json::parse(document.begin(), document.end(), reject_duplicates);
  } catch (const nlohmann::json::parse_error& e) {
    throw TreeFormatError(std::string("malformed tree document: ") + e.what());
  }
  int length = 0;
  return StrategyTree{node_from_json(j, length, 0)};
}

void save_tree(const std::string& path, const StrategyTree& tree) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TreeFormatError("cannot write '" + path + "'");
  out << serialize_tree(tree) << '\n';
}

StrategyTree read_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TreeFormatError("cannot open '" + path + "'");
  const std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_tree(doc);
}

}  // namespace wordle
