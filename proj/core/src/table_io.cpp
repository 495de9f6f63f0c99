#include "absorb/table_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace absorb {

FiniteSemigroup parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw BadParameter("empty table file");
  std::size_t n = 0;
  try {
    n = std::stoul(line);
  } catch (const std::exception&) {
    throw BadParameter("first line must be the element count, got: " + line);
  }
  if (n == 0) throw BadParameter("element count must be >= 1");

  std::vector<std::vector<long long>> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw BadParameter("expected " + std::to_string(n) + " rows");
    std::istringstream row(line);
    std::vector<long long> vals;
    long long v;
    while (row >> v) vals.push_back(v);
    if (vals.size() != n) {
      throw BadParameter("row " + std::to_string(i) + " has " + std::to_string(vals.size()) +
                         " entries, expected " + std::to_string(n));
    }
    grid.push_back(std::move(vals));
  }

  std::optional<std::vector<std::string>> labels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("labels:", 0) == 0) {
      std::istringstream ls(line.substr(7));
      std::vector<std::string> names;
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      labels = std::move(names);
    } else {
      throw BadParameter("unexpected trailing line: " + line);
    }
  }
  return FiniteSemigroup::validate(grid, std::move(labels));
}

std::string write_table_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.size() << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != 0) out << ' ';
      out << s.sum(i, j);
    }
    out << "\n";
  }
  if (s.has_labels()) {
    out << "labels:";
    for (const auto& l : *s.labels()) out << ' ' << l;
    out << "\n";
  }
  return out.str();
}

FiniteSemigroup parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadParameter(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("table")) throw BadParameter("JSON needs \"n\" and \"table\"");
  std::size_t n = j.at("n").get<std::size_t>();
  auto grid = j.at("table").get<std::vector<std::vector<long long>>>();
  if (grid.size() != n) throw BadParameter("\"table\" row count does not match \"n\"");
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteSemigroup::validate(grid, std::move(labels));
}

std::string write_table_json(const FiniteSemigroup& s) {
  nlohmann::ordered_json j;
  j["n"] = s.size();
  std::vector<std::vector<FiniteSemigroup::elem>> grid(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    grid[i].reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) grid[i].push_back(s.sum(i, k));
  }
  j["table"] = grid;
  if (s.has_labels()) j["labels"] = *s.labels();
  return j.dump();
}

FiniteSemigroup parse_table_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_table_json(text);
    break;
  }
  return parse_table_text(text);
}

FiniteSemigroup load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_auto(buf.str());
}

}  // namespace absorb
