#include "neurobetti/io.hpp"

#include <algorithm>
#include <sstream>

#include "neurobetti/errors.hpp"

namespace neurobetti {

nlohmann::ordered_json betti_to_json(const BettiTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n();
  doc["total"] = table.total();
  auto graded = nlohmann::ordered_json::array();
  for (const auto& [key, count] : table.graded()) graded.push_back({key.first, key.second, count});
  doc["graded"] = graded;
  auto multi = nlohmann::ordered_json::array();
  for (const auto& [idx, count] : table.entries()) multi.push_back({idx[0], idx[1], idx[2], count});
  doc["multigraded"] = multi;
  return doc;
}

namespace {

int get_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string("betti json: ") + what + " must be an integer");
  return v.get<int>();
}

std::uint64_t get_count(const nlohmann::json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError("betti json: counts must be nonnegative integers");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

ParsedBetti betti_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n")) throw InputError("betti json: expected an object with \"n\"");
  ParsedBetti out;
  out.n = get_int(doc["n"], "n");
  if (out.n < 1) throw InputError("betti json: n must be positive");
  if (doc.contains("multigraded")) {
    BettiTable table(out.n);
    for (const auto& row : doc["multigraded"]) {
      if (!row.is_array() || row.size() != 4) throw InputError("betti json: multigraded rows are [w,u,v,c]");
      const int w = get_int(row[0], "w");
      const int u = get_int(row[1], "u");
      const int v = get_int(row[2], "v");
      if (w < 0 || u < 0 || v < 0) throw InputError("betti json: negative index");
      table.add(w, u, v, get_count(row[3]));
    }
    out.graded = table.graded();
    out.table = std::move(table);
  } else if (doc.contains("graded")) {
    for (const auto& row : doc["graded"]) {
      if (!row.is_array() || row.size() != 3) throw InputError("betti json: graded rows are [w,j,c]");
      const int w = get_int(row[0], "w");
      const int j = get_int(row[1], "j");
      if (w < 0 || j < 0) throw InputError("betti json: negative index");
      const auto c = get_count(row[2]);
      if (c) out.graded[{w, j}] += c;
    }
  } else {
    throw InputError("betti json: needs \"graded\" or \"multigraded\"");
  }
  return out;
}

std::string render_betti_triangle(const GradedBetti& graded) {
  int max_w = 0;
  int max_r = 0;
  int min_r = 0;
  for (const auto& [key, count] : graded) {
    max_w = std::max(max_w, key.first);
    max_r = std::max(max_r, key.second - key.first);
    min_r = std::min(min_r, key.second - key.first);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  std::vector<std::string> total{"total:"};
  for (int w = 0; w <= max_w; ++w) {
    head.push_back(std::to_string(w));
    std::uint64_t sum = 0;
    for (const auto& [key, count] : graded) {
      if (key.first == w) sum += count;
    }
    total.push_back(std::to_string(sum));
  }
  rows.push_back(head);
  rows.push_back(total);
  for (int r = min_r; r <= max_r; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int w = 0; w <= max_w; ++w) {
      const auto it = graded.find({w, w + r});
      row.push_back(it == graded.end() ? "." : std::to_string(it->second));
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_marginals(const PiercingProfile& profile) {
  int last = 0;
  for (int k = 0; k < profile.n; ++k) {
    if (profile.marginal(k)) last = k;
  }
  std::string out;
  for (int k = 0; k <= last && k < profile.n; ++k) {
    if (k) out += ' ';
    out += "j" + std::to_string(k) + "=" + std::to_string(profile.marginal(k));
  }
  return out;
}

std::string render_profile_table(const PiercingProfile& profile) {
  std::string out;
  for (int k = 0; k < profile.n; ++k) {
    for (int l = 0; l < profile.n; ++l) {
      if (!profile.at(k, l)) continue;
      if (!out.empty()) out += ' ';
      out += "j" + std::to_string(k) + std::to_string(l) + "=" + std::to_string(profile.at(k, l));
    }
  }
  return out;
}

nlohmann::ordered_json profile_to_json(const PiercingProfile& profile) {
  nlohmann::ordered_json doc;
  doc["n"] = profile.n;
  doc["jk"] = profile.jk;
  auto table = nlohmann::ordered_json::array();
  for (int k = 0; k < profile.n; ++k) {
    for (int l = 0; l < profile.n; ++l) {
      if (profile.at(k, l)) table.push_back({k, l, profile.at(k, l)});
    }
  }
  doc["jkl"] = table;
  return doc;
}

nlohmann::ordered_json cf_to_json(const CanonicalForm& cf) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& f : cf.elements) out.push_back(to_string(f));
  return out;
}

GradedBetti parse_linear_strand(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  GradedBetti out;
  std::string token;
  int w = 1;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0) throw InputError("betti list: bad entry '" + token + "'");
    if (value) out[{w, w + 1}] = static_cast<std::uint64_t>(value);
    ++w;
  }
  return out;
}

}  // namespace neurobetti
