#pragma once

// Batch ingestion and result emission: presentation files (semicolon lines
// or JSON), report serialization, the content-addressed report cache, and
// the parallel analysis driver.

#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mlift/mlift.hpp"

namespace mlift {

inline const char* kToolVersion = "mlift 1.0.0";

struct ParsedRecord {
  int line = 0;
  Presentation presentation;
};

struct ParseError {
  int line = 0;
  std::string message;
};

struct ParsedFile {
  std::vector<ParsedRecord> records;
  std::vector<ParseError> errors;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

// line format: name; relator; [meridian]; [longitude]
// '#' starts a comment; blank lines are skipped
inline ParsedFile parse_presentation_lines(std::istream& in) {
  ParsedFile out;
  std::string line;
  int lineno = 0;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(detail::trim(field));
    if (fields.size() < 2 || fields.size() > 4) {
      out.errors.push_back({lineno, "expected 2-4 semicolon fields"});
      continue;
    }
    try {
      ParsedRecord rec;
      rec.line = lineno;
      rec.presentation.name = fields[0];
      if (fields[0].empty()) throw std::invalid_argument("empty name");
      if (!names.insert(fields[0]).second)
        throw std::invalid_argument("duplicate name '" + fields[0] + "'");
      rec.presentation.relator = parse_cyclic(fields[1], 2);
      if (rec.presentation.relator.empty())
        throw std::invalid_argument("relator reduces to the empty word");
      if (fields.size() >= 3 && !fields[2].empty())
        rec.presentation.meridian = parse_word(fields[2], 2);
      if (fields.size() >= 4 && !fields[3].empty())
        rec.presentation.longitude = parse_word(fields[3], 2);
      out.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
  return out;
}

// JSON alternative: [{"name": ..., "relator": ..., "meridian"?, "longitude"?}]
inline ParsedFile parse_presentation_json(const std::string& text) {
  ParsedFile out;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    out.errors.push_back({0, e.what()});
    return out;
  }
  if (!doc.is_array()) {
    out.errors.push_back({0, "top-level JSON value must be an array"});
    return out;
  }
  std::set<std::string> names;
  int index = 0;
  for (const auto& item : doc) {
    ++index;
    try {
      ParsedRecord rec;
      rec.line = index;
      rec.presentation.name = item.at("name").get<std::string>();
      if (!names.insert(rec.presentation.name).second)
        throw std::invalid_argument("duplicate name");
      rec.presentation.relator =
          parse_cyclic(item.at("relator").get<std::string>(), 2);
      if (rec.presentation.relator.empty())
        throw std::invalid_argument("relator reduces to the empty word");
      if (item.contains("meridian") && !item["meridian"].is_null())
        rec.presentation.meridian =
            parse_word(item["meridian"].get<std::string>(), 2);
      if (item.contains("longitude") && !item["longitude"].is_null())
        rec.presentation.longitude =
            parse_word(item["longitude"].get<std::string>(), 2);
      out.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      out.errors.push_back({index, e.what()});
    }
  }
  return out;
}

inline ParsedFile parse_presentations(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '[')
    return parse_presentation_json(text);
  std::istringstream is(text);
  return parse_presentation_lines(is);
}

// --- report serialization -----------------------------------------------

inline std::string join_csv_ints(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline nlohmann::ordered_json report_to_json(const MliftReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = status_name(r.status);
  j["b1_ok"] = r.b1_ok;
  j["geometric"] = r.geometric;
  j["fibered"] = r.fibered;
  if (r.k > 0) {
    j["k"] = r.k;
    j["mu"] = join_csv_ints(r.mu);
    j["surface_genus"] = *r.surface_genus;
    j["normalized_relator"] = r.normalized_relator;
  } else {
    j["k"] = nullptr;
    j["mu"] = nullptr;
    j["surface_genus"] = nullptr;
    j["normalized_relator"] = nullptr;
  }
  j["m"] = r.m_found ? nlohmann::ordered_json(*r.m_found)
                     : nlohmann::ordered_json(nullptr);
  j["n_threshold"] = r.n_threshold
                         ? nlohmann::ordered_json(*r.n_threshold)
                         : nlohmann::ordered_json(nullptr);
  if (r.surgery) {
    j["surgery"] = {{"n_min", r.surgery->n_min},
                    {"width_lambda", r.surgery->width_lambda},
                    {"b", r.surgery->b},
                    {"condition", r.surgery->condition}};
  } else {
    j["surgery"] = nullptr;
  }
  if (!r.surgery_note.empty()) j["surgery_note"] = r.surgery_note;
  nlohmann::ordered_json conds = nlohmann::ordered_json::array();
  for (const ConditionResult& c : r.conditions) {
    nlohmann::ordered_json jc;
    jc["m"] = c.m;
    jc["cond1"] = c.cond1;
    jc["cond2"] = c.cond2;
    jc["cond3"] = c.cond3;
    std::vector<std::string> c4;
    for (Cond4 o : c.cond4)
      c4.push_back(o == Cond4::Pass ? "pass"
                                    : o == Cond4::Fail ? "fail" : "undetermined");
    jc["cond4"] = c4;
    conds.push_back(jc);
  }
  j["conditions"] = conds;
  j["whitehead_calls"] = r.whitehead_calls;
  return j;
}

inline MliftReport report_from_json(const nlohmann::json& j) {
  MliftReport r;
  r.name = j.at("name").get<std::string>();
  std::string st = j.at("status").get<std::string>();
  for (Status s : {Status::Ok, Status::Fibered, Status::NotB1One,
                   Status::NotRealizable, Status::MissingGen,
                   Status::MExhausted, Status::Cond4Undetermined})
    if (st == status_name(s)) r.status = s;
  r.b1_ok = j.at("b1_ok").get<bool>();
  r.geometric = j.at("geometric").get<bool>();
  r.fibered = j.at("fibered").get<bool>();
  if (!j.at("k").is_null()) {
    r.k = j.at("k").get<int>();
    r.surface_genus = j.at("surface_genus").get<int>();
    std::stringstream ss(j.at("mu").get<std::string>());
    std::string tok;
    while (std::getline(ss, tok, ',')) r.mu.push_back(std::stoll(tok));
    r.normalized_relator = j.at("normalized_relator").get<std::string>();
  }
  if (!j.at("m").is_null()) r.m_found = j.at("m").get<int>();
  if (!j.at("n_threshold").is_null())
    r.n_threshold = j.at("n_threshold").get<long long>();
  if (!j.at("surgery").is_null()) {
    SurgeryBound sb;
    sb.n_min = j["surgery"].at("n_min").get<long long>();
    sb.width_lambda = j["surgery"].at("width_lambda").get<int>();
    sb.b = j["surgery"].at("b").get<long long>();
    sb.condition = j["surgery"].at("condition").get<std::string>();
    r.surgery = sb;
  }
  if (j.contains("surgery_note")) r.surgery_note = j["surgery_note"];
  for (const auto& jc : j.at("conditions")) {
    ConditionResult c;
    c.m = jc.at("m").get<int>();
    c.cond1 = jc.at("cond1").get<bool>();
    c.cond2 = jc.at("cond2").get<bool>();
    for (bool b : jc.at("cond3")) c.cond3.push_back(b);
    for (const auto& s : jc.at("cond4")) {
      std::string o = s.get<std::string>();
      c.cond4.push_back(o == "pass" ? Cond4::Pass
                                    : o == "fail" ? Cond4::Fail
                                                  : Cond4::Undetermined);
    }
    r.conditions.push_back(std::move(c));
  }
  r.whitehead_calls = j.at("whitehead_calls").get<long long>();
  return r;
}

// result rows: one line per analyzed presentation
inline std::string result_csv_header() {
  return "name,geometric,fibered,k,m,n_threshold,surgery_n_min,status";
}

inline std::string result_csv_row(const MliftReport& r) {
  auto opt = [](auto v, bool present) {
    return present ? std::to_string(v) : std::string();
  };
  std::string row = r.name;
  row += ",";
  row += r.k > 0 ? (r.geometric ? "true" : "false") : "";
  row += ",";
  row += r.k > 0 ? (r.fibered ? "true" : "false") : "";
  row += ",";
  row += opt(r.k, r.k > 0);
  row += ",";
  row += opt(r.m_found.value_or(0), r.m_found.has_value());
  row += ",";
  row += opt(r.n_threshold.value_or(0), r.n_threshold.has_value());
  row += ",";
  row += opt(r.surgery ? r.surgery->n_min : 0, r.surgery.has_value());
  row += ",";
  row += status_name(r.status);
  return row;
}

// table rows: the summary-table shape (name, k, m, threshold, status)
inline std::string table_csv_header() { return "name,k,m,n_threshold,status"; }

inline std::string table_csv_row(const MliftReport& r) {
  std::string row = r.name;
  row += ",";
  row += r.k > 0 ? std::to_string(r.k) : "";
  row += ",";
  row += r.m_found ? std::to_string(*r.m_found) : "";
  row += ",";
  row += r.n_threshold ? std::to_string(*r.n_threshold) : "";
  row += ",";
  row += status_name(r.status);
  return row;
}

// --- cache ----------------------------------------------------------------

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// cache key: tool version, the phi-normalized relator, transformed
// peripheral words, and the semantic analysis settings
inline std::string cache_key(const Presentation& normalized, const Config& cfg) {
  std::string key = kToolVersion;
  key += "|";
  key += to_string(normalized.relator, 2);
  key += "|";
  key += normalized.meridian ? to_string(*normalized.meridian, 2) : "-";
  key += "|";
  key += normalized.longitude ? to_string(*normalized.longitude, 2) : "-";
  key += "|maxm=";
  key += std::to_string(cfg.max_m);
  key += "|c4=";
  key += std::to_string(cfg.cond4_bound);
  std::ostringstream os;
  os << std::hex << fnv1a64(key);
  return os.str();
}

// analysis of one presentation with an optional on-disk report cache
inline MliftReport analyze_one(const Presentation& p, const Config& cfg,
                               const std::string& cache_dir) {
  std::optional<std::string> cache_path;
  if (!cache_dir.empty()) {
    auto phi = compute_phi(p);
    if (phi) {
      auto [norm, sub] = normalize(p, *phi);
      bool has_x = false, has_y = false;
      for (const Letter& l : norm.relator.letters())
        (l.gen ? has_y : has_x) = true;
      if (has_x && has_y) {
        cache_path = cache_dir + "/" + cache_key(norm, cfg) + ".json";
        std::ifstream in(*cache_path);
        if (in) {
          try {
            nlohmann::json j = nlohmann::json::parse(in);
            MliftReport r = report_from_json(j);
            r.name = p.name;
            return r;
          } catch (const std::exception&) {
            // unreadable cache entries are recomputed
          }
        }
      }
    }
  }
  MliftReport r = find_min_m(p, cfg);
  if (cache_path) {
    MliftReport stored = r;
    stored.name = "";
    std::ofstream out(*cache_path);
    out << report_to_json(stored).dump(2) << "\n";
  }
  return r;
}

// worker pool over records; each worker owns a record end to end and the
// output keeps input order, so parallel runs match serial ones byte for byte
inline std::vector<MliftReport> analyze_all(const std::vector<ParsedRecord>& records,
                                            const Config& cfg,
                                            const std::string& cache_dir) {
  std::vector<MliftReport> out(records.size());
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < records.size(); ++i)
      out[i] = analyze_one(records[i].presentation, cfg, cache_dir);
    return out;
  }
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= records.size()) return;
        i = next++;
      }
      out[i] = analyze_one(records[i].presentation, cfg, cache_dir);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace mlift
