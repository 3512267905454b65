#include "sposet/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sposet {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(std::string const& message) {
  throw std::invalid_argument(message);
}

Json parse_text(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (Json::parse_error const& err) {
    // Convert the byte offset to a line/column pair.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream out;
    out << "syntax error at line " << line << ", column " << column;
    fail(out.str());
  }
}

std::string require_string(Json const& j, std::string const& key) {
  if (!j.contains(key) || !j[key].is_string())
    fail("expected string field \"" + key + "\"");
  return j[key].get<std::string>();
}

Json const& require_array(Json const& j, std::string const& key) {
  if (!j.contains(key) || !j[key].is_array())
    fail("expected array field \"" + key + "\"");
  return j[key];
}

void require_kind(Json const& j, std::string const& kind) {
  if (!j.is_object()) fail("expected a JSON object");
  if (require_string(j, "kind") != kind)
    fail("expected document of kind \"" + kind + "\"");
}

std::vector<std::string> read_names(Json const& j) {
  std::vector<std::string> names;
  for (Json const& entry : require_array(j, "elements")) {
    if (!entry.is_string()) fail("\"elements\" entries must be strings");
    names.push_back(entry.get<std::string>());
  }
  if (names.empty()) fail("\"elements\" must be non-empty");
  return names;
}

std::map<std::string, std::size_t> index_names(std::vector<std::string> const& names,
                                               std::string const&              what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      fail("duplicate " + what + " name \"" + names[i] + "\"");
  return index;
}

std::size_t resolve(std::map<std::string, std::size_t> const& index, Json const& j,
                    std::string const& what) {
  if (!j.is_string()) fail(what + " reference must be a string");
  auto it = index.find(j.get<std::string>());
  if (it == index.end()) fail("unknown " + what + " \"" + j.get<std::string>() + "\"");
  return it->second;
}

Relation read_order(Json const& j, std::map<std::string, std::size_t> const& index,
                    std::string const& what) {
  Relation rel(index.size());
  for (Json const& pair : require_array(j, "leq")) {
    if (!pair.is_array() || pair.size() != 2) fail("\"leq\" entries must be pairs");
    rel.set(resolve(index, pair[0], what), resolve(index, pair[1], what));
  }
  rel.reflexive_close();
  rel.transitive_close();
  return rel;
}

Json order_to_json(Relation const& leq, std::vector<std::string> const& names) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < leq.size(); ++i)
    for (std::size_t j = 0; j < leq.size(); ++j)
      if (i != j && leq(i, j)) pairs.push_back(Json::array({names[i], names[j]}));
  return pairs;
}

PomonoidPtr pomonoid_from_json(Json const& j) {
  require_kind(j, "pomonoid");
  std::vector<std::string> names = read_names(j);
  auto                     index = index_names(names, "element");
  std::size_t const        n     = names.size();
  if (!j.contains("one")) fail("expected string field \"one\"");
  std::size_t const one = resolve(index, j["one"], "element");

  Json const& rows = require_array(j, "mul");
  if (rows.size() != n) fail("\"mul\" must have one row per element");
  std::vector<std::size_t> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      fail("\"mul\" rows must have one entry per element");
    for (std::size_t k = 0; k < n; ++k) mul[i * n + k] = resolve(index, rows[i][k], "element");
  }
  return make_pomonoid(n, std::move(mul), one, read_order(j, index, "element"),
                       std::move(names));
}

Json pomonoid_to_json(Pomonoid const& S) {
  Json j;
  j["kind"]     = "pomonoid";
  j["elements"] = S.names();
  j["one"]      = S.name(S.one());
  Json rows     = Json::array();
  for (std::size_t a = 0; a < S.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < S.size(); ++b) row.push_back(S.name(S.mul(a, b)));
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  j["leq"] = order_to_json(S.order(), S.names());
  return j;
}

std::string dirname_of(std::string const& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

SPoset sposet_from_json(Json const& j, std::string const& base_dir) {
  require_kind(j, "sposet");
  std::string side_name = require_string(j, "side");
  Side        side;
  if (side_name == "left")
    side = Side::left;
  else if (side_name == "right")
    side = Side::right;
  else
    fail("\"side\" must be \"left\" or \"right\"");

  if (!j.contains("monoid")) fail("missing \"monoid\"");
  PomonoidPtr S;
  if (j["monoid"].is_object()) {
    S = pomonoid_from_json(j["monoid"]);
  } else if (j["monoid"].is_string()) {
    std::string path = j["monoid"].get<std::string>();
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    try {
      S = load_pomonoid(path);
    } catch (std::runtime_error const& err) {
      // File errors surface as parse errors here: the path came from the
      // document, so an unreadable reference is a problem with the input.
      fail(err.what());
    }
  } else {
    fail("\"monoid\" must be an object or a path string");
  }

  std::vector<std::string> names = read_names(j);
  auto                     index = index_names(names, "element");
  std::size_t const        m     = names.size();

  Json const& rows = require_array(j, "act");
  if (rows.size() != S->size()) fail("\"act\" must have one row per monoid element");
  std::vector<std::vector<std::size_t>> act(S->size(), std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < S->size(); ++s) {
    if (!rows[s].is_array() || rows[s].size() != m)
      fail("\"act\" rows must have one entry per element");
    for (std::size_t a = 0; a < m; ++a) act[s][a] = resolve(index, rows[s][a], "element");
  }
  return make_sposet(std::move(S), side, std::move(act), read_order(j, index, "element"),
                     std::move(names));
}

Json sposet_to_json(SPoset const& B) {
  Json j;
  j["kind"]     = "sposet";
  j["side"]     = side_name(B.side());
  j["monoid"]   = pomonoid_to_json(*B.monoid());
  j["elements"] = B.names();
  Json rows     = Json::array();
  for (std::size_t s = 0; s < B.monoid()->size(); ++s) {
    Json row = Json::array();
    for (std::size_t a = 0; a < B.size(); ++a) row.push_back(B.name(B.act(s, a)));
    rows.push_back(std::move(row));
  }
  j["act"] = std::move(rows);
  j["leq"] = order_to_json(B.order(), B.names());
  return j;
}

Json chain_to_json(std::vector<std::size_t> const& chain, SPoset const& X) {
  Json out = Json::array();
  for (std::size_t x : chain) out.push_back(X.name(x));
  return out;
}

std::vector<std::size_t> chain_from_json(Json const&                               j,
                                         std::map<std::string, std::size_t> const& index,
                                         std::string const&                        what) {
  std::vector<std::size_t> out;
  if (!j.is_array()) fail("\"" + what + "\" must be an array");
  for (Json const& entry : j) out.push_back(resolve(index, entry, what));
  return out;
}

std::string dump(Json const& j) {
  return j.dump(2) + "\n";
}

}  // namespace

std::string read_text_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << content;
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

std::string document_kind(std::string const& text) {
  Json j = parse_text(text);
  if (!j.is_object()) fail("expected a JSON object");
  return require_string(j, "kind");
}

PomonoidPtr parse_pomonoid(std::string const& text) {
  return pomonoid_from_json(parse_text(text));
}

SPoset parse_sposet(std::string const& text, std::string const& base_dir) {
  return sposet_from_json(parse_text(text), base_dir);
}

TossingCertificate parse_certificate(std::string const& text, SPoset const& A,
                                     SPoset const& B) {
  Json j = parse_text(text);
  require_kind(j, "tossing");
  if (!j.contains("doubled") || !j["doubled"].is_boolean())
    fail("expected boolean field \"doubled\"");
  bool const doubled = j["doubled"].get<bool>();

  auto a_index = index_names(A.names(), "element");
  auto b_index = index_names(B.names(), "element");
  auto s_index = index_names(A.monoid()->names(), "monoid element");

  auto endpoint = [&](std::string const& key) {
    Json const& pair = require_array(j, key);
    if (pair.size() != 2) fail("\"" + key + "\" must be a pair");
    return std::make_pair(resolve(a_index, pair[0], "element"),
                          resolve(b_index, pair[1], "element"));
  };

  TossingCertificate cert;
  cert.from           = endpoint("from");
  cert.to             = endpoint("to");
  cert.skeleton.first = chain_from_json(require_array(j, "skeleton"), s_index,
                                        "monoid element");
  if (doubled)
    cert.skeleton.second = chain_from_json(require_array(j, "skeleton2"), s_index,
                                           "monoid element");
  cert.a_chain = chain_from_json(require_array(j, "a_chain"), a_index, "element");
  cert.b_chain = chain_from_json(require_array(j, "b_chain"), b_index, "element");
  if (doubled) {
    cert.c_chain = chain_from_json(require_array(j, "c_chain"), a_index, "element");
    cert.d_chain = chain_from_json(require_array(j, "d_chain"), b_index, "element");
  }
  if (j.contains("path_steps")) {
    if (!j["path_steps"].is_number_unsigned()) fail("\"path_steps\" must be a count");
    cert.path_steps = j["path_steps"].get<std::size_t>();
  }
  return cert;
}

std::string to_text(Pomonoid const& S) {
  return dump(pomonoid_to_json(S));
}

std::string to_text(SPoset const& B) {
  return dump(sposet_to_json(B));
}

std::string to_text(TossingCertificate const& cert, SPoset const& A, SPoset const& B) {
  Json j;
  j["kind"]    = "tossing";
  j["doubled"] = cert.skeleton.doubled();
  j["from"] = Json::array({A.name(cert.from.first), B.name(cert.from.second)});
  j["to"]   = Json::array({A.name(cert.to.first), B.name(cert.to.second)});
  Json skeleton = Json::array();
  for (std::size_t s : cert.skeleton.first) skeleton.push_back(A.monoid()->name(s));
  j["skeleton"] = std::move(skeleton);
  if (cert.skeleton.doubled()) {
    Json second = Json::array();
    for (std::size_t s : cert.skeleton.second) second.push_back(A.monoid()->name(s));
    j["skeleton2"] = std::move(second);
  }
  j["a_chain"] = chain_to_json(cert.a_chain, A);
  j["b_chain"] = chain_to_json(cert.b_chain, B);
  if (cert.skeleton.doubled()) {
    j["c_chain"] = chain_to_json(cert.c_chain, A);
    j["d_chain"] = chain_to_json(cert.d_chain, B);
  }
  j["path_steps"] = cert.path_steps;
  return dump(j);
}

PomonoidPtr load_pomonoid(std::string const& path) {
  return parse_pomonoid(read_text_file(path));
}

SPoset load_sposet(std::string const& path) {
  return parse_sposet(read_text_file(path), dirname_of(path));
}

}  // namespace sposet
