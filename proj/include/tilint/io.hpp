#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "tilint/kripke.hpp"
#include "tilint/tiles.hpp"
#include "tilint/turing.hpp"

// File formats. Tiles: {"tiles":[{"id":0,"left":..,"right":..,"up":..,"down":..},..]}.
// Machines: {"alphabet":[..],"blank":..,"marker":..,"states":[..],"initial":..,
// "halting":..,"delta":[{"from":[q,s],"to":[q,s,"L"|"S"|"R"]},..]}.
// Models: {"worlds":N,"order":"linear"|[[u,v],..],"domains":[[..],..],
// "interpretation":{"P":{"arity":k,"atoms":[[w,a..],..]}},"hereditary_closure":bool}.

namespace tilint {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// --- tiles -------------------------------------------------------------------

inline TileSet tileset_from_json(const json& j) {
  TileSet ts;
  if (!j.contains("tiles") || !j["tiles"].is_array())
    throw std::runtime_error("tile file: missing \"tiles\" array");
  for (const auto& t : j["tiles"]) {
    TileType tile;
    tile.id = t.at("id").get<int>();
    tile.left = t.at("left").get<std::string>();
    tile.right = t.at("right").get<std::string>();
    tile.up = t.at("up").get<std::string>();
    tile.down = t.at("down").get<std::string>();
    if (tile.left.empty() || tile.right.empty() || tile.up.empty() || tile.down.empty())
      throw std::runtime_error("tile file: empty color on tile " + std::to_string(tile.id));
    if (tile.id != static_cast<int>(ts.size()))
      throw std::runtime_error("tile file: tile ids must be 0,1,... in order (got " +
                               std::to_string(tile.id) + " at position " + std::to_string(ts.size()) + ")");
    ts.push_back(std::move(tile));
  }
  if (ts.empty()) throw std::runtime_error("tile file: no tiles");
  return ts;
}

inline json tileset_to_json(const TileSet& ts, const std::vector<std::string>* labels = nullptr) {
  json tiles = json::array();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    json t = {{"id", ts[i].id}, {"left", ts[i].left}, {"right", ts[i].right},
              {"up", ts[i].up},  {"down", ts[i].down}};
    if (labels) t["label"] = (*labels)[i];
    tiles.push_back(std::move(t));
  }
  return json{{"tiles", std::move(tiles)}};
}

inline TileSet load_tileset(const std::string& path) { return tileset_from_json(load_json_file(path)); }

inline json grid_to_json(const TileGrid& g) {
  json rows = json::array();
  for (int j = 0; j < g.height; ++j) {
    json row = json::array();
    for (int i = 0; i < g.width; ++i) row.push_back(g.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"width", g.width}, {"height", g.height}, {"cells", std::move(rows)}};
}

// --- machines ------------------------------------------------------------------

inline TuringMachine machine_from_json(const json& j) {
  TuringMachine m;
  m.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  m.blank = j.at("blank").get<std::string>();
  m.marker = j.at("marker").get<std::string>();
  m.states = j.at("states").get<std::vector<std::string>>();
  m.initial = j.at("initial").get<std::string>();
  m.halting = j.at("halting").get<std::string>();
  for (const auto& rule : j.at("delta")) {
    const auto from = rule.at("from").get<std::vector<std::string>>();
    const auto to = rule.at("to").get<std::vector<std::string>>();
    if (from.size() != 2 || to.size() != 3)
      throw std::runtime_error("machine file: delta entries are {\"from\":[q,s],\"to\":[q,s,move]}");
    Move move;
    if (to[2] == "L") move = Move::Left;
    else if (to[2] == "S") move = Move::Stay;
    else if (to[2] == "R") move = Move::Right;
    else throw std::runtime_error("machine file: move must be L, S or R, got '" + to[2] + "'");
    if (!m.delta.emplace(std::make_pair(from[0], from[1]), Transition{to[0], to[1], move}).second)
      throw std::runtime_error("machine file: duplicate instruction for (" + from[0] + "," + from[1] + ")");
  }
  return m;
}

inline json machine_to_json(const TuringMachine& m) {
  json delta = json::array();
  for (const auto& [key, tr] : m.delta) {
    const char* mv = tr.move == Move::Left ? "L" : tr.move == Move::Stay ? "S" : "R";
    delta.push_back({{"from", {key.first, key.second}}, {"to", {tr.state, tr.write, mv}}});
  }
  return json{{"alphabet", m.alphabet}, {"blank", m.blank},     {"marker", m.marker},
              {"states", m.states},     {"initial", m.initial}, {"halting", m.halting},
              {"delta", std::move(delta)}};
}

inline TuringMachine load_machine(const std::string& path) {
  return machine_from_json(load_json_file(path));
}

// --- models ---------------------------------------------------------------------

inline KripkeModel model_from_json(const json& j) {
  KripkeModel m;
  const int n = j.at("worlds").get<int>();
  if (n < 1) throw std::runtime_error("model file: need at least one world");
  const auto& order = j.at("order");
  if (order.is_string() && order.get<std::string>() == "linear") {
    m.frame = Frame::chain(n);
  } else if (order.is_array()) {
    m.frame.worlds = n;
    m.frame.rel.assign(n, std::vector<bool>(n, false));
    for (const auto& e : order) {
      const auto uv = e.get<std::vector<int>>();
      if (uv.size() != 2 || uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
        throw std::runtime_error("model file: order entries are [u,v] pairs of world indices");
      m.frame.rel[uv[0]][uv[1]] = true;
    }
  } else {
    throw std::runtime_error("model file: \"order\" is \"linear\" or a pair list");
  }
  for (const auto& d : j.at("domains")) {
    auto members = d.get<std::vector<int>>();
    for (int a : members)
      if (a < 0) throw std::runtime_error("model file: negative individual");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    m.domains.push_back(std::move(members));
  }
  if (static_cast<int>(m.domains.size()) != n)
    throw std::runtime_error("model file: expected one domain per world");
  if (j.contains("interpretation"))
    for (const auto& [letter, entry] : j.at("interpretation").items()) {
      const auto arity = entry.at("arity").get<std::size_t>();
      m.declare(letter, arity);
      for (const auto& atom : entry.at("atoms")) {
        const auto row = atom.get<std::vector<int>>();
        if (row.size() != arity + 1)
          throw std::runtime_error("model file: atom rows for '" + letter + "' must be [world, " +
                                   std::to_string(arity) + " args]");
        if (row[0] < 0 || row[0] >= n) throw std::runtime_error("model file: atom world out of range");
        m.add_fact(row[0], letter, std::vector<int>(row.begin() + 1, row.end()));
      }
    }
  if (j.value("hereditary_closure", false)) m.close_hereditarily();
  return m;
}

inline json model_to_json(const KripkeModel& m, bool linear) {
  json j;
  j["worlds"] = m.frame.worlds;
  if (linear) {
    j["order"] = "linear";
  } else {
    json order = json::array();
    for (int u = 0; u < m.frame.worlds; ++u)
      for (int v = 0; v < m.frame.worlds; ++v)
        if (m.frame.sees(u, v)) order.push_back({u, v});
    j["order"] = std::move(order);
  }
  j["domains"] = m.domains;
  json interp = json::object();
  for (const auto& [letter, pred] : m.interp) {
    json atoms = json::array();
    for (int w = 0; w < m.frame.worlds; ++w)
      for (const auto& t : pred.by_world[w]) {
        json row = json::array();
        row.push_back(w);
        for (int a : t) row.push_back(a);
        atoms.push_back(std::move(row));
      }
    interp[letter] = {{"arity", pred.arity}, {"atoms", std::move(atoms)}};
  }
  j["interpretation"] = std::move(interp);
  return j;
}

inline KripkeModel load_model(const std::string& path) { return model_from_json(load_json_file(path)); }

}  // namespace tilint
