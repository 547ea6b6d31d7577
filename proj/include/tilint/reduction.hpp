#pragma once

#include <string>
#include <vector>

#include "tilint/formula.hpp"
#include "tilint/tiles.hpp"

// Compiles a tile set into the two-variable formulas whose refutability over
// linear frames encodes the tiling problem: the double-labeling block DL, the
// grid-function block FRAW, the tiling block, the refutation goal, and the
// combined implications phi/psi with their bot-free variants.
//
// Conventions, fixed for reproducible output: multi-way connective chains
// inside one named formula associate to the left (as the concrete grammar
// parses them); the named formulas themselves are conjoined right-nested in
// listing order. An empty "forbidden neighbour" disjunction renders as bot.

namespace tilint::letters {

inline const std::string lhd = "lhd";
inline const std::string Q = "Q";
inline const std::string Qp = "Q'";
inline const std::string S = "S";
inline const std::string Sp = "S'";
inline const std::string Spp = "S''";
inline const std::string G = "G";
inline const std::string next = "next";
inline const std::string above = "above";
inline const std::string right = "right";
inline const std::string wall = "wall";
inline const std::string floor = "floor";
inline std::string P(std::size_t i) { return "P" + std::to_string(i); }

}  // namespace tilint::letters

namespace tilint {

struct NamedConjunct {
  std::string name;
  Formula formula;
};

namespace detail {

inline Formula u(const std::string& letter, const char* v) { return Formula::atom(letter, {v}); }
inline Formula lhd(const char* a, const char* b) { return Formula::atom(letters::lhd, {a, b}); }

inline Formula conj_chain(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(out, fs[i]);
  return out;
}

inline Formula disj_chain(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disj(out, fs[i]);
  return out;
}

inline Formula conj_nested(const std::vector<Formula>& fs) {
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::conj(fs[i], out);
  return out;
}

inline Formula xy(Formula body) { return Formula::forall("x", Formula::forall("y", std::move(body))); }

}  // namespace detail

// --- the double-labeling block ------------------------------------------------

inline std::vector<NamedConjunct> dl_conjuncts() {
  using namespace detail;
  namespace L = letters;
  const char *x = "x", *y = "y";
  std::vector<NamedConjunct> out;
  out.push_back({"Serial_lhd", Formula::forall(x, Formula::exists(y, lhd(x, y)))});
  out.push_back({"Diag_N", xy(Formula::implies(lhd(x, y), Formula::iff(u(L::Q, x), u(L::next, y))))});
  out.push_back({"Diag_Q", xy(Formula::implies(lhd(x, y), Formula::iff(u(L::Qp, x), u(L::Q, y))))});
  out.push_back({"Diag_S", xy(Formula::implies(lhd(x, y), Formula::conj(Formula::iff(u(L::Sp, x), u(L::S, y)),
                                                                        Formula::iff(u(L::Spp, x), u(L::Sp, y)))))});
  out.push_back({"Diag_G", xy(Formula::implies(lhd(x, y), Formula::iff(u(L::S, x), u(L::G, y))))});
  out.push_back({"Agree_S",
                 xy(Formula::disj(
                     Formula::implies(Formula::conj(u(L::Q, x), u(L::S, y)),
                                      Formula::disj(u(L::Qp, x), u(L::Sp, y))),
                     Formula::implies(Formula::conj(u(L::Q, x), u(L::Sp, y)),
                                      Formula::disj(u(L::Qp, x), u(L::Spp, y)))))});
  out.push_back({"Agree_G",
                 xy(Formula::disj(
                     Formula::implies(Formula::conj(u(L::Q, x), u(L::G, y)),
                                      Formula::disj(u(L::Qp, x), u(L::S, y))),
                     Formula::implies(Formula::conj(u(L::Q, x), u(L::Sp, y)),
                                      Formula::disj(u(L::Qp, x), u(L::Spp, y)))))});
  out.push_back({"Agree_lhd", xy(Formula::implies(Formula::conj(lhd(y, x), u(L::S, x)), u(L::S, y)))});
  return out;
}

// --- the floor/right/above/wall block ------------------------------------------

inline std::vector<NamedConjunct> fraw_conjuncts() {
  using namespace detail;
  namespace L = letters;
  const char *x = "x", *y = "y";
  std::vector<NamedConjunct> out;
  out.push_back({"EM_W", Formula::forall(x, Formula::disj(u(L::wall, x), Formula::neg(u(L::wall, x))))});
  out.push_back({"Conn_1",
                 Formula::forall(x, Formula::conj(Formula::implies(u(L::floor, x), Formula::neg(u(L::above, x))),
                                                  Formula::implies(u(L::wall, x), Formula::neg(u(L::right, x)))))});
  out.push_back({"Conn_2",
                 xy(Formula::implies(lhd(x, y),
                                     Formula::conj(Formula::implies(u(L::right, x), u(L::above, y)),
                                                   Formula::implies(u(L::wall, x), u(L::floor, y)))))});
  out.push_back({"Conn_3",
                 Formula::forall(x, Formula::conj(Formula::implies(u(L::above, x), u(L::S, x)),
                                                  Formula::implies(u(L::right, x), u(L::Sp, x))))});
  out.push_back({"Start_lhd",
                 xy(Formula::implies(conj_chain({lhd(x, y), u(L::wall, x), u(L::floor, x)}), u(L::right, y)))});
  // Move_1 and Move_2 rebind x and y locally, exactly as displayed.
  out.push_back(
      {"Move_1",
       xy(Formula::implies(
           Formula::implies(conj_chain({Formula::forall(x, Formula::implies(lhd(x, y), u(L::wall, x))),
                                        Formula::neg(u(L::wall, y)), u(L::right, y), u(L::Q, x)}),
                            Formula::disj(u(L::Qp, x), u(L::Spp, y))),
           Formula::implies(conj_chain({Formula::exists(y, Formula::conj(lhd(y, x), u(L::wall, y))),
                                        u(L::next, x),
                                        Formula::exists(x, Formula::conj(lhd(x, y), u(L::above, x))),
                                        u(L::G, y)}),
                            Formula::disj(u(L::Q, x), u(L::S, y)))))});
  out.push_back(
      {"Move_2",
       xy(Formula::implies(
           Formula::implies(conj_chain({Formula::neg(u(L::wall, y)), u(L::right, y), u(L::Q, x)}),
                            Formula::disj(u(L::Qp, x), u(L::Spp, y))),
           Formula::implies(conj_chain({Formula::exists(y, Formula::conj(lhd(y, x), Formula::neg(u(L::wall, y)))),
                                        u(L::next, x), u(L::above, y)}),
                            Formula::disj(u(L::Q, x), u(L::Sp, y)))))});
  return out;
}

// --- the tiling block -----------------------------------------------------------

inline std::vector<NamedConjunct> tiling_conjuncts(const TileSet& ts) {
  using namespace detail;
  namespace L = letters;
  if (ts.empty()) throw std::invalid_argument("tiling_conjuncts: empty tile set");
  const char *x = "x", *y = "y";
  const std::size_t n = ts.size();
  std::vector<NamedConjunct> out;

  std::vector<Formula> cases;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Formula> parts{u(L::P(i), x)};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) parts.push_back(Formula::neg(u(L::P(j), x)));
    cases.push_back(conj_chain(parts));
  }
  out.push_back({"T_0", Formula::forall(x, disj_chain(cases))});

  auto matching_block = [&](const std::string& move_letter, const std::string& s_letter, auto clashes) {
    std::vector<Formula> per_tile;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Formula> forbidden;
      for (std::size_t j = 0; j < n; ++j)
        if (clashes(ts[i], ts[j])) forbidden.push_back(u(L::P(j), y));
      per_tile.push_back(Formula::implies(
          disj_chain(forbidden),
          Formula::implies(conj_chain({u(move_letter, y), u(L::Q, x), u(L::P(i), x)}),
                           Formula::disj(u(L::Qp, x), u(s_letter, y)))));
    }
    return xy(conj_chain(per_tile));
  };
  out.push_back({"T_1", matching_block(L::right, L::Spp,
                                       [](const TileType& a, const TileType& b) { return a.right != b.left; })});
  out.push_back({"T_2", matching_block(L::above, L::Sp,
                                       [](const TileType& a, const TileType& b) { return a.up != b.down; })});
  return out;
}

// --- goals and combined formulas ------------------------------------------------

inline Formula build_refute() {
  using namespace detail;
  namespace L = letters;
  return xy(Formula::implies(conj_chain({lhd("x", "y"), u(L::wall, "x"), u(L::floor, "x"), u(L::Q, "x")}),
                             Formula::disj(u(L::Qp, "x"), u(L::Spp, "y"))));
}

inline Formula build_refute_q() {
  return Formula::exists("x", Formula::implies(detail::u(letters::Q, "x"), detail::u(letters::Qp, "x")));
}

// x preceq y abbreviates Q(y) -> Q(x); it is expanded at build time.
inline Formula preceq(const char* x, const char* y) {
  return Formula::implies(detail::u(letters::Q, y), detail::u(letters::Q, x));
}

inline std::vector<NamedConjunct> psi_extra_conjuncts() {
  using namespace detail;
  namespace L = letters;
  const char *x = "x", *y = "y";
  std::vector<NamedConjunct> out;
  out.push_back({"Agree_prec", xy(Formula::implies(lhd(x, y), preceq(x, y)))});
  out.push_back({"T_3", Formula::forall(x, Formula::implies(Formula::conj(u(L::wall, x), u(L::floor, x)),
                                                            u(L::P(0), x)))});
  out.push_back({"T_4", Formula::exists(x, Formula::forall(y, Formula::implies(
                                                                   Formula::conj(preceq(x, y), u(L::wall, y)),
                                                                   u(L::P(1), y))))});
  return out;
}

namespace detail {

inline std::vector<Formula> formulas_of(const std::vector<NamedConjunct>& cs) {
  std::vector<Formula> out;
  for (const auto& c : cs) out.push_back(c.formula);
  return out;
}

}  // namespace detail

inline Formula build_dl() { return detail::conj_nested(detail::formulas_of(dl_conjuncts())); }
inline Formula build_fraw() { return detail::conj_nested(detail::formulas_of(fraw_conjuncts())); }
inline Formula build_grid() { return Formula::conj(build_dl(), build_fraw()); }

inline Formula build_tiling(const TileSet& ts) {
  return detail::conj_nested(detail::formulas_of(tiling_conjuncts(ts)));
}

inline Formula build_phi(const TileSet& ts) {
  return Formula::implies(Formula::conj(build_grid(), build_tiling(ts)), build_refute());
}

inline Formula build_psi(const TileSet& ts) {
  if (ts.size() < 2) throw std::invalid_argument("build_psi: needs the two distinguished tiles t_0 and t_1");
  const auto extra = psi_extra_conjuncts();
  const Formula grid_prime = Formula::conj(build_grid(), extra[0].formula);
  const Formula tiling_prime =
      detail::conj_nested({build_tiling(ts), extra[1].formula, extra[2].formula});
  const Formula refute_prime = Formula::disj(build_refute(), build_refute_q());
  return Formula::implies(Formula::conj(grid_prime, tiling_prime), refute_prime);
}

inline Formula build_phi_positive(const TileSet& ts) { return to_positive(build_phi(ts)); }
inline Formula build_psi_positive(const TileSet& ts) { return to_positive(build_psi(ts)); }

// Every named formula of the construction, in listing order. With psi_mode the
// section-7 additions and both refutation goals are included.
inline std::vector<NamedConjunct> named_conjuncts(const TileSet& ts, bool psi_mode) {
  std::vector<NamedConjunct> out = dl_conjuncts();
  for (auto& c : fraw_conjuncts()) out.push_back(std::move(c));
  for (auto& c : tiling_conjuncts(ts)) out.push_back(std::move(c));
  if (psi_mode)
    for (auto& c : psi_extra_conjuncts()) out.push_back(std::move(c));
  out.push_back({"Refute", build_refute()});
  if (psi_mode) out.push_back({"Refute_Q", build_refute_q()});
  return out;
}

// Splits nested conjunctions down to their leaves.
inline void flatten_conjunction(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Conn::And) {
    flatten_conjunction(f.lhs(), out);
    flatten_conjunction(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace tilint
