#include "tilings/checks.hpp"

#include <atomic>
#include <thread>

#include "tilings/errors.hpp"
#include "tilings/graphs.hpp"
#include "tilings/padic.hpp"

namespace tilings {

Count Session::count(const Region& region, const TileSet& tiles) {
  return cached_count(region, tiles, options, store);
}

std::vector<Count> Session::family_counts(Family family, const TileSet& tiles, int lo, int hi) {
  if (lo > hi) return {};
  const std::size_t size = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Count> out(size);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(size)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(size);
  const auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < size;) {
      const std::size_t i = size - 1 - j;
      try {
        out[i] = count(family_region(family, lo + static_cast<int>(i)), tiles);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

nlohmann::json decimal_list(const std::vector<Count>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Count& c : values) out.push_back(to_decimal(c));
  return out;
}

nlohmann::json residue_list(const std::vector<Count>& values, unsigned k) {
  return residues(values, k);
}

Verdict start(const std::string& name, nlohmann::json params, int first, int last) {
  Verdict v;
  v.check = name;
  v.parameters = std::move(params);
  v.range_first = first;
  v.range_last = last;
  v.status = last >= first ? Status::holds_on_range : Status::insufficient_data;
  return v;
}

void fail(Verdict& v, nlohmann::json witness) {
  if (v.status == Status::fails) return;
  v.status = Status::fails;
  v.witness = std::move(witness);
}

int need_positive(std::optional<int> value, int fallback, const char* what) {
  const int v = value.value_or(fallback);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return v;
}

const TileSet& m_tiles() {
  static const TileSet t = parse_tileset("100010");
  return t;
}
const TileSet& l_tiles() {
  static const TileSet t = parse_tileset("skew:h,square");
  return t;
}

Verdict conjecture_mk(const std::string& name, const CheckParams& p, Session& s, bool second) {
  const int max_n = need_positive(p.max_n, 8, "--max-n");
  const unsigned k = p.k.value_or(3);
  if (k < 1 || k > 32) throw ParseError("--k must be in 1..32");
  const std::vector<Count> m = s.family_counts(Family::aztec, m_tiles(), 0, max_n);
  std::vector<Verdict> parts;
  for (unsigned j = 1; j <= k; ++j) {
    parts.push_back(second ? check_conjecture2(m, j) : check_conjecture1(m, j));
  }
  Verdict v = combine(name, {{"max_n", max_n}, {"k", k}}, parts);
  v.data["M"] = decimal_list(m);
  v.data["M_mod_4"] = residue_list(m, 2);
  v.data["M_mod_8"] = residue_list(m, 3);
  v.data["M_mod_16"] = residue_list(m, 4);
  return v;
}

Verdict conj3(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 10, "--max-n");
  const std::vector<Count> l = s.family_counts(Family::aztec, l_tiles(), 0, max_n);
  Verdict v = check_conjecture3(l);
  v.parameters = {{"max_n", max_n}};
  v.data["L"] = decimal_list(l);
  return v;
}

Verdict conj4(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 10, "--max-n");
  const unsigned k = p.k.value_or(2);
  if (k < 1 || k > 16) throw ParseError("--k must be in 1..16");
  const std::vector<Count> l = s.family_counts(Family::aztec, l_tiles(), 0, max_n);
  const nlohmann::json params = {{"max_n", max_n}, {"k", k}};
  std::vector<Count> l0, l1;
  try {
    std::tie(l0, l1) = derive_L0_L1(l);
  } catch (const std::domain_error& e) {
    Verdict v = start("conj4", params, 0, max_n);
    fail(v, {{"reason", e.what()}});
    return v;
  }
  std::vector<Verdict> parts;
  for (unsigned j = 1; j <= k; ++j) {
    Verdict a = check_period(l0, j, 1u << j, 1);
    a.check = "conj4-L0";
    Verdict b = check_period(l1, j, 1u << j, 1);
    b.check = "conj4-L1";
    parts.push_back(std::move(a));
    parts.push_back(std::move(b));
  }
  Verdict v = combine("conj4", params, parts);
  v.data["L0"] = decimal_list(l0);
  v.data["L1"] = decimal_list(l1);
  v.data["L0_mod_4"] = residue_list(l0, 2);
  v.data["L1_mod_4"] = residue_list(l1, 2);
  return v;
}

Verdict olympiad(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 6, "--max-n");
  const std::vector<Count> c = s.family_counts(Family::aztec, parse_tileset("011000"), 1, max_n);
  Verdict v = start("olympiad", {{"max_n", max_n}, {"tiles", "011000"}}, 1, max_n);
  for (int n = 1; n <= max_n; ++n) {
    const Count& x = c[static_cast<std::size_t>(n - 1)];
    if ((n % 4 == 1 || n % 4 == 2) && x != 0) fail(v, {{"n", n}, {"count", to_decimal(x)}});
  }
  v.data["counts"] = decimal_list(c);
  return v;
}

Verdict signed_odd(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 6, "--max-n");
  const std::vector<Count> w = s.family_counts(Family::aztec, parse_tileset("domino,square*-1"), 1, max_n);
  const std::vector<Count> m = s.family_counts(Family::aztec, m_tiles(), 1, max_n);
  Verdict v = start("signed-odd", {{"max_n", max_n}}, 1, max_n);
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    if (w[i] != 1) fail(v, {{"n", n}, {"signed_count", to_decimal(w[i])}});
    if (mpz_even_p(m[i].get_mpz_t())) fail(v, {{"n", n}, {"count", to_decimal(m[i])}});
  }
  v.data["signed_counts"] = decimal_list(w);
  v.data["counts"] = decimal_list(m);
  return v;
}

Verdict rect_mod8(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 3, "--max-n");
  const int domino_max_n = need_positive(p.domino_max_n, 8, "--domino-max-n");
  const TileSet dom_sq = parse_tileset("100010");
  const TileSet dom = parse_tileset("100000");
  std::vector<Verdict> parts;
  nlohmann::json data;
  for (Family f : {Family::rect_2n_2n, Family::rect_2n_2n2, Family::rect_2n_4n}) {
    const std::vector<Count> c = s.family_counts(f, dom_sq, 1, max_n);
    Verdict v = check_affine_mod8(c, AffineForm::two_n_plus_one, 1);
    v.check = "domino-square-" + family_name(f);
    data[v.check] = decimal_list(c);
    parts.push_back(std::move(v));
  }
  for (Family f : {Family::rect_2n_2n2, Family::rect_2n_4n}) {
    const std::vector<Count> c = s.family_counts(f, dom, 1, domino_max_n);
    Verdict v = check_period(c, 3, 4, 1);
    v.check = "domino-mod8-by-n-mod4-" + family_name(f);
    data[v.check] = residue_list(c, 3);
    parts.push_back(std::move(v));
  }
  Verdict v = combine("rect-mod8", {{"max_n", max_n}, {"domino_max_n", domino_max_n}}, parts);
  for (auto& [key, value] : data.items()) v.data[key] = value;
  return v;
}

Verdict square_factor(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 4, "--max-n");
  const std::vector<Count> c = s.family_counts(Family::rect_2n_2n, parse_tileset("100000"), 1, max_n);
  Verdict v = start("square-factor", {{"max_n", max_n}}, 1, max_n);
  nlohmann::json fs = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n) {
    const Count& x = c[static_cast<std::size_t>(n - 1)];
    const auto f = check_square_factorization(x, static_cast<unsigned>(n));
    if (!f) {
      fail(v, {{"n", n}, {"count", to_decimal(x)}});
      fs.push_back(nullptr);
    } else {
      fs.push_back(to_decimal(*f));
    }
  }
  v.data["counts"] = decimal_list(c);
  v.data["f"] = fs;
  return v;
}

Verdict matching_equivalence(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 6, "--max-n");
  Verdict v = start("matching-equivalence", {{"max_n", max_n}}, 1, max_n);
  const TileSet skew_square = l_tiles();
  const TileSet skew_straight = parse_tileset("skew:h,straight:h");
  const TileSet all_three = parse_tileset("skew:h,straight:h,square");
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n) {
    const Region region = aztec_diamond(n);
    const Count t1 = s.count(region, skew_square);
    const Count m1 = count_perfect_matchings(family_graph(GraphFamily::doubled_diagonal, n));
    const Count t2 = s.count(region, skew_straight);
    const Count tri = count_perfect_matchings(family_graph(GraphFamily::triangle, n));
    const Count t3 = s.count(region, all_three);
    const Count m3 = count_perfect_matchings(family_graph(GraphFamily::superimposed, n));
    rows.push_back({{"n", n},
                    {"doubled_diagonal", {to_decimal(t1), to_decimal(m1)}},
                    {"triangle_squared", {to_decimal(t2), to_decimal(tri * tri)}},
                    {"superimposed", {to_decimal(t3), to_decimal(m3)}}});
    if (t1 != m1) fail(v, {{"n", n}, {"family", "doubled-diagonal"}, {"tilings", to_decimal(t1)}, {"matchings", to_decimal(m1)}});
    if (t2 != tri * tri) fail(v, {{"n", n}, {"family", "triangle"}, {"tilings", to_decimal(t2)}, {"matchings", to_decimal(tri)}});
    if (t3 != m3) fail(v, {{"n", n}, {"family", "superimposed"}, {"tilings", to_decimal(t3)}, {"matchings", to_decimal(m3)}});
  }
  v.data["rows"] = rows;
  return v;
}

Verdict a356523_parity(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 7, "--max-n");
  const std::vector<Count> c = s.family_counts(Family::aztec, parse_tileset("domino,straight:h"), 1, max_n);
  Verdict v = start("a356523-parity", {{"max_n", max_n}}, 1, max_n);
  for (int n = 1; n <= max_n; ++n) {
    const Count& x = c[static_cast<std::size_t>(n - 1)];
    const bool even = mpz_even_p(x.get_mpz_t());
    if (even != (n % 3 == 1)) fail(v, {{"n", n}, {"count", to_decimal(x)}, {"even", even}});
  }
  v.data["counts"] = decimal_list(c);
  return v;
}

Verdict a356514_div(const CheckParams& p, Session& s) {
  const int max_n = need_positive(p.max_n, 6, "--max-n");
  const std::vector<Count> c =
      s.family_counts(Family::aztec, parse_tileset("skew:h,straight:h,square"), 1, max_n);
  Verdict v = start("a356514-div", {{"max_n", max_n}}, 1, max_n);
  for (int n = 1; n <= max_n; ++n) {
    const Count& x = c[static_cast<std::size_t>(n - 1)];
    const unsigned need = static_cast<unsigned>(n / 2);
    if (x == 0 || v2_split(x).v2 < need) fail(v, {{"n", n}, {"count", to_decimal(x)}, {"required_v2", need}});
  }
  v.data["counts"] = decimal_list(c);
  return v;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "conj1",         "conj2",        "conj3",                "conj4",          "olympiad",    "signed-odd",
      "rect-mod8",     "square-factor", "matching-equivalence", "a356523-parity", "a356514-div"};
  return names;
}

Verdict run_named_check(const std::string& name, const CheckParams& params, Session& session) {
  if (name == "conj1") return conjecture_mk("conj1", params, session, false);
  if (name == "conj2") return conjecture_mk("conj2", params, session, true);
  if (name == "conj3") return conj3(params, session);
  if (name == "conj4") return conj4(params, session);
  if (name == "olympiad") return olympiad(params, session);
  if (name == "signed-odd") return signed_odd(params, session);
  if (name == "rect-mod8") return rect_mod8(params, session);
  if (name == "square-factor") return square_factor(params, session);
  if (name == "matching-equivalence") return matching_equivalence(params, session);
  if (name == "a356523-parity") return a356523_parity(params, session);
  if (name == "a356514-div") return a356514_div(params, session);
  throw ParseError("unknown check '" + name + "'");
}

}  // namespace tilings
