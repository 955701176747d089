#include "grc/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace grc {

namespace {

// Names that would collide with the expression grammar: `e` is the identity,
// `u` prefixes ring monomials.
void check_generator_name(const std::string& g) {
  if (g.size() != 1 || g == "e" || g == "u" || !std::isalpha(static_cast<unsigned char>(g[0])))
    throw std::invalid_argument("generator name must be a single letter other than 'e'/'u': '" + g + "'");
}

}  // namespace

GroupPtr finalize_group(std::vector<std::string> names, std::vector<std::vector<int>> table,
                        int identity, std::string ordering_tag,
                        std::vector<std::string> generator_names) {
  const int n = static_cast<int>(table.size());
  if (n < 1 || n > kMaxGroupOrder)
    throw std::invalid_argument("group order must be in 1..64, got " + std::to_string(n));
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("names/table size mismatch");

  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw std::invalid_argument("table entry out of range");

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]] || col_seen[table[j][i]])
        throw std::invalid_argument("not cancellative");
      row_seen[table[i][j]] = true;
      col_seen[table[j][i]] = true;
    }
  }

  // Exhaustive associativity; n <= 64 keeps this at <= 262144 checks.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (table[table[i][j]][l] != table[i][table[j][l]])
          throw std::invalid_argument("not associative: witness (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(l) + ")");

  if (identity < 0 || identity >= n)
    throw std::invalid_argument("identity index out of range");
  for (int j = 0; j < n; ++j)
    if (table[identity][j] != j || table[j][identity] != j)
      throw std::invalid_argument("declared identity is not an identity");

  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity) inverse[i] = j;
  for (int i = 0; i < n; ++i) {
    if (inverse[i] < 0) throw std::invalid_argument("element without inverse");
    if (table[inverse[i]][i] != identity)
      throw std::invalid_argument("one-sided inverse; table is inconsistent");
  }

  std::set<std::string> unique(names.begin(), names.end());
  if (static_cast<int>(unique.size()) != n)
    throw std::invalid_argument("element names are not distinct");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->identity_ = identity;
  g->names_ = std::move(names);
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g->table_[static_cast<size_t>(i) * n + j] = table[i][j];
  g->inverse_ = std::move(inverse);
  g->ordering_tag_ = std::move(ordering_tag);
  g->generator_names_ = std::move(generator_names);
  return g;
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<int>> table,
                                 int identity, std::string ordering_tag) {
  // User tables carry no generator list; words over element names still parse.
  return finalize_group(std::move(names), std::move(table), identity, std::move(ordering_tag), {});
}

int FiniteGroup::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

namespace {

std::string power_name(const std::string& gen, int e) {
  if (e == 0) return "e";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

GroupPtr reorder(const FiniteGroup& g, const std::vector<int>& perm, std::string tag) {
  // perm[new_index] = old_index
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = g.name(perm[i]);
    for (int j = 0; j < n; ++j) table[i][j] = pos[g.mul(perm[i], perm[j])];
  }
  return finalize_group(std::move(names), std::move(table), pos[g.identity()], std::move(tag),
                        g.generator_names());
}

}  // namespace

GroupPtr make_cyclic(int n, std::string gen) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  check_generator_name(gen);
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = power_name(gen, i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return finalize_group(std::move(names), std::move(table), 0, "c" + std::to_string(n) + ":powers",
                        {gen});
}

GroupPtr reorder_cyclic_even_odd(const GroupPtr& g) {
  const int n = g->order();
  if (n % 2 != 0) throw std::invalid_argument("even/odd ordering requires even order");
  // Sanity: the group must actually be cyclic in power order.
  for (int i = 0; i < n; ++i)
    if (g->mul(1, i) != (i + 1) % n)
      throw std::invalid_argument("even/odd ordering applies to a cyclic group in power order");
  std::vector<int> perm;
  for (int i = 0; i < n; i += 2) perm.push_back(i);
  for (int i = 1; i < n; i += 2) perm.push_back(i);
  return reorder(*g, perm, g->ordering_tag() + "+evenodd");
}

GroupPtr make_dihedral(int order, std::string rot, std::string refl) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("dihedral order must be even and >= 4");
  check_generator_name(rot);
  check_generator_name(refl);
  const int k = order / 2;
  auto idx = [k](int j, int i) { return j * k + i; };
  std::vector<std::string> names(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < k; ++i) {
    names[idx(0, i)] = power_name(rot, i);
    names[idx(1, i)] = (i == 0) ? refl : refl + power_name(rot, i);
  }
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < k; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < k; ++i2) {
          const int sign = j2 ? -1 : 1;
          const int i = ((i1 * sign + i2) % k + k) % k;
          table[idx(j1, i1)][idx(j2, i2)] = idx((j1 + j2) % 2, i);
        }
  return finalize_group(std::move(names), std::move(table), 0,
                        "d" + std::to_string(order) + ":rotations-then-reflections", {rot, refl});
}

GroupPtr make_direct_product(const GroupPtr& g, const GroupPtr& h) {
  const int n1 = g->order(), n2 = h->order();
  if (n1 * n2 > kMaxGroupOrder) throw std::invalid_argument("product order exceeds 64");
  for (const auto& a : g->generator_names())
    for (const auto& b : h->generator_names())
      if (a == b)
        throw std::invalid_argument("product factors share generator name '" + a + "'");
  const int n = n1 * n2;
  auto idx = [n2](int i, int j) { return i * n2 + j; };
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      std::string nm;
      if (i == g->identity() && j == h->identity()) nm = "e";
      else if (i == g->identity()) nm = h->name(j);
      else if (j == h->identity()) nm = g->name(i);
      else nm = g->name(i) + h->name(j);
      names[idx(i, j)] = nm;
    }
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          table[idx(i1, j1)][idx(i2, j2)] = idx(g->mul(i1, i2), h->mul(j1, j2));
  std::vector<std::string> gens = g->generator_names();
  gens.insert(gens.end(), h->generator_names().begin(), h->generator_names().end());
  return finalize_group(std::move(names), std::move(table), idx(g->identity(), h->identity()),
                        g->ordering_tag() + " x " + h->ordering_tag(), std::move(gens));
}

GroupPtr reorder_cyclic_dihedral(const GroupPtr& product, int s, int dihedral_order) {
  const int k = dihedral_order / 2;
  if (product->order() != s * dihedral_order)
    throw std::invalid_argument("csd ordering: order mismatch");
  std::vector<int> perm;
  for (int j = 0; j < 2; ++j)
    for (int zi = 0; zi < s; ++zi)
      for (int ai = 0; ai < k; ++ai) perm.push_back(zi * dihedral_order + j * k + ai);
  return reorder(*product, perm, "csd:rotation-half-then-reflection-half");
}

namespace {

using Perm4 = std::array<int, 4>;

// Permutations compose left to right: (p*q)(x) = q(p(x)).
Perm4 pcompose(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int x = 0; x < 4; ++x) r[x] = q[p[x]];
  return r;
}

GroupPtr make_perm_group(const std::vector<Perm4>& order, const std::vector<std::string>& names,
                         std::string tag, std::vector<std::string> gens) {
  std::map<Perm4, int> index;
  for (size_t i = 0; i < order.size(); ++i) {
    if (!index.emplace(order[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate element in permutation group ordering");
  }
  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(pcompose(order[i], order[j]));
      if (it == index.end()) throw std::invalid_argument("ordering does not cover the group");
      table[i][j] = it->second;
    }
  int id = -1;
  for (int i = 0; i < n; ++i)
    if (order[i] == Perm4{0, 1, 2, 3}) id = i;
  return finalize_group(names, std::move(table), id, std::move(tag), std::move(gens));
}

GroupPtr make_a4() {
  const Perm4 e{0, 1, 2, 3};
  const Perm4 a{1, 0, 3, 2};   // (12)(34)
  const Perm4 b{2, 3, 0, 1};   // (13)(24)
  const Perm4 c{1, 2, 0, 3};   // (123)
  const Perm4 ab = pcompose(a, b);
  std::vector<Perm4> order;
  std::vector<std::string> names;
  const std::array<std::pair<Perm4, std::string>, 4> v4{{{e, ""}, {a, "a"}, {b, "b"}, {ab, "ab"}}};
  Perm4 cp = e;
  for (int ci = 0; ci < 3; ++ci) {
    for (const auto& [g, nm] : v4) {
      order.push_back(pcompose(g, cp));
      std::string full = nm + (ci == 0 ? "" : power_name("c", ci));
      names.push_back(full.empty() ? "e" : full);
    }
    cp = pcompose(cp, c);
  }
  return make_perm_group(order, names, "a4:v4-cosets-by-c-powers", {"a", "b", "c"});
}

GroupPtr make_s4() {
  const Perm4 d{1, 0, 2, 3};  // (12), odd coset representative
  auto a4 = make_a4();
  // Rebuild the permutation list of a4 in its declared order, then append
  // the coset (a4 element) * d.
  const Perm4 e{0, 1, 2, 3};
  const Perm4 a{1, 0, 3, 2}, b{2, 3, 0, 1}, c{1, 2, 0, 3};
  const Perm4 ab = pcompose(a, b);
  std::vector<Perm4> base;
  Perm4 cp = e;
  for (int ci = 0; ci < 3; ++ci) {
    for (const auto& g : {e, a, b, ab}) base.push_back(pcompose(g, cp));
    cp = pcompose(cp, c);
  }
  std::vector<Perm4> order = base;
  std::vector<std::string> names = a4->names();
  for (size_t i = 0; i < base.size(); ++i) {
    order.push_back(pcompose(base[i], d));
    names.push_back(names[i] == "e" ? "d" : names[i] + "d");
  }
  return make_perm_group(order, names, "s4:a4-then-odd-coset", {"a", "b", "c", "d"});
}

GroupPtr make_m16() {
  // M16 = <s,t | s^8 = t^2 = 1, st = ts^5>; normal form s^i t^j gives
  // (a,b)*(c,d) = (a + c*5^b mod 8, b + d mod 2).
  const int n = 16;
  auto idx = [](int i, int j) { return j * 8 + i; };
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < 8; ++i) {
    names[idx(i, 0)] = power_name("s", i);
    names[idx(i, 1)] = (i == 0) ? "t" : power_name("s", i) + "t";
  }
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 2; ++d) {
          const int twist = (b == 1) ? 5 : 1;
          table[idx(a, b)][idx(c, d)] = idx((a + c * twist) % 8, (b + d) % 2);
        }
  return finalize_group(std::move(names), std::move(table), 0, "m16:s-powers-then-coset",
                        {"s", "t"});
}

GroupPtr make_g24_8() {
  // (C6 x C2) x| C2 = <x,y,z | x^3 = y^4 = z^2 = 1, xy = yx^2, xz = zx,
  // yz = zy^3>. Normal form x^i y^j z^l:
  //   (i1,j1,l1)*(i2,j2,l2) = (i1 + i2*2^j1 mod 3, j1 + j2*3^l1 mod 4, l1+l2 mod 2).
  struct T { int i, j, l; };
  std::vector<T> elems;
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) elems.push_back({i, j, l});
  auto find = [&](int i, int j, int l) {
    for (size_t p = 0; p < elems.size(); ++p)
      if (elems[p].i == i && elems[p].j == j && elems[p].l == l) return static_cast<int>(p);
    return -1;
  };
  auto pw = [](int base, int exp, int mod) {
    int r = 1;
    for (int t = 0; t < exp; ++t) r = r * base % mod;
    return r;
  };
  const int n = 24;
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p) {
    const auto [i, j, l] = elems[p];
    std::string nm = (i ? power_name("x", i) : "") + (j ? power_name("y", j) : "") + (l ? "z" : "");
    names[p] = nm.empty() ? "e" : nm;
    for (int q = 0; q < n; ++q) {
      const auto [i2, j2, l2] = elems[q];
      table[p][q] = find((i + i2 * pw(2, j, 3)) % 3, (j + j2 * pw(3, l, 4)) % 4, (l + l2) % 2);
    }
  }
  return finalize_group(std::move(names), std::move(table), 0,
                        "g24_8:y-powers-by-x-by-z", {"x", "y", "z"});
}

GroupPtr make_sl23() {
  // SL(2,3) as 2x2 matrices over F3; x = [[2,2],[0,2]] and y = [[2,0],[2,2]]
  // satisfy x^3 = y^3 = (xy)^2 = -I. Ordering: x^i, x^i y, x^i y^2, x^i y^2 x.
  using Mat = std::array<int, 4>;
  auto mm = [](const Mat& A, const Mat& B) {
    return Mat{(A[0] * B[0] + A[1] * B[2]) % 3, (A[0] * B[1] + A[1] * B[3]) % 3,
               (A[2] * B[0] + A[3] * B[2]) % 3, (A[2] * B[1] + A[3] * B[3]) % 3};
  };
  const Mat e{1, 0, 0, 1}, x{2, 2, 0, 2}, y{2, 0, 2, 2};
  const Mat y2 = mm(y, y), y2x = mm(y2, x);
  std::vector<Mat> order;
  std::vector<std::string> names;
  const std::array<std::pair<Mat, std::string>, 4> cosets{
      {{e, ""}, {y, "y"}, {y2, "y^2"}, {y2x, "y^2x"}}};
  for (const auto& [t, suffix] : cosets) {
    Mat xp = e;
    for (int i = 0; i < 6; ++i) {
      order.push_back(mm(xp, t));
      std::string nm = (i ? power_name("x", i) : "") + suffix;
      names.push_back(nm.empty() ? "e" : nm);
      xp = mm(xp, x);
    }
  }
  std::map<Mat, int> index;
  for (size_t i = 0; i < order.size(); ++i)
    if (!index.emplace(order[i], static_cast<int>(i)).second)
      throw std::invalid_argument("sl23 ordering has duplicates");
  const int n = 24;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(mm(order[i], order[j]));
  return finalize_group(std::move(names), std::move(table), 0, "sl23:x-cosets", {"x", "y"});
}

GroupPtr make_c2c2c2() {
  auto g = make_direct_product(make_direct_product(make_cyclic(2, "x"), make_cyclic(2, "y")),
                               make_cyclic(2, "z"));
  return g;
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

GroupPtr make_named(std::string_view name) {
  if (name == "a4") return make_a4();
  if (name == "s4") return make_s4();
  if (name == "sl23") return make_sl23();
  if (name == "m16") return make_m16();
  if (name == "g24_8") return make_g24_8();
  if (name == "c2c2c2") return make_c2c2c2();
  throw std::invalid_argument("unknown group name '" + std::string(name) + "'");
}

GroupPtr parse_group_descriptor(std::string_view descriptor) {
  std::string text = trim(descriptor);

  std::string modifier;
  if (auto at = text.find('@'); at != std::string::npos) {
    modifier = trim(text.substr(at + 1));
    text = trim(text.substr(0, at));
  }

  if (text.rfind("table:", 0) == 0) {
    if (!modifier.empty()) throw std::invalid_argument("ordering modifiers do not apply to table files");
    return load_cayley_table_file(text.substr(6));
  }

  // Split on 'x' separators (surrounded by spaces) for direct products.
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t sep = text.find(" x ", pos);
    if (sep == std::string::npos) {
      parts.push_back(trim(text.substr(pos)));
      break;
    }
    parts.push_back(trim(text.substr(pos, sep - pos)));
    pos = sep + 3;
  }

  // Default single-letter generators, assigned in order of appearance with
  // collisions renamed to the next free letter.
  std::set<std::string> used;
  auto fresh = [&used](std::string pref) {
    static const std::string pool = "hgfklmnpqrvw";
    if (!used.count(pref)) return pref;
    for (char c : pool) {
      std::string cand(1, c);
      if (!used.count(cand)) return cand;
    }
    throw std::invalid_argument("out of generator names");
  };

  auto build_atom = [&](const std::string& atom) -> GroupPtr {
    GroupPtr g;
    if (atom.size() >= 2 && atom[0] == 'c' && std::isdigit(static_cast<unsigned char>(atom[1]))) {
      const int n = std::stoi(atom.substr(1));
      g = make_cyclic(n, fresh("h"));
    } else if (atom.size() >= 2 && atom[0] == 'd' && std::isdigit(static_cast<unsigned char>(atom[1]))) {
      const int n = std::stoi(atom.substr(1));
      g = make_dihedral(n, fresh("a"), fresh("b"));
    } else {
      g = make_named(atom);
      for (const auto& gen : g->generator_names())
        if (used.count(gen))
          throw std::invalid_argument("generator name collision in product: '" + gen + "'");
    }
    for (const auto& gen : g->generator_names()) used.insert(gen);
    return g;
  };

  GroupPtr g = build_atom(parts[0]);
  std::vector<GroupPtr> factors{g};
  for (size_t i = 1; i < parts.size(); ++i) {
    GroupPtr h = build_atom(parts[i]);
    factors.push_back(h);
    g = make_direct_product(g, h);
  }

  if (modifier.empty()) return g;
  if (modifier == "evenodd") return reorder_cyclic_even_odd(g);
  if (modifier == "csd") {
    if (factors.size() != 2)
      throw std::invalid_argument("@csd applies to a product of a cyclic group and a dihedral group");
    return reorder_cyclic_dihedral(g, factors[0]->order(), factors[1]->order());
  }
  throw std::invalid_argument("unknown ordering modifier '@" + modifier + "'");
}

GroupPtr load_cayley_table(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cayley table: invalid JSON: ") + e.what());
  }
  if (!doc.contains("order") || !doc.contains("table"))
    throw std::invalid_argument("cayley table: missing 'order' or 'table'");
  const int n = doc.at("order").get<int>();
  std::vector<std::vector<int>> table = doc.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("cayley table: table size does not match order");
  std::vector<std::string> names;
  if (doc.contains("names")) {
    names = doc.at("names").get<std::vector<std::string>>();
  } else {
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  }
  int identity = doc.value("identity", -1);
  if (identity < 0) {
    for (int i = 0; i < n && identity < 0; ++i) {
      bool ok = true;
      for (int j = 0; j < n; ++j)
        if (table[i][j] != j || table[j][i] != j) { ok = false; break; }
      if (ok) identity = i;
    }
    if (identity < 0) throw std::invalid_argument("cayley table: no identity element");
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), identity, "user-table");
}

GroupPtr load_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cayley table file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_cayley_table(ss.str());
}

std::vector<int> left_multiplication_permutation(const FiniteGroup& g, int h) {
  std::vector<int> perm(g.order());
  for (int j = 0; j < g.order(); ++j) perm[j] = g.mul(h, j);
  return perm;
}

std::vector<std::vector<int>> inversion_orbits(const FiniteGroup& g) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(g.order(), false);
  for (int i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    if (g.inv(i) == i) {
      orbits.push_back({i});
    } else {
      seen[g.inv(i)] = true;
      orbits.push_back({i, g.inv(i)});
    }
  }
  return orbits;
}

}  // namespace grc
