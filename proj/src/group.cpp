#include "eulcat/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "eulcat/error.hpp"

namespace eulcat {

FinGroup::FinGroup() : labels_{"e"}, table_{0}, inverse_{0}, identity_(0) { index_labels(); }

FinGroup::FinGroup(std::vector<std::string> labels, std::vector<std::vector<Elem>> table, Elem identity)
    : labels_(std::move(labels)), identity_(identity) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "group has no elements");
  if (identity >= n) throw Error(ErrorKind::NotAGroup, "identity index out of range");
  if (table.size() != n) throw Error(ErrorKind::NotAGroup, "Cayley table has wrong number of rows");
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::NotAGroup, "Cayley table row " + labels_[a] + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw Error(ErrorKind::NotAGroup, "product out of range");
      table_[a * n + b] = table[a][b];
    }
  }
  index_labels();
  for (Elem a = 0; a < n; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw Error(ErrorKind::NotAGroup, "identity law fails at " + labels_[a]);
  }
  inverse_.assign(n, n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw Error(ErrorKind::NotAGroup, "no inverse for " + labels_[a]);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NotAGroup,
                      "associativity fails at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
}

void FinGroup::index_labels() {
  index_.clear();
  for (Elem a = 0; a < labels_.size(); ++a) {
    if (!index_.emplace(labels_[a], a).second)
      throw Error(ErrorKind::DuplicateId, "duplicate group element label " + labels_[a]);
  }
}

std::optional<Elem> FinGroup::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FinGroup::element(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::UnknownObject, "unknown group element " + std::string(label));
}

std::vector<std::vector<Elem>> FinGroup::table() const {
  std::vector<std::vector<Elem>> t(order(), std::vector<Elem>(order()));
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

bool FinGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FinGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Elem> FinGroup::generated(const std::vector<Elem>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elem> stack{identity_};
  seen[identity_] = 1;
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    for (Elem g : gens) {
      Elem y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < order(); ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

FinGroup FinGroup::subgroup(const std::vector<Elem>& elements, std::vector<Elem>* embedding) const {
  std::vector<Elem> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Elem> pos(order(), static_cast<Elem>(order()));
  for (Elem i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  if (elems.empty() || pos[identity_] == order()) throw Error(ErrorKind::NotAGroup, "subset misses the identity");
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(elems.size(), std::vector<Elem>(elems.size()));
  for (Elem i = 0; i < elems.size(); ++i) {
    labels.push_back(labels_[elems[i]]);
    for (Elem j = 0; j < elems.size(); ++j) {
      Elem p = pos[mul(elems[i], elems[j])];
      if (p == order()) throw Error(ErrorKind::NotAGroup, "subset is not closed under multiplication");
      table[i][j] = p;
    }
  }
  if (embedding) *embedding = elems;
  return FinGroup(std::move(labels), std::move(table), pos[identity_]);
}

std::vector<Elem> FinGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<Elem> span{identity_};
  for (Elem a = 0; a < order() && span.size() < order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = generated(gens);
  }
  return gens;
}

FinGroup FinGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Elem>((a + b) % n);
  }
  return FinGroup(std::move(labels), std::move(table), 0);
}

FinGroup FinGroup::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t(n), c(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      t[i] = i;
      c[i] = (i + 1) % n;
    }
    std::swap(t[0], t[1]);
    gens = {t, c};
  }
  return permutation_group(std::max<std::size_t>(n, 1), gens).group;
}

FinGroup FinGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "dihedral group of degree 0");
  // elements r^k s^e, encoded as k + n*e
  const std::size_t m = 2 * n;
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t k = x % n, e = x / n;
    labels.push_back(e ? "s" + std::to_string(k) : "r" + std::to_string(k));
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t l = y % n, f = y / n;
      // r^k s^e r^l s^f = r^(k + (-1)^e l) s^(e+f)
      std::size_t kk = e ? (k + n - l) % n : (k + l) % n;
      table[x][y] = static_cast<Elem>(kk + n * ((e + f) % 2));
    }
  }
  return FinGroup(std::move(labels), std::move(table), 0);
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    Elem x1 = x / b.order(), x2 = x % b.order();
    labels.push_back("(" + a.label(x1) + "," + b.label(x2) + ")");
    for (Elem y = 0; y < n; ++y) {
      Elem y1 = y / b.order(), y2 = y % b.order();
      table[x][y] = static_cast<Elem>(a.mul(x1, y1) * b.order() + b.mul(x2, y2));
    }
  }
  return FinGroup(std::move(labels), std::move(table), static_cast<Elem>(a.identity() * b.order() + b.identity()));
}

std::string cycle_notation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = p[j];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

PermutationGroup permutation_group(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  for (const Perm& g : gens) {
    if (g.size() != degree) throw Error(ErrorKind::NotAGroup, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw Error(ErrorKind::NotAGroup, "generator is not a permutation");
      hit[v] = 1;
    }
  }
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  std::set<Perm> elems{id};
  std::vector<Perm> stack{id};
  while (!stack.empty()) {
    Perm x = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      Perm y = compose(x, g);
      if (elems.insert(y).second) stack.push_back(y);
    }
  }
  std::vector<Perm> perms(elems.begin(), elems.end());
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(perms.size(), std::vector<Elem>(perms.size()));
  for (Elem i = 0; i < perms.size(); ++i) {
    labels.push_back(cycle_notation(perms[i]));
    for (Elem j = 0; j < perms.size(); ++j) table[i][j] = index.at(compose(perms[i], perms[j]));
  }
  return PermutationGroup{FinGroup(std::move(labels), std::move(table), index.at(id)), std::move(perms)};
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  auto fail = [&] { throw Error(ErrorKind::ParseError, "bad cycle notation: " + std::string(text)); };
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail();
    ++i;
    std::vector<std::uint32_t> cycle;
    std::string num;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char ch = text[i];
      if (ch >= '0' && ch <= '9') {
        num += ch;
      } else if (ch == ' ' || ch == ',') {
        if (!num.empty()) cycle.push_back(static_cast<std::uint32_t>(std::stoul(num)));
        num.clear();
      } else {
        fail();
      }
    }
    if (i == text.size()) fail();
    ++i;
    if (!num.empty()) cycle.push_back(static_cast<std::uint32_t>(std::stoul(num)));
    for (auto v : cycle)
      if (v == 0 || v > degree) fail();
    if (std::set<std::uint32_t>(cycle.begin(), cycle.end()).size() != cycle.size()) fail();
    // cycles compose right to left
    Perm c(degree);
    for (std::uint32_t v = 0; v < degree; ++v) c[v] = v;
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    Perm next(degree);
    for (std::size_t v = 0; v < degree; ++v) next[v] = p[c[v]];
    p = next;
  }
  return p;
}

void GroupHom::verify() const {
  if (map.size() != source.order()) throw Error(ErrorKind::NotAHomomorphism, "map has wrong size");
  for (Elem x : map)
    if (x >= target.order()) throw Error(ErrorKind::NotAHomomorphism, "image out of range");
  for (Elem a = 0; a < source.order(); ++a)
    for (Elem b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "product not preserved at (" + source.label(a) + "," + source.label(b) + ")");
}

bool GroupHom::injective() const {
  std::vector<char> hit(target.order(), 0);
  for (Elem x : map) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

GroupHom GroupHom::identity(const FinGroup& g) {
  std::vector<Elem> m(g.order());
  for (Elem a = 0; a < g.order(); ++a) m[a] = a;
  return GroupHom{g, g, std::move(m)};
}

GroupHom GroupHom::trivial(const FinGroup& from, const FinGroup& to) {
  return GroupHom{from, to, std::vector<Elem>(from.order(), to.identity())};
}

std::vector<GroupHom> all_homomorphisms(const FinGroup& a, const FinGroup& b) {
  const std::vector<Elem> gens = a.generators();
  std::vector<GroupHom> out;
  std::vector<Elem> images(gens.size(), 0);
  const Elem none = static_cast<Elem>(b.order());
  while (true) {
    // extend the generator assignment along a breadth-first closure
    std::vector<Elem> m(a.order(), none);
    m[a.identity()] = b.identity();
    std::vector<Elem> queue{a.identity()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      Elem x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem y = a.mul(x, gens[k]);
        Elem img = b.mul(m[x], images[k]);
        if (m[y] == none) {
          m[y] = img;
          queue.push_back(y);
        } else if (m[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      GroupHom h{a, b, m};
      try {
        h.verify();
        out.push_back(std::move(h));
      } catch (const Error&) {
      }
    }
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == b.order()) images[k++] = 0;
    if (k == images.size()) break;
  }
  return out;
}

}  // namespace eulcat
