#include "cliffordsys/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

[[noreturn]] void fail(int line, const std::string& expected) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected " + expected, std::to_string(line));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long to_long(const std::string& s, int line, const std::string& what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail(line, what + ", got '" + s + "'");
  return v;
}

std::vector<long> to_list(const std::string& s, int line, const std::string& what) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) out.push_back(to_long(part, line, what));
  return out;
}

long positive(const SpecEntry& e, const std::string& what) {
  long v = to_long(e.value, e.line, what);
  if (v <= 0) fail(e.line, what);
  return v;
}

bool is_table_key(const std::string& key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ' ';
  });
}

std::string kind_of(const SpecSection& s, const std::string& fallback = {}) {
  const auto* e = s.find("kind");
  if (!e) {
    if (fallback.empty()) fail(s.line, "a 'kind' key in [" + s.name + "]");
    return fallback;
  }
  return e->value;
}

Elem element(const FiniteCommRing& k, long v, int line) {
  if (v < 0 || static_cast<std::uint64_t>(v) >= k.size())
    fail(line, "a ring element index below " + std::to_string(k.size()));
  return static_cast<Elem>(v);
}

Vec vector_of(const FiniteCommRing& k, const std::string& s, std::size_t rank, int line) {
  auto list = to_list(s, line, "a comma-separated coordinate vector");
  if (list.size() != rank) fail(line, std::to_string(rank) + " coordinates");
  Vec v;
  for (long x : list) v.push_back(element(k, x, line));
  return v;
}

std::vector<Vec> vectors_of(const FiniteCommRing& k, const std::string& s, std::size_t rank, int line) {
  std::vector<Vec> out;
  for (const auto& part : split(s, ';')) out.push_back(vector_of(k, part, rank, line));
  return out;
}

// Rethrows library errors raised while building from a section as
// ParseErrors on the given line, keeping the original message.
template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    std::string w = e.witness().empty() ? "" : " (witness " + e.witness() + ")";
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": expected valid data: " + std::string(to_string(e.kind())) + ": " +
                    e.what() + w,
                std::to_string(line));
  }
}

}  // namespace

const SpecEntry* SpecSection::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const SpecEntry& SpecSection::require(std::string_view key) const {
  const auto* e = find(key);
  if (!e) fail(line, "key '" + std::string(key) + "' in [" + name + "]");
  return *e;
}

std::vector<const SpecEntry*> SpecSection::table() const {
  std::vector<const SpecEntry*> out;
  for (const auto& e : entries)
    if (is_table_key(e.key)) out.push_back(&e);
  return out;
}

SpecFile SpecFile::parse(std::string_view text) {
  static const std::vector<std::string> known{"group", "ring",  "action",  "cocycle", "algebra",
                                              "crossed", "character", "galois", "grading", "audit"};
  SpecFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "']' closing the section header");
      std::string inner = trim(s.substr(1, s.size() - 2));
      SpecSection sec;
      sec.line = line;
      auto colon = inner.find(':');
      sec.name = trim(inner.substr(0, colon));
      if (colon != std::string::npos) sec.label = trim(inner.substr(colon + 1));
      if (std::find(known.begin(), known.end(), sec.name) == known.end()) fail(line, "a known section name");
      for (const auto& other : out.sections_)
        if (other.name == sec.name && other.label == sec.label) fail(line, "a section name not used before");
      out.sections_.push_back(std::move(sec));
      continue;
    }
    if (out.sections_.empty()) fail(line, "a section header");
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "'key = value'");
    SpecEntry e{trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line};
    if (e.key.empty()) fail(line, "a key before '='");
    if (out.sections_.back().find(e.key)) fail(line, "a key not used before in this section");
    out.sections_.back().entries.push_back(std::move(e));
  }
  if (out.sections_.empty()) fail(std::max(line, 1), "a section header");
  out.last_line_ = std::max(line, 1);
  return out;
}

SpecFile SpecFile::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read spec file", path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

const SpecSection* SpecFile::section(std::string_view name, std::string_view label) const {
  for (const auto& s : sections_)
    if (s.name == name && s.label == label) return &s;
  return nullptr;
}

FiniteGroup SpecFile::group() const {
  const auto* s = section("group");
  if (!s) fail(last_line_, "a [group] section");
  const auto kind = kind_of(*s);
  if (kind == "cyclic" || kind == "dihedral") {
    const auto& n = s->require("n");
    const long v = positive(n, "a positive group parameter n");
    return kind == "cyclic" ? FiniteGroup::cyclic(static_cast<int>(v)) : FiniteGroup::dihedral(static_cast<int>(v));
  }
  if (kind == "product") {
    const auto& e = s->require("factors");
    auto list = to_list(e.value, e.line, "comma-separated cyclic orders");
    FiniteGroup g = FiniteGroup::cyclic(1);
    bool first = true;
    for (long m : list) {
      if (m <= 0) fail(e.line, "positive cyclic orders");
      auto c = FiniteGroup::cyclic(static_cast<int>(m));
      g = first ? c : FiniteGroup::direct_product(g, c);
      first = false;
    }
    return g;
  }
  if (kind == "table") {
    const auto& e = s->require("table");
    std::vector<std::vector<int>> rows;
    for (const auto& row : split(e.value, ';')) {
      std::vector<int> r;
      for (long x : to_list(row, e.line, "comma-separated table rows separated by ';'")) r.push_back(static_cast<int>(x));
      rows.push_back(std::move(r));
    }
    return at_line(e.line, [&] { return FiniteGroup::from_table(rows); });
  }
  fail(s->require("kind").line, "group kind cyclic, dihedral, product or table");
}

RingPtr SpecFile::ring() const {
  const auto* s = section("ring");
  if (!s) fail(last_line_, "a [ring] section");
  const auto kind = kind_of(*s);
  if (kind == "mod") {
    const auto& m = s->require("modulus");
    const long v = positive(m, "a modulus of at least 2");
    if (v < 2) fail(m.line, "a modulus of at least 2");
    return at_line(m.line, [&] { return FiniteCommRing::modular(v); });
  }
  if (kind == "field") {
    const auto& p = s->require("p");
    const auto& poly = s->require("poly");
    const long pv = positive(p, "a prime p");
    Poly f = to_list(poly.value, poly.line, "polynomial coefficients, constant term first");
    auto k = at_line(poly.line, [&] { return FiniteCommRing::field(pv, f); });
    if (const auto* sub = s->find("subfield")) {
      const long q = positive(*sub, "the order of the subfield k");
      k = at_line(sub->line, [&] { return k->with_subfield_of_order(static_cast<std::uint64_t>(q)); });
    }
    return k;
  }
  if (kind == "product") {
    const auto& e = s->require("moduli");
    std::vector<RingPtr> factors;
    for (long m : to_list(e.value, e.line, "comma-separated moduli")) {
      if (m < 2) fail(e.line, "moduli of at least 2");
      factors.push_back(FiniteCommRing::modular(m));
    }
    return at_line(e.line, [&] { return FiniteCommRing::product(factors); });
  }
  fail(s->require("kind").line, "ring kind mod, field or product");
}

UnitModulePtr SpecFile::type() const {
  auto g = group();
  auto k = ring();
  const auto* s = section("action");
  if (!s) return std::make_shared<const UnitModule>(RingAction::trivial(g, k));
  const auto kind = kind_of(*s, "trivial");
  const int line = s->line;
  if (kind == "trivial") return std::make_shared<const UnitModule>(RingAction::trivial(g, k));
  if (kind == "frobenius") {
    const auto& q = s->require("q");
    const long qv = positive(q, "the Frobenius exponent q");
    if (!(g == FiniteGroup::cyclic(g.order()))) fail(line, "a cyclic [group] for a Frobenius action");
    return at_line(q.line, [&] {
      return std::make_shared<const UnitModule>(RingAction::frobenius(k, static_cast<std::uint64_t>(qv), g.order()));
    });
  }
  if (kind == "images") {
    const auto& e = s->require("images");
    auto parts = split(e.value, ';');
    if (parts.size() != g.generators().size())
      fail(e.line, std::to_string(g.generators().size()) + " automorphisms separated by ';', one per generator");
    std::vector<RingAutomorphism> autos;
    for (const auto& part : parts) {
      std::vector<Elem> images;
      for (long x : to_list(part, e.line, "images of the ring's additive basis")) images.push_back(element(*k, x, e.line));
      autos.push_back(at_line(e.line, [&] { return RingAutomorphism::from_basis_images(k, images); }));
    }
    return at_line(e.line, [&] {
      return std::make_shared<const UnitModule>(RingAction::from_generator_images(g, k, autos));
    });
  }
  fail(s->require("kind").line, "action kind trivial, frobenius or images");
}

Cochain SpecFile::cocycle(std::string_view label) const {
  const auto* s = section("cocycle", label);
  if (!s) fail(last_line_, "a [cocycle" + std::string(label.empty() ? "" : ":") + std::string(label) + "] section");
  auto type = this->type();
  const auto& G = type->group();
  long degree = 2;
  if (const auto* d = s->find("degree")) degree = to_long(d->value, d->line, "a degree between 1 and 3");
  if (degree < 1 || degree > 3) fail(s->line, "a degree between 1 and 3");
  Cochain c(type->module(), static_cast<int>(degree));
  for (const auto* e : s->table()) {
    auto tuple = to_list(e->key, e->line, "a tuple of group elements");
    if (tuple.size() != static_cast<std::size_t>(degree)) fail(e->line, "a tuple of length " + std::to_string(degree));
    std::vector<int> t;
    for (long x : tuple) {
      if (x < 0 || x >= G.order()) fail(e->line, "group elements below " + std::to_string(G.order()));
      t.push_back(static_cast<int>(x));
    }
    Elem u = element(type->ring(), to_long(e->value, e->line, "a ring unit index"), e->line);
    if (!type->ring().is_unit(u)) fail(e->line, "a unit of the ring");
    const bool has_identity = std::find(t.begin(), t.end(), 0) != t.end();
    if (has_identity) {
      if (u != type->ring().one()) fail(e->line, "value 1 on tuples containing the identity (normalized cochain)");
      continue;
    }
    c.set(t, type->log(u));
  }
  return c;
}

AlgebraPtr SpecFile::algebra() const {
  auto k = ring();
  const auto* s = section("algebra");
  if (!s) return Algebra::base_ring(k);
  const auto kind = kind_of(*s);
  if (kind == "base") return Algebra::base_ring(k);
  if (kind == "matrix") {
    const auto& n = s->require("n");
    const long v = positive(n, "a positive matrix size n");
    return at_line(n.line, [&] { return Algebra::matrix_algebra(static_cast<std::size_t>(v), k); });
  }
  if (kind == "group") return at_line(s->line, [&] { return Algebra::group_algebra(group(), k); });
  if (kind == "constants") {
    const auto& r = s->require("rank");
    const long rank = positive(r, "a positive rank");
    if (static_cast<std::size_t>(rank) > kMaxAlgebraRank) fail(r.line, "a rank of at most 64");
    const auto n = static_cast<std::size_t>(rank);
    std::vector<Vec> products(n * n, Vec(n, 0));
    for (const auto* e : s->table()) {
      auto ij = to_list(e->key, e->line, "an index pair i,j");
      if (ij.size() != 2 || ij[0] < 0 || ij[1] < 0 || ij[0] >= rank || ij[1] >= rank)
        fail(e->line, "an index pair i,j below the rank");
      products[static_cast<std::size_t>(ij[0] * rank + ij[1])] = vector_of(*k, e->value, n, e->line);
    }
    Vec unit;
    if (const auto* u = s->find("unit")) unit = vector_of(*k, u->value, n, u->line);
    std::string name = "constants";
    if (const auto* nm = s->find("name")) name = nm->value;
    return at_line(s->line, [&] { return Algebra::from_constants(k, n, products, unit, name); });
  }
  fail(s->require("kind").line, "algebra kind base, matrix, group or constants");
}

namespace {

// term := coefficientwise | inner v | images v;v;... ; terms joined by '*'
// compose right to left.
AlgebraMap parse_map(const std::string& text, const AlgebraPtr& r, const UnitModule& type, int g, int line) {
  const auto& k = *r->ring();
  std::optional<AlgebraMap> acc;
  auto terms = split(text, '*');
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const std::string& term = *it;
    auto sp = term.find(' ');
    std::string head = term.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(term.substr(sp + 1));
    AlgebraMap m = at_line(line, [&]() -> AlgebraMap {
      if (head == "coefficientwise") return AlgebraMap::coefficientwise(r, type.action()(g));
      if (head == "identity") return AlgebraMap::identity(r);
      if (head == "inner") return AlgebraMap::inner(r, vector_of(k, rest, r->rank(), line));
      if (head == "images")
        return AlgebraMap::automorphism(r, vectors_of(k, rest, r->rank(), line), type.action()(g));
      fail(line, "a map term: identity, coefficientwise, inner v or images v;v;...");
    });
    acc = acc ? m.compose(*acc) : m;
  }
  return *acc;
}

}  // namespace

CollectiveCharacter SpecFile::character() const {
  const auto* s = section("character");
  if (!s) fail(last_line_, "a [character] section");
  auto r = algebra();
  auto type = this->type();
  const auto& G = type->group();
  if (kind_of(*s, "images") == "trivial") return at_line(s->line, [&] { return CollectiveCharacter::trivial(r, type); });
  std::vector<AlgebraMap> gens;
  for (int g : G.generators()) {
    const auto* e = s->find(std::to_string(g));
    if (!e) fail(s->line, "an entry for generator " + std::to_string(g));
    gens.push_back(parse_map(e->value, r, *type, g, e->line));
  }
  for (const auto* e : s->table()) {
    long g = to_long(e->key, e->line, "a generator index");
    if (std::find(G.generators().begin(), G.generators().end(), g) == G.generators().end())
      fail(e->line, "an entry keyed by a group generator");
  }
  return at_line(s->line, [&] { return CollectiveCharacter::from_generators(G, r, gens, type); });
}

CrossedProduct SpecFile::crossed() const {
  const auto* s = section("crossed");
  if (!s) fail(last_line_, "a [crossed] section");
  auto type = this->type();
  const auto& G = type->group();
  const int n = G.order();
  AlgebraPtr base = Algebra::base_ring(type->action().ring());
  if (const auto* b = s->find("base")) {
    if (b->value == "algebra")
      base = algebra();
    else if (b->value != "ring")
      fail(b->line, "base = ring or base = algebra");
  }
  std::vector<AlgebraMap> eta;
  const auto* a = s->find("action");
  const std::string action = a ? a->value : "coefficientwise";
  if (action == "character") {
    if (!base->same_presentation(*algebra())) fail(a->line, "base = algebra with action = character");
    eta = character().etas();
  } else if (action == "coefficientwise") {
    for (int g = 0; g < n; ++g) eta.push_back(at_line(s->line, [&] { return AlgebraMap::coefficientwise(base, type->action()(g)); }));
  } else {
    fail(a->line, "action = coefficientwise or action = character");
  }
  std::vector<Vec> f(static_cast<std::size_t>(n * n), base->unit());
  for (const auto* e : s->table()) {
    auto gh = to_list(e->key, e->line, "a pair g,h");
    if (gh.size() != 2 || gh[0] < 0 || gh[1] < 0 || gh[0] >= n || gh[1] >= n) fail(e->line, "a pair g,h of group elements");
    f[static_cast<std::size_t>(gh[0] * n + gh[1])] = vector_of(*base->ring(), e->value, base->rank(), e->line);
  }
  auto cp = at_line(s->line, [&] { return CrossedProduct::build(base, type, eta, f); });
  if (const auto* c = s->find("cocycle")) {
    auto alpha = cocycle(c->value == "default" ? "" : c->value);
    cp = at_line(c->line, [&] { return twist(alpha, cp); });
  }
  return cp;
}

std::vector<int> SpecFile::grading() const {
  const auto* s = section("grading");
  if (!s) fail(last_line_, "a [grading] section");
  const auto& e = s->require("degrees");
  auto a = algebra();
  auto g = group();
  std::vector<int> out;
  for (long d : to_list(e.value, e.line, "comma-separated degrees")) {
    if (d < 0 || d >= g.order()) fail(e.line, "degrees below " + std::to_string(g.order()));
    out.push_back(static_cast<int>(d));
  }
  if (out.size() != a->rank()) fail(e.line, std::to_string(a->rank()) + " degrees, one per basis element");
  return out;
}

GaloisSetup SpecFile::galois() const {
  const auto* s = section("galois");
  if (!s) fail(last_line_, "a [galois] section");
  const auto& n = s->require("n");
  const long nv = positive(n, "a positive extension degree n");
  GaloisParams params;
  if (const auto* p = s->find("p")) {
    params.p = positive(*p, "a prime p");
    const auto& poly = s->require("poly");
    params.poly = to_list(poly.value, poly.line, "polynomial coefficients, constant term first");
  } else {
    const auto& q = s->require("q");
    auto d = default_galois_params(positive(q, "a prime q"), static_cast<int>(nv));
    if (!d) fail(q.line, "(q, n) from the built-in table, or explicit p and poly");
    params = *d;
  }
  return at_line(s->line, [&] { return galois_setup(params.p, params.poly, static_cast<int>(nv)); });
}

std::optional<GaloisParams> default_galois_params(long q, int n) {
  struct Row {
    long q;
    int n;
    Poly poly;
  };
  static const std::vector<Row> table{{2, 2, {1, 1, 1}},    {3, 2, {1, 0, 1}}, {2, 3, {1, 1, 0, 1}},
                                      {2, 4, {1, 1, 0, 0, 1}}, {3, 3, {1, 2, 0, 1}}, {5, 2, {2, 0, 1}}};
  for (const auto& r : table)
    if (r.q == q && r.n == n) return GaloisParams{q, r.poly, n};
  return std::nullopt;
}

}  // namespace cliffordsys
