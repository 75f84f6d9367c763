#include <algorithm>
#include <cctype>
#include <charconv>

#include "eval.hpp"

namespace frobdiff::cli {

Session default_session(std::uint32_t p, unsigned n) {
  Session s;
  s.field = FieldSpec::make(p, {"t"});
  s.d.emplace(s.field, n, std::vector<RatFunc>{RatFunc::one(s.field)});
  return s;
}

namespace {

// A value together with its byte offset in the session text, so that
// syntax errors point into the file rather than into the fragment.
struct Located {
  std::string text;
  std::size_t offset = 0;
};

struct Entry {
  Located key;
  Located value;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Located trim(std::string_view text, std::size_t offset) {
  std::size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  return {std::string(text.substr(b, e - b)), offset + b};
}

ExprPtr parse_at(const Located& v) {
  try {
    return parse_expr(v.text);
  } catch (const SyntaxError& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at byte "));
    throw SyntaxError(v.offset + e.offset(), msg);
  }
}

std::vector<std::string> split_names(const Located& v) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : v.text) {
    if (c == ',' || is_space(c)) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::uint64_t parse_number(const Located& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), out);
  if (ec != std::errc() || ptr != v.text.data() + v.text.size() || v.text.empty())
    throw SyntaxError(v.offset, "expected a number");
  return out;
}

// "f(arg)" -> arg, for keys such as d(t) and pi(e).
std::optional<std::string> call_argument(const std::string& key, const std::string& f) {
  if (key.size() > f.size() + 2 && key.compare(0, f.size() + 1, f + "(") == 0 && key.back() == ')')
    return trim(std::string_view(key).substr(f.size() + 1, key.size() - f.size() - 2), 0).text;
  return std::nullopt;
}

void reserved(const std::string& name, std::size_t offset) {
  if (name == "x" || name == "d" || name == "l0")
    throw SyntaxError(offset, "'" + name + "' is reserved");
  bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  if (!ok) throw SyntaxError(offset, "bad name '" + name + "'");
}

// sum c_k b_k over basis names
std::vector<std::int64_t> linear_combination(const Expr& e, const std::vector<std::string>& basis, std::uint32_t p) {
  using Kind = Expr::Kind;
  std::vector<std::int64_t> out(basis.size(), 0);
  auto scale = [&](std::vector<std::int64_t> v, std::int64_t c) {
    for (auto& x : v) x = static_cast<std::int64_t>(fp::reduce(x * c, p));
    return v;
  };
  switch (e.kind) {
    case Kind::Num:
      out[0] = static_cast<std::int64_t>(e.value % p);
      return out;
    case Kind::Name: {
      auto it = std::find(basis.begin(), basis.end(), e.name);
      if (e.primes || it == basis.end()) throw Error(ErrorCode::UnknownName, "unknown basis element " + e.name);
      out[static_cast<std::size_t>(it - basis.begin())] = 1;
      return out;
    }
    case Kind::Add:
    case Kind::Sub: {
      auto a = linear_combination(*e.args[0], basis, p);
      auto b = linear_combination(*e.args[1], basis, p);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = fp::reduce(e.kind == Kind::Add ? a[i] + b[i] : a[i] - b[i], p);
      return out;
    }
    case Kind::Mul:
      if (e.args[0]->kind == Kind::Num)
        return scale(linear_combination(*e.args[1], basis, p), static_cast<std::int64_t>(e.args[0]->value % p));
      if (e.args[1]->kind == Kind::Num)
        return scale(linear_combination(*e.args[0], basis, p), static_cast<std::int64_t>(e.args[1]->value % p));
      [[fallthrough]];
    default:
      throw Error(ErrorCode::ShapeViolation, "structure constants must be linear in the basis: " + print(e));
  }
}

}  // namespace

Session parse_session(std::string_view text, std::optional<unsigned> n_override) {
  std::map<std::string, std::vector<Entry>> sections;
  std::string section;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Located l = trim(line, pos);
    if (!l.text.empty()) {
      if (l.text.front() == '[') {
        if (l.text.back() != ']') throw SyntaxError(l.offset, "unterminated section header");
        section = l.text.substr(1, l.text.size() - 2);
        if (section != "field" && section != "tower" && section != "bind" && section != "algebra")
          throw SyntaxError(l.offset, "unknown section [" + section + "]");
      } else {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(l.offset, "expected 'key = value'");
        if (section.empty()) throw SyntaxError(l.offset, "entry outside of a section");
        sections[section].push_back({trim(line.substr(0, eq), pos), trim(line.substr(eq + 1), pos + eq + 1)});
      }
    }
    pos = end + 1;
  }

  Session s;
  std::uint32_t p = 2;
  unsigned n = 1;
  std::vector<std::string> gens{"t"};
  std::vector<Entry> images;
  for (const auto& e : sections["field"]) {
    if (e.key.text == "p") {
      p = static_cast<std::uint32_t>(parse_number(e.value));
    } else if (e.key.text == "n") {
      n = static_cast<unsigned>(parse_number(e.value));
    } else if (e.key.text == "generators") {
      gens = split_names(e.value);
      for (const auto& g : gens) reserved(g, e.value.offset);
    } else if (call_argument(e.key.text, "d")) {
      images.push_back(e);
    } else {
      throw SyntaxError(e.key.offset, "unknown field key '" + e.key.text + "'");
    }
  }
  if (n_override) n = *n_override;
  s.field = FieldSpec::make(p, gens);
  for (const auto& e : sections["bind"]) {
    reserved(e.key.text, e.key.offset);
    if (s.field.index_of(e.key.text)) throw SyntaxError(e.key.offset, "binding shadows generator " + e.key.text);
    s.bindings[e.key.text] = parse_at(e.value);
  }

  Evaluator ev(s);
  std::vector<RatFunc> imgs(s.field.nvars(), RatFunc::zero(s.field));
  for (const auto& e : images) {
    auto name = *call_argument(e.key.text, "d");
    auto i = s.field.index_of(name);
    if (!i) throw Error(ErrorCode::UnknownName, "d(" + name + ") names no generator");
    imgs[*i] = ev.field(*parse_at(e.value));
  }
  s.d.emplace(s.field, n, imgs);

  if (sections.count("tower")) {
    std::vector<InseparableGenerator> tgens;
    std::vector<Entry> timages;
    for (const auto& e : sections["tower"]) {
      if (call_argument(e.key.text, "d")) {
        timages.push_back(e);
        continue;
      }
      // name or name^(p^e)
      std::string name = e.key.text;
      unsigned exponent = 1;
      if (auto caret = name.find('^'); caret != std::string::npos) {
        Located power = trim(std::string_view(name).substr(caret + 1), e.key.offset + caret + 1);
        std::uint64_t q = parse_number(power);
        exponent = 0;
        while (q > 1 && q % p == 0) {
          q /= p;
          ++exponent;
        }
        if (q != 1 || exponent == 0) throw SyntaxError(power.offset, "tower exponent must be a power of p");
        name = trim(std::string_view(name).substr(0, caret), 0).text;
      }
      if (name != "x") reserved(name, e.key.offset);
      tgens.push_back({name, exponent, ev.field(*parse_at(e.value))});
    }
    s.tower = Tower::make(s.field, tgens);
    std::vector<TowerElem> timgs(s.tower->rank(), TowerElem(s.tower));
    for (const auto& e : timages) {
      auto name = *call_argument(e.key.text, "d");
      auto j = s.tower->index_of(name);
      if (!j) throw Error(ErrorCode::UnknownName, "d(" + name + ") names no tower generator");
      timgs[*j] = ev.tower(*parse_at(e.value));
    }
    s.tower_d.emplace(s.tower, *s.d, timgs);
  }

  if (sections.count("algebra")) {
    std::vector<std::string> basis;
    std::vector<Entry> rest;
    for (const auto& e : sections["algebra"]) {
      if (e.key.text == "basis") {
        basis = split_names(e.value);
        if (basis.empty() || basis[0] != "1") throw SyntaxError(e.value.offset, "the basis must start with 1");
        for (std::size_t i = 1; i < basis.size(); ++i) reserved(basis[i], e.value.offset);
      } else {
        rest.push_back(e);
      }
    }
    if (basis.empty()) throw Error(ErrorCode::ShapeViolation, "[algebra] needs a basis");
    const std::size_t dim = basis.size();
    auto index = [&](const std::string& name, std::size_t offset) {
      auto it = std::find(basis.begin(), basis.end(), name);
      if (it == basis.end()) throw SyntaxError(offset, "unknown basis element '" + name + "'");
      return static_cast<std::size_t>(it - basis.begin());
    };
    std::vector<std::vector<std::vector<std::int64_t>>> table(
        dim, std::vector<std::vector<std::int64_t>>(dim, std::vector<std::int64_t>(dim, 0)));
    std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
    for (std::size_t i = 0; i < dim; ++i) {
      table[0][i][i] = 1;
      table[i][0][i] = 1;
    }
    std::vector<std::int64_t> pi(dim, 0);
    pi[0] = 1;
    std::vector<std::vector<Poly>> bimages(s.field.nvars(),
                                           std::vector<Poly>(dim - 1, Poly(s.field.p, s.field.nvars())));
    for (const auto& e : rest) {
      const auto& key = e.key.text;
      if (auto arg = call_argument(key, "pi")) {
        pi[index(*arg, e.key.offset)] = linear_combination(*parse_at(e.value), {"1"}, p)[0];
        continue;
      }
      if (auto star = key.find('*'); star != std::string::npos) {
        std::size_t i = index(trim(std::string_view(key).substr(0, star), 0).text, e.key.offset);
        std::size_t j = index(trim(std::string_view(key).substr(star + 1), 0).text, e.key.offset);
        table[i][j] = linear_combination(*parse_at(e.value), basis, p);
        given[i][j] = true;
        if (!given[j][i]) table[j][i] = table[i][j];
        continue;
      }
      if (auto paren = key.find('('); paren != std::string::npos && key.back() == ')') {
        std::size_t k = index(trim(std::string_view(key).substr(0, paren), 0).text, e.key.offset);
        auto gen = *call_argument(key, key.substr(0, paren));
        auto i = s.field.index_of(gen);
        if (!i) throw Error(ErrorCode::UnknownName, key + " names no generator");
        if (k == 0) throw SyntaxError(e.key.offset, "the unit component is the identity");
        bimages[*i][k - 1] = ev.polynomial(*parse_at(e.value));
        continue;
      }
      throw SyntaxError(e.key.offset, "unknown algebra key '" + key + "'");
    }
    s.algebra = AlgebraB::make(p, basis, table, pi);
    s.algebra_verdict = validate_algebra(*s.algebra);
    if (s.algebra_verdict->ok) s.bop.emplace(*s.algebra, s.field, bimages);
  }
  return s;
}

}  // namespace frobdiff::cli
