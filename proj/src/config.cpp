#include "mulrep/config.hpp"

#include <cctype>

#include "mulrep/arith.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : s_(text) {}

  Term parse_all() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a name or number");
    return s_.substr(start, pos_ - start);
  }

  Term term() {
    Term t;
    t.head = word();
    if (std::isdigit(static_cast<unsigned char>(t.head[0]))) {
      std::size_t used = 0;
      try {
        t.number = std::stoull(t.head, &used);
      } catch (const std::logic_error&) {
        fail("number out of range '" + t.head + "'");
      }
      if (used != t.head.size()) fail("malformed number '" + t.head + "'");
      t.is_number = true;
      return t;
    }
    if (!peek('(')) return t;
    ++pos_;
    if (peek(')')) {
      ++pos_;
      return t;
    }
    while (true) {
      Term first = term();
      if (peek('=')) {
        ++pos_;
        if (first.is_number || !first.args.empty()) fail("bad key");
        Term value = term();
        value.key = first.head;
        t.args.push_back(std::move(value));
      } else {
        t.args.push_back(std::move(first));
      }
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek(')')) {
        ++pos_;
        return t;
      }
      fail("expected ',' or ')'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void bad(const Term& t, const std::string& msg) { throw Error(Errc::parse, t.head + ": " + msg); }

std::uint64_t as_number(const Term& t) {
  if (!t.is_number) throw Error(Errc::parse, "expected a number, got '" + t.head + "'");
  return t.number;
}

std::optional<std::uint64_t> as_bound(const Term& t) {
  if (!t.is_number && (t.head == "inf" || t.head == "infinity")) return std::nullopt;
  return as_number(t);
}

// Named argument lookup with positional fallback.
const Term* arg(const Term& t, const std::string& key, std::size_t position) {
  for (const auto& a : t.args)
    if (a.key && *a.key == key) return &a;
  std::size_t seen = 0;
  for (const auto& a : t.args) {
    if (a.key) continue;
    if (seen++ == position) return &a;
  }
  return nullptr;
}

const Term& required(const Term& t, const std::string& key, std::size_t position) {
  const Term* v = arg(t, key, position);
  if (!v) bad(t, "missing argument '" + key + "'");
  return *v;
}

void expect_no_args(const Term& t) {
  if (!t.args.empty()) bad(t, "takes no arguments");
}

std::vector<std::uint64_t> numbers(const Term& t) {
  std::vector<std::uint64_t> out;
  for (const auto& a : t.args) {
    if (a.key) bad(t, "expects plain numbers");
    out.push_back(as_number(a));
  }
  return out;
}

PrimeClass prime_class_from(const Term& t);

SetDescription set_from(const Term& t) {
  const auto& h = t.head;
  if (h == "AllNaturals") return expect_no_args(t), SetDescription::all_naturals();
  if (h == "Primes") return expect_no_args(t), SetDescription::primes();
  if (h == "PrimesWithOne") return expect_no_args(t), SetDescription::primes_with_one();
  if (h == "Squarefree") return expect_no_args(t), SetDescription::squarefree();
  if (h == "Singleton") return SetDescription::singleton(numbers(t));
  if (h == "PowersOf") {
    const Term* lo = arg(t, "lo", 1);
    const Term* hi = arg(t, "hi", 2);
    return SetDescription::powers_of(as_number(required(t, "base", 0)), lo ? as_number(*lo) : 0,
                                     hi ? as_bound(*hi) : std::nullopt);
  }
  if (h == "SmoothOver") {
    if (t.args.size() != 1) bad(t, "takes one prime class");
    return SetDescription::smooth_over(prime_class_from(t.args[0]));
  }
  if (h == "Residue")
    return SetDescription::residue(as_number(required(t, "modulus", 0)), as_number(required(t, "residue", 1)));
  if (h == "Union" || h == "Intersection") {
    std::vector<SetDescription> parts;
    for (const auto& a : t.args) parts.push_back(set_from(a));
    return h == "Union" ? SetDescription::set_union(std::move(parts))
                        : SetDescription::set_intersection(std::move(parts));
  }
  bad(t, "unknown set kind");
}

PrimeClass prime_class_from(const Term& t) {
  if (t.head == "IndexResidue")
    return PrimeClass::index_residue(as_number(required(t, "modulus", 0)), as_number(required(t, "residue", 1)));
  if (t.head == "ExplicitList") return PrimeClass::explicit_list(numbers(t));
  if (t.head == "Complement")
    return PrimeClass::complement(prime_class_from(required(t, "class", 0)), as_number(required(t, "universe", 1)));
  bad(t, "unknown prime class");
}

std::optional<NamedConstruction> construction_from(const std::string& name, const Term& params) {
  auto h = [&] { return static_cast<unsigned>(as_number(required(params, "h", 0))); };
  if (name == "fundamental" || name == "Fundamental" || name == "FundamentalSystem") return build_fundamental(h());
  if (name == "one-t" || name == "LiminfOneLimsupT")
    return build_liminf_one_limsup_t(h(), as_number(required(params, "t", 1)));
  if (name == "one-inf" || name == "LiminfOneLimsupInf") return build_liminf_one_limsup_inf(h());
  if (name == "s-inf" || name == "LiminfSLimsupInf")
    return build_liminf_s_limsup_inf(h(), as_number(required(params, "s", 1)));
  return std::nullopt;
}

}  // namespace

Term parse_term(const std::string& text) { return TermParser(text).parse_all(); }

SetDescription parse_set(const std::string& text) { return set_from(parse_term(text)); }

PrimeClass parse_prime_class(const std::string& text) { return prime_class_from(parse_term(text)); }

std::optional<NamedConstruction> parse_construction(const std::string& text) {
  // Shorthand "name:k=v,k=v" is rewritten into the long form.
  if (auto colon = text.find(':'); colon != std::string::npos) {
    std::string name = text.substr(0, colon);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
    Term params = parse_term("P(" + text.substr(colon + 1) + ")");
    auto c = construction_from(name, params);
    if (!c) throw Error(Errc::parse, "unknown construction '" + name + "'");
    return c;
  }
  Term t = parse_term(text);
  return construction_from(t.head, t);
}

MultiplicativeSystem parse_system(const std::string& text) {
  if (auto c = parse_construction(text)) return c->system;
  Term t = parse_term(text);
  if (t.head == "System") {
    std::vector<SetDescription> parts;
    for (const auto& a : t.args) {
      if (a.key) bad(t, "parts are positional");
      parts.push_back(set_from(a));
    }
    return MultiplicativeSystem(std::move(parts));
  }
  if (t.head == "Basis") {
    const auto h = as_number(required(t, "h", 1));
    if (h < 2 || h > 64) bad(t, "h must be in [2, 64]");
    return MultiplicativeSystem::basis(set_from(required(t, "set", 0)), static_cast<unsigned>(h));
  }
  bad(t, "expected a construction, System(...) or Basis(...)");
}

FamilyDescription parse_family(const std::string& text) {
  Term t = parse_term(text);
  if (t.head == "ByCardinality") {
    std::vector<unsigned> sizes;
    for (auto v : numbers(t)) sizes.push_back(static_cast<unsigned>(v));
    return FamilyDescription::by_cardinality(std::move(sizes));
  }
  if (t.head == "Explicit") {
    std::vector<std::vector<std::uint64_t>> members;
    for (const auto& a : t.args) {
      if (a.key || a.head != "Set") bad(t, "members are written Set(a, b, ...)");
      members.push_back(numbers(a));
    }
    return FamilyDescription::explicit_members(std::move(members));
  }
  if (t.head == "ImageOfSet") {
    SetDescription set = set_from(required(t, "set", 0));
    std::optional<std::vector<std::uint64_t>> universe;
    if (const Term* u = arg(t, "universe", 99)) {
      if (u->head != "Set") bad(t, "universe is written Set(p, ...)");
      universe = numbers(*u);
    }
    if (const Term* upto = arg(t, "upto", 99)) {
      if (universe) bad(t, "give either universe or upto");
      universe = primes_up_to(as_number(*upto));
    }
    return FamilyDescription::image_of_set(std::move(set), std::move(universe));
  }
  bad(t, "unknown family kind");
}

std::vector<std::uint64_t> parse_number_list(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) return {};
  return numbers(parse_term("L(" + text + ")"));
}

}  // namespace mulrep
