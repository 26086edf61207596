#include "homcover/spec.hpp"

#include <algorithm>
#include <cctype>

#include "homcover/constructors.hpp"
#include "homcover/error.hpp"

namespace homcover {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = product();
    skip_space();
    if (pos_ != text_.size()) fail("'x' or end of input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::InvalidSpec, "at position " + std::to_string(pos_) + ": expected " +
                                            expected + ", found " + found);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_char(char c) {
    skip_space();
    return pos_ < text_.size() &&
           std::tolower(static_cast<unsigned char>(text_[pos_])) == std::tolower(c);
  }

  bool accept(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  bool accept_keyword(std::string_view word) {
    skip_space();
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) != word[i]) return false;
    }
    pos_ += word.size();
    return true;
  }

  std::uint64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (UINT64_MAX - 9) / 10) fail("a smaller integer");
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("integer");
    return value;
  }

  GroupSpec product() {
    GroupSpec first = power();
    if (!peek_char('x')) return first;
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::Product;
    prod.children.push_back(std::move(first));
    while (accept('x')) prod.children.push_back(power());
    return prod;
  }

  GroupSpec power() {
    GroupSpec base = atom();
    if (!accept('^')) return base;
    GroupSpec pow;
    pow.kind = GroupSpec::Kind::Power;
    std::size_t at = pos_;
    pow.k = integer();
    if (pow.k == 0) {
      pos_ = at;
      fail("positive exponent");
    }
    pow.children.push_back(std::move(base));
    return pow;
  }

  GroupSpec atom() {
    GroupSpec spec;
    if (accept('(')) {
      spec = product();
      expect(')');
      return spec;
    }
    if (accept_keyword("perm")) {
      expect(':');
      spec.kind = GroupSpec::Kind::Permutation;
      do {
        spec.permutation_generators.push_back(cycles());
      } while (accept(';'));
      return spec;
    }
    if (accept_keyword("table")) {
      expect(':');
      spec.kind = GroupSpec::Kind::Table;
      skip_space();
      std::string_view rest = text_.substr(pos_);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
        rest.remove_suffix(1);
      }
      if (rest.empty()) fail("table path");
      spec.path = std::string(rest);
      pos_ = text_.size();
      return spec;
    }
    if (accept_keyword("pq")) {
      spec.kind = GroupSpec::Kind::PQ;
      expect('(');
      spec.p = integer();
      expect(',');
      spec.q = integer();
      expect(')');
      if (!is_prime(spec.p) || !is_prime(spec.q) || (spec.q - 1) % spec.p != 0) {
        throw Error(ErrorKind::InvalidPQ, "pq(" + std::to_string(spec.p) + "," +
                                              std::to_string(spec.q) +
                                              "): need primes p, q with p | q-1");
      }
      return spec;
    }
    if (accept_keyword("q8")) {
      spec.kind = GroupSpec::Kind::Quaternion;
      return spec;
    }
    using K = GroupSpec::Kind;
    struct Letter {
      char c;
      K kind;
    };
    for (Letter letter : {Letter{'c', K::Cyclic}, Letter{'s', K::Symmetric},
                          Letter{'a', K::Alternating}, Letter{'d', K::Dihedral}}) {
      if (accept(letter.c)) {
        spec.kind = letter.kind;
        std::size_t at = pos_;
        spec.k = integer();
        if (spec.k == 0 && (letter.kind == K::Cyclic || letter.kind == K::Dihedral)) {
          pos_ = at;
          fail("positive integer");
        }
        return spec;
      }
    }
    fail("group (C<k>, S<k>, A<k>, D<k>, Q8, pq(p,q), perm:, table: or '(')");
  }

  GroupSpec::CycleProduct cycles() {
    GroupSpec::CycleProduct product;
    if (!peek_char('(')) fail("'(' starting a cycle");
    while (accept('(')) {
      GroupSpec::Cycle cycle;
      skip_space();
      while (!peek_char(')')) {
        std::size_t at = pos_;
        std::uint32_t point = static_cast<std::uint32_t>(integer());
        if (point == 0) {
          pos_ = at;
          fail("point >= 1");
        }
        if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
          pos_ = at;
          fail("distinct points in a cycle");
        }
        cycle.push_back(point);
        accept(',');
      }
      expect(')');
      if (!cycle.empty()) product.push_back(std::move(cycle));
    }
    return product;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_factor(const GroupSpec& spec) {
  std::string text = print_spec(spec);
  bool compound = spec.kind == GroupSpec::Kind::Product || spec.kind == GroupSpec::Kind::Table;
  return compound ? "(" + text + ")" : text;
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string print_spec(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return "C" + std::to_string(spec.k);
    case K::Symmetric: return "S" + std::to_string(spec.k);
    case K::Alternating: return "A" + std::to_string(spec.k);
    case K::Dihedral: return "D" + std::to_string(spec.k);
    case K::Quaternion: return "Q8";
    case K::PQ: return "pq(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
    case K::Permutation: {
      std::string out = "perm:";
      for (std::size_t g = 0; g < spec.permutation_generators.size(); ++g) {
        if (g) out += ";";
        const auto& cycles = spec.permutation_generators[g];
        if (cycles.empty()) out += "()";
        for (const auto& cycle : cycles) {
          out += "(";
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cycle[i]);
          }
          out += ")";
        }
      }
      return out;
    }
    case K::Table: return "table:" + spec.path;
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (i) out += "x";
        // A table path swallows the rest of the input, so it can only be
        // printed bare in last position.
        const auto& child = spec.children[i];
        bool bare_table = child.kind == K::Table && i + 1 == spec.children.size();
        out += bare_table ? print_spec(child) : print_factor(child);
      }
      return out;
    }
    case K::Power: {
      const GroupSpec& base = spec.children.front();
      bool wrap = base.kind == K::Product || base.kind == K::Power || base.kind == K::Table;
      std::string text = print_spec(base);
      return (wrap ? "(" + text + ")" : text) + "^" + std::to_string(spec.k);
    }
  }
  return {};
}

FiniteGroup construct_group(const GroupSpec& spec, const Limits& limits) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return cyclic_group(spec.k, limits);
    case K::Symmetric: return symmetric_group(spec.k, limits);
    case K::Alternating: return alternating_group(spec.k, limits);
    case K::Dihedral: return dihedral_group(spec.k, limits);
    case K::Quaternion: return quaternion_group();
    case K::PQ: return pq_group(spec.p, spec.q, limits);
    case K::Permutation: {
      std::uint32_t degree = 1;
      for (const auto& gen : spec.permutation_generators) {
        for (const auto& cycle : gen) {
          for (auto point : cycle) degree = std::max(degree, point);
        }
      }
      std::vector<Permutation> gens;
      for (const auto& gen : spec.permutation_generators) {
        gens.push_back(permutation_from_cycles(gen, degree));
      }
      return permutation_group(gens, degree, limits).renamed(print_spec(spec));
    }
    case K::Table: return read_table_file(spec.path, limits).renamed(print_spec(spec));
    case K::Product: {
      std::vector<FiniteGroup> factors;
      for (const auto& child : spec.children) factors.push_back(construct_group(child, limits));
      return direct_product(factors, limits).renamed(print_spec(spec));
    }
    case K::Power: {
      std::vector<FiniteGroup> factors(spec.k, construct_group(spec.children.front(), limits));
      return direct_product(factors, limits).renamed(print_spec(spec));
    }
  }
  throw Error(ErrorKind::InvalidSpec, "unknown spec kind");
}

FiniteGroup construct_group(std::string_view text, const Limits& limits) {
  return construct_group(parse_spec(text), limits);
}

}  // namespace homcover
