#include "tautring/monoparse.hpp"

#include <cctype>
#include <stdexcept>

namespace tautring {

namespace {

[[noreturn]] void fail(const std::string& text, const std::string& why) {
  throw std::invalid_argument("bad monomial '" + text + "': " + why);
}

Side parse_side(const Ctx& ctx, const std::string& text, const std::string& body) {
  Side side = 0;
  auto add_element = [&](long v) {
    if (v < 1 || v > ctx.d) fail(text, "element " + std::to_string(v) + " outside 1.." +
                                           std::to_string(ctx.d));
    side |= Side(1u) << (v - 1);
  };
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail(text, "unterminated '{'");
    std::string inner = body.substr(1, body.size() - 2);
    size_t pos = 0;
    while (pos < inner.size()) {
      size_t next = inner.find(',', pos);
      std::string elem = inner.substr(pos, next == std::string::npos ? next : next - pos);
      if (elem.empty()) fail(text, "empty element in side list");
      for (char c : elem)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(text, "non-digit element");
      add_element(std::stol(elem));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    // Compact form: one digit per element.
    if (body.empty()) fail(text, "missing side");
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(text, "non-digit element");
      add_element(c - '0');
    }
  }
  if (side == 0) fail(text, "empty side");
  return side;
}

}  // namespace

Poly parse_monomial(const Ctx& ctx, const std::string& text) {
  std::vector<std::uint8_t> exps(ctx.namb(), 0);
  size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string factor =
        text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (factor.empty()) fail(text, "empty factor");
    int exp = 1;
    size_t caret = factor.find('^');
    std::string name = factor;
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string e = factor.substr(caret + 1);
      if (e.empty()) fail(text, "missing exponent after '^'");
      for (char c : e)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(text, "non-numeric exponent");
      exp = std::stoi(e);
      if (exp < 0 || exp > 200) fail(text, "exponent out of range");
    }
    int var = -1;
    if (name == "k2") {
      var = ctx.amb_k2();
    } else if (name == "k3") {
      var = ctx.amb_k3();
    } else if (!name.empty() && (name[0] == 'D' || name[0] == 'F')) {
      if (ctx.d < 2) fail(text, "no boundary generators for degree 1");
      Side side = parse_side(ctx, text, name.substr(1));
      if (side == ctx.parts.full()) fail(text, "side equals the whole degree set");
      int p = ctx.parts.index_of_side(side);
      if (p < 0) fail(text, "side does not define a partition");
      if (name[0] == 'D') {
        var = ctx.amb_D(p);
      } else {
        if (side != ctx.parts.part(p).canon)
          fail(text, "node generators use the side containing 1: " +
                         f_var_name(ctx.parts.part(p)));
        var = ctx.amb_F(p);
      }
    } else {
      fail(text, "unknown generator '" + name + "'");
    }
    int total = int(exps[var]) + exp;
    if (total > 255) fail(text, "exponent out of range");
    exps[var] = std::uint8_t(total);
    any = true;
  }
  if (!any) fail(text, "empty monomial");
  return Poly::monomial(std::move(exps), Rat(1));
}

std::vector<Poly> parse_monomials(const Ctx& ctx, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_monomial(ctx, t));
  return out;
}

}  // namespace tautring
