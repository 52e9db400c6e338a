#include "spinal/wordio.hpp"

#include <sstream>

namespace spinal {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

long long parse_ll(const std::string& s) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    require(used == s.size(), errc::parse_error, "bad integer '" + s + "'");
    return v;
  } catch (const error&) {
    throw;
  } catch (...) {
    fail(errc::parse_error, "bad integer '" + s + "'");
  }
}

}  // namespace

reduced_word parse_word(const std::string& text, int p, int r) {
  word_builder builder(p, r);
  std::istringstream is(text);
  std::string token;
  bool any = false;
  while (std::getline(is, token, '*')) {
    token = trim(token);
    require(!token.empty(), errc::parse_error, "empty factor in word");
    any = true;
    if (token == "1") continue;
    std::string name = token;
    long long exp = 1;
    size_t car = token.find('^');
    if (car != std::string::npos) {
      name = trim(token.substr(0, car));
      exp = parse_ll(trim(token.substr(car + 1)));
    }
    if (name == "a") {
      builder.push_a(exp);
    } else if (name.size() >= 2 && name[0] == 'b') {
      long long idx = parse_ll(name.substr(1));
      require(idx >= 1 && idx <= r, errc::parse_error,
              "generator '" + name + "' out of range for r = " + std::to_string(r));
      builder.push_b(static_cast<int>(idx), exp);
    } else {
      fail(errc::parse_error, "unknown generator '" + name + "'");
    }
  }
  require(any, errc::parse_error, "empty word text");
  return builder.build();
}

std::string format_word(const reduced_word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, int exp) {
    if (exp == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (exp != 1) os << '^' << exp;
  };
  const auto& a = w.a_exponents();
  const auto& syl = w.syllables();
  for (size_t j = 0; j < syl.size(); ++j) {
    emit("a", a[j]);
    for (int i = 0; i < w.r(); ++i) emit("b" + std::to_string(i + 1), syl[j].beta[i]);
  }
  emit("a", a.back());
  return os.str();
}

}  // namespace spinal
