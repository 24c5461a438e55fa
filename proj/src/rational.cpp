#include "reeb_orbit/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "reeb_orbit/errors.hpp"

namespace reeb_orbit {

mpz_class rat_floor(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q) || !q.get_num().fits_slong_p())
    throw InvariantError("expected a small integer, got " + rat_str(q));
  return q.get_num().get_si();
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      neg = num[0] == '-';
      num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) return std::nullopt;
    Rat r(neg ? mpz_class(-p) : p, q);
    r.canonicalize();
    return r;
  }

  // [sign] digits [. digits] [eE [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string intpart, fracpart, exppart;
  bool expneg = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    intpart.push_back(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      fracpart.push_back(s[i++]);
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      expneg = s[i] == '-';
      ++i;
    }
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      exppart.push_back(s[i++]);
    if (exppart.empty()) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  if (intpart.empty() && fracpart.empty()) return std::nullopt;

  mpz_class mantissa((intpart.empty() ? "0" : intpart) + fracpart, 10);
  if (neg) mantissa = -mantissa;
  mpz_class den(1);
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fracpart.size());
  Rat r(mantissa, den);
  if (!exppart.empty()) {
    unsigned long e = std::strtoul(exppart.c_str(), nullptr, 10);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, e);
    if (expneg)
      r /= Rat(p10);
    else
      r *= Rat(p10);
  }
  r.canonicalize();
  return r;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw InvariantError("non-finite value");
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

}  // namespace reeb_orbit
