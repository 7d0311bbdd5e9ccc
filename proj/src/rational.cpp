#include "sgo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sgo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

Integer ten_pow(unsigned long e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, e);
  return z;
}

Rational parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    Integer ez = parse_integer(exp_part);
    if (!ez.fits_slong_p() || abs(ez) > 100000)
      throw std::invalid_argument("decimal exponent out of range");
    exponent = ez.get_si();
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed decimal");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("malformed decimal");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number");
    digits = std::string(s);
  }
  Rational q{Integer(digits, 10)};
  long shift = exponent - frac_len;
  if (shift > 0)
    q *= ten_pow(static_cast<unsigned long>(shift));
  else if (shift < 0)
    q /= ten_pow(static_cast<unsigned long>(-shift));
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Integer num = parse_integer(text.substr(0, slash));
      std::string_view den_text = text.substr(slash + 1);
      if (!den_text.empty() && den_text.front() == '-')
        throw std::invalid_argument("negative denominator");
      Integer den = parse_integer(den_text);
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("cannot parse number '" + std::string(text) + "': " + e.what());
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();

  // Find e with 10^(digits-1) <= |q| * 10^e < 10^digits.
  long e = static_cast<long>(digits) -
           (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
            static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)));
  const Integer lo = ten_pow(static_cast<unsigned long>(digits - 1));
  const Integer hi = ten_pow(static_cast<unsigned long>(digits));
  auto scaled = [&](long shift) {
    Rational s(num, den);
    if (shift > 0)
      s *= ten_pow(static_cast<unsigned long>(shift));
    else if (shift < 0)
      s /= ten_pow(static_cast<unsigned long>(-shift));
    return s;
  };
  Rational s = scaled(e);
  while (s >= hi) s = scaled(--e);
  while (s < lo) s = scaled(++e);

  // Round half to even.
  Integer n, rem;
  mpz_fdiv_qr(n.get_mpz_t(), rem.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
  int cmp = mpz_cmp(Integer(2 * rem).get_mpz_t(), s.get_den().get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(n.get_mpz_t()))) ++n;
  if (n == hi) {
    n = lo;
    --e;
  }

  std::string mant = n.get_str();  // exactly `digits` characters
  // value = mant * 10^(-e); decimal point sits after (digits - e) characters.
  long point = static_cast<long>(digits) - e;
  std::string out;
  if (point > 40 || point < -20) {
    std::string frac = mant.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = mant.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(point - 1);
  } else if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mant;
  } else if (point >= static_cast<long>(mant.size())) {
    out = mant + std::string(static_cast<std::size_t>(point - static_cast<long>(mant.size())), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(point)) + "." + mant.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return q < 0 ? "-" + out : out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer z;
  mpz_pow_ui(z.get_mpz_t(), base.get_mpz_t(), exponent);
  return z;
}

Rational pow_rat(const Rational& base, unsigned long exponent) {
  Rational q(pow_int(base.get_num(), exponent), pow_int(base.get_den(), exponent));
  q.canonicalize();
  return q;
}

Integer ceil(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return z;
}

}  // namespace sgo
