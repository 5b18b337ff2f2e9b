#include "grc/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace grc {

namespace detail {

struct CycloField {
  long e = 1;
  long phi = 1;
  // Monic cyclotomic polynomial, lowest degree first, size phi + 1.
  std::vector<long> poly;
  // powers[i] = coordinates of z^i for 0 <= i < e.
  std::vector<std::vector<long>> powers;
};

}  // namespace detail

namespace {

using detail::CycloField;

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<long>& cyclotomic_polynomial_locked(long n) {
  static std::map<long, std::vector<long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // X^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_divide_exact(std::move(p), cyclotomic_polynomial_locked(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

const CycloField* field_for(long e) {
  if (e < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex m;
  static std::map<long, std::unique_ptr<CycloField>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second.get();

  auto f = std::make_unique<CycloField>();
  f->e = e;
  f->poly = cyclotomic_polynomial(e);
  f->phi = static_cast<long>(f->poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(f->phi);
  f->powers.assign(static_cast<std::size_t>(e), std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (long i = 0; i < e; ++i) {
    f->powers[static_cast<std::size_t>(i)] = cur;
    // multiply by z and reduce
    const long top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * f->poly[j];
    }
  }
  const CycloField* raw = f.get();
  cache.emplace(e, std::move(f));
  return raw;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard lock(poly_mutex());
  return cyclotomic_polynomial_locked(n);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("bad rational literal '" + std::string(text) + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

Cyclo::Cyclo() : field_(field_for(1)), coords_(1) {}

Cyclo::Cyclo(long value) : field_(field_for(1)), coords_{Rational(value)} {}

Cyclo::Cyclo(const Rational& value) : field_(field_for(1)), coords_{value} {}

Cyclo::Cyclo(const CycloField* field, std::vector<Rational> coords)
    : field_(field), coords_(std::move(coords)) {}

Cyclo Cyclo::root(long e, long k) {
  const CycloField* f = field_for(e);
  const auto& p = f->powers[static_cast<std::size_t>(mod(k, e))];
  std::vector<Rational> c(p.begin(), p.end());
  return Cyclo(f, std::move(c));
}

Cyclo Cyclo::from_coords(long e, std::vector<Rational> coords) {
  const CycloField* f = field_for(e);
  if (static_cast<long>(coords.size()) != f->phi) {
    throw std::invalid_argument("coordinate vector length must equal phi(e)");
  }
  return Cyclo(f, std::move(coords));
}

long Cyclo::conductor() const { return field_->e; }

bool Cyclo::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool Cyclo::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return sgn(r) == 0; });
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coords_[0];
}

void Cyclo::lift_in_place(long e) {
  if (e == field_->e) return;
  if (e % field_->e != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  const CycloField* target = field_for(e);
  const long step = e / field_->e;
  std::vector<Rational> out(static_cast<std::size_t>(target->phi));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    const auto& p = target->powers[static_cast<std::size_t>(static_cast<long>(j) * step % e)];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != 0) out[i] += coords_[j] * p[i];
    }
  }
  field_ = target;
  coords_ = std::move(out);
}

Cyclo Cyclo::lift(long e) const {
  Cyclo r = *this;
  r.lift_in_place(e);
  return r;
}

Cyclo Cyclo::galois(long k) const {
  const long e = field_->e;
  if (gcd(mod(k, e), e) != 1 && e != 1) {
    throw std::invalid_argument("galois exponent must be coprime to the conductor");
  }
  if (e == 1) return *this;
  std::vector<Rational> out(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    const auto& p = field_->powers[static_cast<std::size_t>(mod(static_cast<long>(j) * k, e))];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != 0) out[i] += coords_[j] * p[i];
    }
  }
  return Cyclo(field_, std::move(out));
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) return Cyclo(field_, [&] {
      std::vector<Rational> c(coords_.size());
      c[0] = 1 / coords_[0];
      return c;
    }());
  // x^-1 = (prod of the other conjugates) / norm(x)
  const long e = field_->e;
  Cyclo others(field_, std::vector<Rational>(coords_.size()));
  others.coords_[0] = 1;
  for (long k = 2; k < e; ++k) {
    if (gcd(k, e) == 1) others *= galois(k);
  }
  const Rational norm = (*this * others).to_rational();
  others *= Rational(1 / norm);
  return others;
}

Cyclo Cyclo::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclo base = *this;
  Cyclo result(field_, std::vector<Rational>(coords_.size()));
  result.coords_[0] = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Cyclo Cyclo::compact() const {
  if (field_->e == 1 || !is_rational()) return *this;
  return Cyclo(coords_[0]);
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

void Cyclo::add_scaled(const Cyclo& other, const Rational& scale) {
  if (other.field_ == field_) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (sgn(other.coords_[i]) != 0) coords_[i] += scale * other.coords_[i];
    }
    return;
  }
  const long e = lcm(field_->e, other.field_->e);
  lift_in_place(e);
  if (other.field_->e == e) {
    add_scaled(other, scale);
  } else {
    add_scaled(other.lift(e), scale);
  }
}

Cyclo& Cyclo::operator*=(const Rational& scalar) {
  for (auto& c : coords_) {
    if (sgn(c) != 0) c *= scalar;
  }
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& other) {
  if (other.field_->e == 1) return *this *= other.coords_[0];
  if (field_->e == 1) {
    const Rational s = coords_[0];
    *this = other;
    return *this *= s;
  }
  if (is_rational() && field_->e % other.field_->e == 0) {
    const Rational s = coords_[0];
    const long e = field_->e;
    *this = other;
    lift_in_place(e);
    return *this *= s;
  }
  if (other.is_rational() && field_->e % other.field_->e == 0) return *this *= other.coords_[0];
  if (other.field_ != field_) {
    const long e = lcm(field_->e, other.field_->e);
    lift_in_place(e);
    if (other.field_->e != e) return *this *= other.lift(e);
  }
  const auto phi = static_cast<std::size_t>(field_->phi);
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(other.coords_[j]) == 0) continue;
      prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  const auto& poly = field_->poly;
  Rational tmp;
  for (std::size_t k = prod.size(); k-- > phi;) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (poly[j] == 0) continue;
      tmp = prod[k] * poly[j];
      prod[k - phi + j] -= tmp;
    }
  }
  prod.resize(phi);
  coords_ = std::move(prod);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& other) { return *this *= other.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  const long e = lcm(a.field_->e, b.field_->e);
  return a.lift(e).coords_ == b.lift(e).coords_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  const long e = lcm(a.conductor(), b.conductor());
  const Cyclo la = a.lift(e);
  const Cyclo lb = b.lift(e);
  for (std::size_t i = 0; i < la.coords_.size(); ++i) {
    const int c = cmp(la.coords_[i], lb.coords_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclo::to_string(long e) const {
  const Cyclo v = lift(e);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.coords_.size(); ++k) {
    const Rational& c = v.coords_[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    const Rational mag = first ? c : Rational(abs(c));
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag == 1) {
      } else if (mag == -1) {
        os << '-';
      } else {
        os << mag.get_str() << '*';
      }
      os << 'z';
      if (k != 1) os << '^' << k;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Cyclo Cyclo::parse(std::string_view text, long e) {
  const CycloField* f = field_for(e);
  Cyclo result(f, std::vector<Rational>(static_cast<std::size_t>(f->phi)));
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty cyclotomic literal");
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    int sign = 1;
    if (term.front() == '+' || term.front() == '-') {
      sign = term.front() == '-' ? -1 : 1;
      term.erase(0, 1);
    }
    if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
    const auto zpos = term.find('z');
    Rational coeff(1);
    long k = 0;
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, zpos);
      std::string tail = term.substr(zpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before z in '" + term + "'");
        head.pop_back();
        coeff = parse_rational(head);
      }
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) throw ParseError("bad exponent in '" + term + "'");
        try {
          std::size_t used = 0;
          k = std::stol(tail.substr(1), &used);
          if (used != tail.size() - 1) throw ParseError("bad exponent in '" + term + "'");
        } catch (const std::logic_error&) {
          throw ParseError("bad exponent in '" + term + "'");
        }
      } else {
        k = 1;
      }
    }
    result.add_scaled(root(e, k), coeff * sign);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.to_string(); }

Integer denominator_lcm(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Integer denominator_lcm(std::span<const Cyclo> values) {
  Integer l = 1;
  for (const auto& v : values) {
    const Rational r = v.to_rational();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  return l;
}

}  // namespace grc
